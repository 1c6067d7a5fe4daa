#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeboson/fock.hpp"
#include "freeboson/report.hpp"
#include "freeboson/series.hpp"

namespace freeboson {

enum class TheoremId { newjacobi, comm, genjacobi, gencomm, fourterm, specialize, bridge };

std::string to_string(TheoremId id);
TheoremId parse_theorem(const std::string& name);

/// Inputs shared by the theorem checks. Vectors default to h(-1) 1.
struct TheoremParams {
    FockVector u;
    FockVector v;
    FockVector u1;
    FockVector v1;
    FockVector u2;
    FockVector v2;
    /// Empty: every basis monomial of weight <= max_weight.
    std::vector<FockVector> targets;
    /// Per formal variable, in the order documented for each identity; the last
    /// entry repeats.
    std::vector<int> y_orders{2};
    int x_window = 3;
    int max_weight = 4;
    /// Caps on the nested bracket exponents of FOURTERM; empty means exact.
    std::vector<int> inner_orders;

    TheoremParams();
    [[nodiscard]] int order(std::size_t i) const;
    [[nodiscard]] std::vector<FockVector> target_list() const;
};

/// Both sides of an identity at one coefficient.
struct SidePair {
    FockVector lhs;
    FockVector rhs;
};

/// x0^a x1^b x2^c coefficient of the logarithmic Jacobi identity applied to w.
/// Throws WindowInsufficient when a exceeds y_order.
SidePair newjacobi_coefficient(const FockVector& u, const FockVector& v, const FockVector& w, int a, int b, int c,
                               int y_order);

/// x1^{-m} x2^{-n} coefficient of the commutator formula applied to w.
SidePair comm_coefficient(const FockVector& u, const FockVector& v, const FockVector& w, int m, int n, int y_order);

/// x0^a x1^b x2^c y1^p y2^q w1^i w2^j coefficient of the composite identity.
SidePair genjacobi_coefficient(const FockVector& u1, const FockVector& v1, const FockVector& u2, const FockVector& v2,
                               const FockVector& w, const std::vector<int>& exps);

/// Identity checks:
///   NEWJACOBI  y_orders = {y01}
///   COMM       y_orders = {y}
///   GENJACOBI  y_orders = {y1, y2, w1, w2}, targets of weight <= max_weight
///   GENCOMM    y_orders = {y1, y2, w1, w2}
///   FOURTERM   y_orders = {y1, y2}
///   SPECIALIZE y_orders = {y1, y2, y3, y4}
///   BRIDGE     y_orders = {K}: y in [-2, K-1], w in [0, K]
CheckReport theorem_check(TheoremId id, const TheoremParams& params);

/// Res_{x0} of the logarithmic Jacobi identity, computed on its right side by
/// the change of variables x0 = x1 (1 - e^y), against the commutator formula.
CheckReport residue_link_check(const TheoremParams& params);

/// Res_x h(x) = Res_y h(F(y)) F'(y) for one pair; h in x only, F in y only.
bool residue_change_holds(const ScalarSeries& h, const ScalarSeries& f);

/// `cases` seeded random instances of the residue change of variables.
CheckReport residue_change_check(std::uint64_t seed, int cases = 50);

}  // namespace freeboson
