#pragma once

#include <string>
#include <vector>

#include "freeboson/fock.hpp"
#include "freeboson/report.hpp"
#include "freeboson/series.hpp"

namespace freeboson {

/// Rank-one free boson vertex operator algebra on S.
struct VoaConfig {
    Scalar rank{1};
    FockVector vacuum;
    FockVector omega;  // (1/2) h(-1)^2 1
};

const VoaConfig& free_boson();

/// h(-1) 1
FockVector v0();

/// u_n v, from Y(h(-n1)...h(-nk)1, x) = :prod_i d^{(n_i - 1)} h(x):, with
/// h(x) = sum h(m) x^{-m-1} and d^{(k)} = (1/k!) (d/dx)^k. Results on basis
/// monomials are memoised.
FockVector vertex_mode(const FockVector& u, int n, const FockVector& v);

/// Coefficient of x^{-n} in X(u, x) = Y(x^{L(0)} u, x) applied to v.
FockVector x_mode(const FockVector& u, int n, const FockVector& v);

/// Y[u, y] v = Y(e^{y L(0)} u, e^y - 1) v, from its lowest power up to y^order.
VectorSeries y_bracket_apply(const FockVector& u, const FockVector& v, int order, const std::string& y = "y");

/// Lowest power of y that can occur in Y[u, y] v.
int bracket_lowest_power(const FockVector& u, const FockVector& v);

/// Coefficient of y^k in Y[u, y] v (memoised).
FockVector bracket_coeff(const FockVector& u, int k, const FockVector& v);

enum class Axiom { lower_truncation, vacuum, creation, derivative, grading };

std::string to_string(Axiom a);
Axiom parse_axiom(const std::string& name);

/// Checks one axiom on every basis vector of weight <= max_weight, with
/// modes |n| <= mode_window where modes are sampled.
CheckReport axiom_check(Axiom axiom, int max_weight, int mode_window);

/// Jacobi identity applied to `target`, coefficients x0^a x1^b x2^c, |a|,|b|,|c| <= window.
CheckReport jacobi_check(const FockVector& u, const FockVector& v, const FockVector& target, int window);

/// u_k v for homogeneous pieces: the largest weight among stored monomials.
int weight_bound(const FockVector& v);

}  // namespace freeboson
