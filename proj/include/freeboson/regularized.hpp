#pragma once

#include <functional>
#include <vector>

#include "freeboson/fock.hpp"
#include "freeboson/report.hpp"
#include "freeboson/scalar.hpp"
#include "freeboson/series.hpp"

namespace freeboson {

/// B_0..B_K from x/(e^x - 1) = sum B_k x^k / k!, so B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_k);

    [[nodiscard]] int max_k() const { return static_cast<int>(values_.size()) - 1; }
    [[nodiscard]] const Scalar& operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<Scalar>& values() const { return values_; }

private:
    std::vector<Scalar> values_;
};

/// Shared read-only table covering at least B_0..B_k.
const BernoulliTable& bernoulli_table(int k);

Scalar bernoulli(int k);

/// zeta(1 - k) = -B_k / k for k >= 2. k = 1 is rejected.
Scalar zeta_neg(int k);

/// (-1)^r (1/2) zeta(-2r-1), the constant added to L^(r)(0).
Scalar regularization_constant(int r);

struct QuadraticOpSpec {
    int r_left = 0;
    int r_right = 0;
    int n = 0;
    bool regularized = false;
};

/// sum_j c(j) :h(j) h(n-j): v over the finitely many j that act nontrivially.
FockVector normal_quadratic(int n, const std::function<Scalar(int)>& c, const FockVector& v);

/// (1/2) sum_j :j^{r1} h(j) (n-j)^{r2} h(n-j): v, plus the zeta constant for the
/// regularized n = 0 operator with r1 = r2.
FockVector quad_apply(const QuadraticOpSpec& spec, const FockVector& v);

/// L(n) v and the regularized Lbar(n) v.
FockVector virasoro_apply(int n, const FockVector& v);
FockVector virasoro_bar_apply(int n, const FockVector& v);

CheckReport virasoro_check(int m, int n, int max_weight);
CheckReport modified_virasoro_check(int m, int n, int max_weight);

/// Scalar part lambda of [Lbar^(r)(m), Lbar^(s)(-m)] on weight <= max_weight
/// (max_weight < 0 selects the default 2r + 2s + 4). Throws std::runtime_error
/// when the identity component is not consistently determined.
Scalar central_term(int r, int s, int m, int max_weight = -1);

/// lambda(m) / m^{2r+2s+3} over the given modes; the report records the ratios.
CheckReport pure_monomial_check(int r, int s, const std::vector<int>& modes, int max_weight = -1);

/// Coefficient of y1^a y2^b x^{-n} in L^{(y1,y2)}(x) (or its regularized
/// version) applied to v.
FockVector gen_quadratic_coeff(int a, int b, int n, bool regularized, const FockVector& v);

/// Scalar part (on the vacuum) of the same coefficient of the regularized
/// generating function.
Scalar gen_quadratic_scalar(int a, int b);

/// h(x1) h(x2) = :h(x1) h(x2): + x2 d/dx2 (1 - x2/x1)^{-1} on weight <= W,
/// optionally after x1 -> e^{y1} x1, x2 -> e^{y2} x2 to the given y-order.
CheckReport wick_check(int window, int max_weight, int y_order = -1);

struct Theorem1Params {
    std::vector<int> y_orders{2, 2, 2, 2};
    int x_window = 3;
    int max_weight = 6;
};

CheckReport theorem1_check(const Theorem1Params& params);

/// Both sides of the four-variable commutator identity at x1^{-m} x2^{-n},
/// applied to v, for every y-exponent in the box 0 <= alpha_i <= y_orders[i].
struct Theorem1Coefficient {
    Exponents alpha;
    FockVector lhs;
    FockVector rhs;
};
std::vector<Theorem1Coefficient> theorem1_coefficients(const std::vector<int>& y_orders, int m, int n,
                                                       const FockVector& v);

}  // namespace freeboson
