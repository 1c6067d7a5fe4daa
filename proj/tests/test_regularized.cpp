#include <doctest.h>

#include "freeboson/regularized.hpp"
#include "freeboson/series.hpp"

using namespace freeboson;

namespace {

// B_n from sum_{k<=n} C(n+1, k) B_k = 0
std::vector<Scalar> bernoulli_by_recurrence(int n) {
    std::vector<Scalar> b{Scalar(1)};
    for (int m = 1; m <= n; ++m) {
        Scalar s;
        for (int k = 0; k < m; ++k) {
            s += binomial(m + 1, k) * b[k];
        }
        b.push_back(-s / Scalar(m + 1));
    }
    return b;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Scalar(1));
    CHECK(bernoulli(1) == Scalar(-1, 2));
    CHECK(bernoulli(2) == Scalar(1, 6));
    const auto oracle = bernoulli_by_recurrence(20);
    for (int k = 0; k <= 20; ++k) {
        CHECK(bernoulli(k) == oracle[k]);
    }
    // sum_k B_k x^k / k! times (e^x - 1)/x is 1
    const auto u = em1_unit_coeffs(20);
    for (int n = 0; n <= 20; ++n) {
        Scalar s;
        for (int k = 0; k <= n; ++k) {
            s += bernoulli(k) / factorial(static_cast<unsigned>(k)) * u[n - k];
        }
        CHECK(s == Scalar(n == 0 ? 1 : 0));
    }
}

TEST_CASE("zeta values at negative integers") {
    CHECK(zeta_neg(2) == Scalar(-1, 12));
    CHECK(zeta_neg(4) == Scalar(1, 120));
    CHECK(zeta_neg(6) == Scalar(-1, 252));
    CHECK(zeta_neg(3) == Scalar(0));
    CHECK_THROWS(zeta_neg(1));
    CHECK(regularization_constant(0) == Scalar(-1, 24));
    CHECK(regularization_constant(1) == Scalar(-1, 240));
    CHECK(regularization_constant(2) == Scalar(-1, 504));
    CHECK(regularization_constant(3) == Scalar(-1, 480));
}

TEST_CASE("quadratic operators on small vectors") {
    const FockVector vac = FockVector::vacuum();
    const FockVector h1(Partition{1});
    CHECK(virasoro_apply(0, h1) == h1);
    CHECK(virasoro_apply(-1, vac).is_zero());
    CHECK(virasoro_bar_apply(0, vac) == Scalar(-1, 24) * vac);
    CHECK(virasoro_apply(-2, vac) == Scalar(1, 2) * FockVector(Partition{1, 1}));
}

TEST_CASE("quadratic operators shift the weight by -n") {
    for (const auto& b : basis_up_to(5)) {
        const FockVector v(b);
        for (int r = 0; r <= 2; ++r) {
            for (int n = -3; n <= 3; ++n) {
                const FockVector out = quad_apply({r, r, n, false}, v);
                for (const auto& [w, part] : weight_components(out)) {
                    CHECK(w == b.weight() - n);
                }
            }
        }
    }
}

TEST_CASE("regularization only changes the zero mode") {
    for (const auto& b : basis_up_to(5)) {
        const FockVector v(b);
        for (int r = 0; r <= 3; ++r) {
            for (int n = -3; n <= 3; ++n) {
                const FockVector plain = quad_apply({r, r, n, false}, v);
                const FockVector reg = quad_apply({r, r, n, true}, v);
                if (n == 0) {
                    CHECK(reg - plain == regularization_constant(r) * v);
                } else {
                    CHECK(reg == plain);
                }
            }
        }
    }
}

TEST_CASE("virasoro brackets") {
    auto r = virasoro_check(1, -1, 6);
    CHECK(r.passed());
    CHECK(r.details["central_term"] == "0");
    r = virasoro_check(2, -2, 6);
    CHECK(r.passed());
    CHECK(r.details["central_term"] == "1/2");
    CHECK(virasoro_check(1, 1, 4).passed());
    r = modified_virasoro_check(1, -1, 6);
    CHECK(r.passed());
    CHECK(r.details["central_term"] == "1/12");
    r = modified_virasoro_check(2, -2, 6);
    CHECK(r.details["central_term"] == "2/3");
    for (int n = -3; n <= 3; ++n) {
        CHECK(modified_virasoro_check(0, n, 4).passed());
    }
}

TEST_CASE("central terms are pure monomials") {
    CHECK(central_term(0, 0, 1) == Scalar(1, 12));
    CHECK(central_term(0, 0, 2) == Scalar(8, 12));
    const auto r = pure_monomial_check(1, 1, {1, 2, 3});
    CHECK(r.passed());
    const auto r0 = pure_monomial_check(0, 0, {1, 2, 3, 4});
    CHECK(r0.passed());
    CHECK(r0.details["constant"] == "1/12");
}

TEST_CASE("generating function coefficients") {
    for (const auto& b : basis_up_to(6)) {
        const FockVector v(b);
        for (int n = -3; n <= 3; ++n) {
            CHECK(gen_quadratic_coeff(0, 0, n, false, v) == virasoro_apply(n, v));
            // (r!)^2 times the diagonal coefficient is L^(r)(n), regularized or not
            for (int r = 0; r <= 2; ++r) {
                const Scalar f = factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(r));
                CHECK(f * gen_quadratic_coeff(r, r, n, true, v) == quad_apply({r, r, n, true}, v));
                CHECK(f * gen_quadratic_coeff(r, r, n, false, v) == quad_apply({r, r, n, false}, v));
            }
        }
    }
}

TEST_CASE("scalar part of the regularized generating function") {
    // (1/2) g(y1 - y2) with g(s) = s^-2 + sum_r zeta(-2r-1) s^{2r} / (2r)!
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            Scalar expected;
            if ((a + b) % 2 == 0) {
                const int k = a + b;
                expected = Scalar(1, 2) * zeta_neg(k + 2) / factorial(static_cast<unsigned>(k)) * binomial(k, a) *
                           Scalar(b % 2 == 0 ? 1 : -1);
            }
            CHECK(gen_quadratic_scalar(a, b) == expected);
        }
    }
    CHECK(gen_quadratic_coeff(1, 0, 0, true, FockVector::vacuum()).is_zero());
}

TEST_CASE("wick expansion") {
    CHECK(wick_check(3, 4).passed());
    CHECK(wick_check(2, 3, 2).passed());
}

TEST_CASE("four-variable commutator identity at small orders") {
    Theorem1Params p;
    p.y_orders = {0, 0, 0, 0};
    p.x_window = 2;
    p.max_weight = 4;
    auto r = theorem1_check(p);
    CHECK(r.passed());
    CHECK(r.details["virasoro_slice"] == "agrees");
    p.y_orders = {1, 1, 1, 1};
    r = theorem1_check(p);
    CHECK(r.passed());
    CHECK(r.details["diagonal"] == "agrees");
    // [Lbar(2), Lbar(-2)] vac = 4 Lbar(0) vac + 8/12 vac
    for (const auto& [alpha, lhs, rhs] : theorem1_coefficients({0, 0, 0, 0}, 2, -2, FockVector::vacuum())) {
        CHECK(alpha == Exponents{0, 0, 0, 0});
        CHECK(lhs == (Scalar(4) * Scalar(-1, 24) + Scalar(8, 12)) * FockVector::vacuum());
        CHECK(rhs == lhs);
    }
}
