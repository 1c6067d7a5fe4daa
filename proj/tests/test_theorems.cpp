#include <doctest.h>

#include "freeboson/regularized.hpp"
#include "freeboson/theorems.hpp"
#include "freeboson/voa.hpp"

using namespace freeboson;

namespace {

const FockVector vac = FockVector::vacuum();

std::vector<FockVector> basis_vectors(int w) {
    std::vector<FockVector> out;
    for (const auto& p : basis_up_to(w)) {
        out.emplace_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("identity names round trip") {
    for (auto id : {TheoremId::newjacobi, TheoremId::comm, TheoremId::genjacobi, TheoremId::gencomm,
                    TheoremId::fourterm, TheoremId::specialize, TheoremId::bridge}) {
        CHECK(parse_theorem(to_string(id)) == id);
    }
    CHECK_THROWS(parse_theorem("ZHU"));
}

TEST_CASE("commutator formula against the Heisenberg and Virasoro brackets") {
    const FockVector& omega = free_boson().omega;
    for (const auto& w : basis_vectors(3)) {
        for (int m = -3; m <= 3; ++m) {
            for (int n = -3; n <= 3; ++n) {
                const Scalar delta(m + n == 0 ? 1 : 0);
                auto s = comm_coefficient(v0(), v0(), w, m, n, 2);
                CHECK(s.lhs == Scalar(m) * delta * w);
                CHECK(s.rhs == s.lhs);

                s = comm_coefficient(omega, v0(), w, m, n, 2);
                CHECK(s.rhs == Scalar(-n) * h_apply(m + n, w));
                CHECK(s.lhs == s.rhs);

                s = comm_coefficient(omega, omega, w, m, n, 3);
                const FockVector expected = Scalar(m - n) * virasoro_apply(m + n, w) +
                                            Scalar(m * m * m - m, 12) * delta * w;
                CHECK(s.rhs == expected);
                CHECK(s.lhs == s.rhs);
            }
        }
    }
}

TEST_CASE("logarithmic Jacobi identity") {
    TheoremParams p;
    p.max_weight = 3;
    auto r = theorem_check(TheoremId::newjacobi, p);
    CHECK(r.passed());
    CHECK(r.coefficients_checked > 0);
    p.u = free_boson().omega;
    CHECK(theorem_check(TheoremId::newjacobi, p).passed());
    CHECK_THROWS_AS(newjacobi_coefficient(v0(), v0(), vac, 3, 0, 0, 2), WindowInsufficient);
    // the left side is nontrivial somewhere
    bool nonzero = false;
    for (int b = -3; b <= 3 && !nonzero; ++b) {
        for (int c = -3; c <= 3 && !nonzero; ++c) {
            nonzero = !newjacobi_coefficient(v0(), v0(), vac, -1, b, c, 2).lhs.is_zero();
        }
    }
    CHECK(nonzero);
}

TEST_CASE("commutator identity and its residue link") {
    TheoremParams p;
    p.max_weight = 3;
    CHECK(theorem_check(TheoremId::comm, p).passed());
    CHECK(residue_link_check(p).passed());
    p.u = free_boson().omega;
    CHECK(theorem_check(TheoremId::comm, p).passed());
    CHECK(residue_link_check(p).passed());
}

TEST_CASE("composite Jacobi identity reduces to the logarithmic one") {
    const std::vector<FockVector> us{v0(), free_boson().omega};
    for (const auto& u1 : us) {
        for (const auto& u2 : us) {
            for (const auto& w : basis_vectors(2)) {
                for (int a = -2; a <= 1; ++a) {
                    for (int b = -2; b <= 2; ++b) {
                        for (int c = -2; c <= 2; ++c) {
                            const auto g = genjacobi_coefficient(u1, vac, u2, vac, w, {a, b, c, 0, 0, 0, 0});
                            const auto n = newjacobi_coefficient(u1, u2, w, a, b, c, 2);
                            CHECK(g.lhs == n.lhs);
                            CHECK(g.rhs == n.rhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("composite identities") {
    TheoremParams p;
    p.y_orders = {1};
    p.x_window = 2;
    p.max_weight = 2;
    CHECK(theorem_check(TheoremId::genjacobi, p).passed());
    CHECK(theorem_check(TheoremId::gencomm, p).passed());
    CHECK(theorem_check(TheoremId::fourterm, p).passed());
}

TEST_CASE("truncated inner sums report an insufficient window") {
    TheoremParams p;
    p.y_orders = {2};
    p.x_window = 2;
    p.max_weight = 2;
    p.inner_orders = {0};
    const auto r = theorem_check(TheoremId::fourterm, p);
    CHECK(r.status == CheckStatus::window_insufficient);
}

TEST_CASE("specialization to the regularized quadratic operators") {
    TheoremParams p;
    p.y_orders = {1, 1, 1, 1};
    p.x_window = 2;
    p.max_weight = 4;
    CHECK(theorem_check(TheoremId::specialize, p).passed());
}

TEST_CASE("bridge between the two generating functions") {
    TheoremParams p;
    p.y_orders = {2};
    p.x_window = 3;
    p.max_weight = 3;
    CHECK(theorem_check(TheoremId::bridge, p).passed());
    // y^1 w^1 on the vacuum: -d/dy of the regularized kernel against (y - w)^2 X_0(A_2)
    const auto k = reg_inv_one_minus_exp("y", "w", 4);
    const Scalar from_kernel = -Scalar(2) * k.coeff({2, 1});
    const Scalar from_bracket = Scalar(-2) * x_mode(bracket_coeff(v0(), 2, v0()), 0, vac).coeff(Partition{});
    CHECK(from_bracket == Scalar(-1, 120));
    CHECK(from_kernel == from_bracket);
}

TEST_CASE("residue change of variables on random instances") {
    const auto a = residue_change_check(7, 50);
    CHECK(a.passed());
    CHECK(a.coefficients_checked == 50);
    CHECK(residue_change_check(7, 50).params.dump() == a.params.dump());
}
