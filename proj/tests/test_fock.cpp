#include <doctest.h>

#include "freeboson/fock.hpp"

using namespace freeboson;

TEST_CASE("partitions are canonical") {
    const Partition p{1, 3, 1};
    CHECK(p.str() == "[3,1,1]");
    CHECK(p.weight() == 5);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p == Partition{3, 1, 1});
    CHECK(p.without_part(1) == Partition{3, 1});
    CHECK(p.with_part(2).str() == "[3,2,1,1]");
    CHECK_THROWS(Partition{0});
}

TEST_CASE("heisenberg action on simple vectors") {
    const FockVector vac = FockVector::vacuum();
    CHECK(h_apply(-1, vac) == FockVector(Partition{1}));
    CHECK(h_apply(1, FockVector(Partition{1})) == vac);
    CHECK(h_apply(0, FockVector(Partition{2, 1})).is_zero());
    // h(2) h(-2)^2 1 = 2 * 2 h(-2) 1
    CHECK(h_apply(2, FockVector(Partition{2, 2})) == FockVector(Partition{2}, Scalar(4)));
    CHECK(h_apply(3, FockVector(Partition{2, 1})).is_zero());
}

TEST_CASE("heisenberg relations on weight <= 8") {
    const auto basis = basis_up_to(8);
    for (int m = -5; m <= 5; ++m) {
        for (int n = -5; n <= 5; ++n) {
            for (const auto& b : basis) {
                const FockVector v(b);
                const FockVector lhs = h_apply(m, h_apply(n, v)) - h_apply(n, h_apply(m, v));
                const FockVector rhs = (m + n == 0) ? Scalar(m) * v : FockVector();
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("annihilators beyond the weight vanish") {
    for (const auto& b : basis_up_to(7)) {
        for (int n = b.weight() + 1; n <= b.weight() + 3; ++n) {
            CHECK(h_apply(n, b).is_zero());
        }
    }
}

TEST_CASE("weight components") {
    const auto vac = weight_components(FockVector::vacuum());
    REQUIRE(vac.size() == 1);
    CHECK(vac[0].first == 0);
    const auto two = weight_components(FockVector(Partition{1}) + FockVector(Partition{2}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == 1);
    CHECK(two[0].second == FockVector(Partition{1}));
    CHECK(two[1].first == 2);
    const auto sq = weight_components(h_apply(-1, h_apply(-1, FockVector::vacuum())));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].first == 2);
    CHECK(sq[0].second == FockVector(Partition{1, 1}));
}

namespace {

// p(n) through the pentagonal number recurrence
std::vector<std::int64_t> pentagonal_partition_counts(int max_n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) {
                p[n] += sign * p[n - g2];
            }
        }
    }
    return p;
}

}  // namespace

TEST_CASE("graded dimension") {
    CHECK(graded_dim(0) == 1);
    CHECK(graded_dim(1) == 1);
    CHECK(graded_dim(5) == 7);
    const auto oracle = pentagonal_partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(graded_dim(n) == oracle[n]);
    }
    CHECK(partitions_of(5).size() == 7);
    CHECK(basis_up_to(3).size() == 1 + 1 + 2 + 3);
}

TEST_CASE("character data") {
    CHECK(character_offset() == Scalar(-1, 24));
    const auto c = character_coefficients(5);
    CHECK(c[0] == 1);
    CHECK(c[5] == graded_dim(5));
}

TEST_CASE("fock vector arithmetic drops zeros") {
    const FockVector a(Partition{2}, Scalar(3));
    CHECK((a - a).is_zero());
    CHECK((Scalar(0) * a).is_zero());
    CHECK(a.max_weight() == 2);
    CHECK(a.is_homogeneous());
    CHECK(!(a + FockVector::vacuum()).is_homogeneous());
}
