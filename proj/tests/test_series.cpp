#include <doctest.h>

#include "freeboson/series.hpp"

using namespace freeboson;

namespace {

ScalarSeries poly(const std::string& x, std::initializer_list<std::pair<int, Scalar>> terms, int low, int high) {
    ScalarSeries s({poly_window(x, low, high)});
    for (const auto& [e, c] : terms) {
        s.set({e}, c);
    }
    return s;
}

ScalarSeries geometric(const std::string& x, int n) {
    ScalarSeries s({power_window(x, n)});
    for (int k = 0; k <= n; ++k) {
        s.set({k}, Scalar(1));
    }
    return s;
}

}  // namespace

TEST_CASE("add") {
    const auto a = poly("x", {{0, 1}, {1, 1}}, 0, 1);
    const auto b = poly("x", {{0, -1}, {1, 1}}, 0, 1);
    const auto s = add(a, b);
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff({1}) == Scalar(2));

    const auto d = delta_series("x", 3);
    const auto z = add(d, ScalarSeries({open_window("x", -3, 3)}));
    CHECK(compare(d, z).empty());
    CHECK(z.vars()[0] == d.vars()[0]);

    const ScalarSeries w1({open_window("x", -2, 2)});
    const ScalarSeries w2({open_window("x", 0, 4)});
    const auto w = add(w1, w2);
    CHECK(w.vars()[0].low == 0);
    CHECK(w.vars()[0].high == 2);

    CHECK_THROWS_AS(add(a, poly("y", {{0, 1}}, 0, 0)), VariableMismatch);
}

TEST_CASE("mul") {
    const auto a = poly("x", {{0, 1}, {1, 1}}, 0, 1);
    const auto b = poly("x", {{0, 1}, {1, -1}}, 0, 1);
    const auto p = mul(a, b);
    CHECK(p.coeff({0}) == Scalar(1));
    CHECK(p.coeff({1}) == Scalar(0));
    CHECK(p.coeff({2}) == Scalar(-1));
    CHECK(p.coeff({5}) == Scalar(0));

    CHECK_THROWS_AS(mul(delta_series("x", 2), delta_series("x", 2)), IllDefinedProduct);

    // telescoping: the product is 1 on the known part
    const int n = 6;
    const auto t = mul(geometric("x", n), b);
    CHECK(t.vars()[0].low <= 0);
    CHECK(t.vars()[0].high >= n - 1);
    for (int k = 0; k <= n - 1; ++k) {
        CHECK(t.coeff({k}) == Scalar(k == 0 ? 1 : 0));
    }
    CHECK_THROWS_AS((void)t.coeff({n + 2}), WindowInsufficient);
}

TEST_CASE("window soundness of mul under enlarged inputs") {
    const auto f = mul(geometric("x", 5), log1m("x", 5));
    const auto g = mul(geometric("x", 9), log1m("x", 9));
    for (int k = f.vars()[0].low; k <= f.vars()[0].high; ++k) {
        CHECK(f.coeff({k}) == g.coeff({k}));
    }
}

TEST_CASE("dilate") {
    const auto x2 = dilate(poly("x", {{2, 1}}, 2, 2), "x", "y", 2);
    CHECK(x2.coeff({2, 0}) == Scalar(1));
    CHECK(x2.coeff({2, 1}) == Scalar(2));
    CHECK(x2.coeff({2, 2}) == Scalar(2));
    const auto one = dilate(poly("x", {{0, 1}}, 0, 0), "x", "y", 4);
    CHECK(one.terms().size() == 1);
    const auto inv = dilate(poly("x", {{-1, 1}}, -1, -1), "x", "y", 1);
    CHECK(inv.coeff({-1, 0}) == Scalar(1));
    CHECK(inv.coeff({-1, 1}) == Scalar(-1));
    CHECK_THROWS_AS(dilate(x2, "x", "y", 1), VariableMismatch);
}

TEST_CASE("dilation is multiplicative") {
    const auto f = poly("x", {{-1, 2}, {1, 3}}, -1, 1);
    const auto g = poly("x", {{0, 1}, {2, Scalar(-1, 2)}}, 0, 2);
    const auto lhs = mul(dilate(f, "x", "y", 3), dilate(g, "x", "y", 3));
    const auto rhs = dilate(mul(f, g), "x", "y", 3);
    CHECK(compare(lhs, rhs).empty());
    CHECK(lhs.vars()[1].high == 3);
}

TEST_CASE("taylor shift") {
    const auto sq = taylor_shift(poly("x", {{2, 1}}, 2, 2), "x", "y", 2);
    CHECK(sq.coeff({2, 0}) == Scalar(1));
    CHECK(sq.coeff({1, 1}) == Scalar(2));
    CHECK(sq.coeff({0, 2}) == Scalar(1));
    const auto inv = taylor_shift(poly("x", {{-1, 1}}, -1, -1), "x", "y", 2);
    CHECK(inv.coeff({-1, 0}) == Scalar(1));
    CHECK(inv.coeff({-2, 1}) == Scalar(-1));
    CHECK(inv.coeff({-3, 2}) == Scalar(1));
    const auto one = taylor_shift(poly("x", {{0, 1}}, 0, 0), "x", "y", 3);
    CHECK(one.terms().size() == 1);
}

TEST_CASE("binom_expand") {
    const auto sq = binom_expand("a", "b", 2, 0);
    CHECK(sq.coeff({2, 0}) == Scalar(1));
    CHECK(sq.coeff({1, 1}) == Scalar(-2));
    CHECK(sq.coeff({0, 2}) == Scalar(1));
    const auto inv = binom_expand("a", "b", -1, 2);
    CHECK(inv.coeff({-1, 0}) == Scalar(1));
    CHECK(inv.coeff({-2, 1}) == Scalar(1));
    CHECK(inv.coeff({-3, 2}) == Scalar(1));
    const auto one = binom_expand("a", "b", 0, 3);
    CHECK(one.terms().size() == 1);
    CHECK(one.coeff({0, 0}) == Scalar(1));
    CHECK_THROWS(binom_expand("a", "a", 1, 1));
}

TEST_CASE("delta series") {
    const auto d = delta_series("x", 2);
    CHECK(d.terms().size() == 5);
    for (int k = -2; k <= 2; ++k) {
        CHECK(d.coeff({k}) == Scalar(1));
    }
    CHECK_THROWS_AS((void)d.coeff({3}), WindowInsufficient);
    CHECK(delta_series("x", 0).coeff({0}) == Scalar(1));
    CHECK(residue(delta_series("x", 1), "x").coeff({}) == Scalar(1));
}

TEST_CASE("log1m and exp") {
    const auto l = log1m("t", 3);
    CHECK(l.coeff({1}) == Scalar(-1));
    CHECK(l.coeff({2}) == Scalar(-1, 2));
    CHECK(l.coeff({3}) == Scalar(-1, 3));
    CHECK(log1m("t", 1).terms().size() == 1);

    const auto e = exp_of(log1m("t", 12));
    for (int k = 0; k <= 12; ++k) {
        CHECK(e.coeff({k}) == Scalar(k == 0 ? 1 : (k == 1 ? -1 : 0)));
    }
}

TEST_CASE("subst_em1") {
    const auto x = subst_em1(poly("x", {{1, 1}}, 1, 1), "x", "y", 3);
    CHECK(x.coeff({1}) == Scalar(1));
    CHECK(x.coeff({2}) == Scalar(1, 2));
    CHECK(x.coeff({3}) == Scalar(1, 6));

    // brute-force inverse of (e^y - 1)/y
    std::vector<Scalar> u{Scalar(1), Scalar(1, 2), Scalar(1, 6)};
    std::vector<Scalar> v(3);
    v[0] = Scalar(1);
    for (int k = 1; k < 3; ++k) {
        Scalar acc;
        for (int j = 1; j <= k; ++j) {
            acc += u[j] * v[k - j];
        }
        v[k] = -acc;
    }
    const auto inv = subst_em1(poly("x", {{-1, 1}}, -1, -1), "x", "y", 1);
    CHECK(inv.coeff({-1}) == v[0]);
    CHECK(inv.coeff({0}) == v[1]);
    CHECK(inv.coeff({1}) == v[2]);
    CHECK(v[1] == Scalar(-1, 2));
    CHECK(v[2] == Scalar(1, 12));

    const auto one = subst_em1(poly("x", {{0, 1}}, 0, 0), "x", "y", 4);
    CHECK(one.coeff({0}) == Scalar(1));
    CHECK_THROWS_AS(subst_em1(delta_series("x", 2), "x", "y", 2), WindowInsufficient);
}

TEST_CASE("residue") {
    CHECK(residue(poly("x", {{-1, 1}}, -1, -1), "x").coeff({}) == Scalar(1));
    CHECK(residue(poly("x", {{2, 1}}, -3, 3), "x").coeff({}) == Scalar(0));
    CHECK_THROWS_AS(residue(ScalarSeries({open_window("x", 0, 3)}), "x"), WindowInsufficient);
}

TEST_CASE("regularised geometric series") {
    const int order = 3;
    const auto r = reg_inv_one_minus_exp("y1", "y2", order);
    CHECK(r.vars()[0].low == -1);
    CHECK(r.vars()[0].high == order);
    CHECK(r.vars()[1].low == 0);
    CHECK(r.vars()[1].high == order);
    CHECK(r.coeff({-1, 0}) == Scalar(1));

    // oracle: t/(1 - e^{-t}) by brute-force inversion of (1 - e^{-t})/t
    std::vector<Scalar> v(6), f(6);
    for (int k = 0; k < 6; ++k) {
        v[k] = Scalar(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k + 1));
    }
    f[0] = Scalar(1);
    for (int k = 1; k < 6; ++k) {
        Scalar acc;
        for (int j = 1; j <= k; ++j) {
            acc += v[j] * f[k - j];
        }
        f[k] = -acc;
    }
    CHECK(f[1] == Scalar(1, 2));
    CHECK(f[2] == Scalar(1, 12));
    // along y2 = 0 the series is t^{-1} F(t)
    CHECK(r.coeff({0, 0}) == f[1]);
    CHECK(r.coeff({1, 0}) == f[2]);
    CHECK(r.coeff({2, 0}) == f[3]);
    // F(y1 - y2): coefficient of y1^0 y2^1 in (y1-y2) F_2
    CHECK(r.coeff({0, 1}) == -f[2]);

    // -d/dy1 at y = 0 picks -f[2] from the linear term
    const auto d = derivative(r, "y1");
    CHECK(-d.coeff({0, 0}) == Scalar(-1, 12));
}

TEST_CASE("derivative of a power series stays a power series") {
    const auto d = derivative(geometric("x", 3), "x");
    CHECK(d.vars()[0].low == 0);
    CHECK(d.vars()[0].high == 2);
    CHECK(d.coeff({0}) == Scalar(1));
    CHECK(d.coeff({2}) == Scalar(3));
    CHECK(d.coeff({-1}) == Scalar(0));
    CHECK_THROWS_AS((void)d.coeff({3}), WindowInsufficient);
}

TEST_CASE("substitute") {
    const auto h = poly("x", {{-2, 1}}, -2, -2);
    // y + y^2, so h(F) = y^-2 (1 + y)^-2 = sum (-1)^k (k + 1) y^{k-2}
    const auto f = poly("y", {{1, 1}, {2, 1}}, 0, 2);
    const auto s = substitute(h, "x", f, "y", 4);
    for (int k = 0; k <= 6; ++k) {
        CHECK(s.coeff({k - 2}) == Scalar((k % 2 == 0 ? 1 : -1) * (k + 1)));
    }
    CHECK_THROWS_AS((void)s.coeff({5}), WindowInsufficient);

    // F(y) = e^y - 1 agrees with subst_em1
    const auto g = poly("x", {{-1, 2}, {0, 3}, {2, Scalar(1, 2)}}, -1, 2);
    ScalarSeries em1 = exp_linear("y", Scalar(1), 8);
    em1.set({0}, Scalar(0));
    CHECK(compare(substitute(g, "x", em1, "y", 5), subst_em1(g, "x", "y", 5)).empty());

    // scaling F scales each power
    const auto twice = substitute(g, "x", poly("y", {{1, 2}}, 1, 1), "y", 3);
    CHECK(twice.coeff({-1}) == Scalar(1));
    CHECK(twice.coeff({2}) == Scalar(2));
}

TEST_CASE("residue under a change of variables") {
    const auto h = poly("x", {{-3, 2}, {-1, Scalar(5, 3)}, {1, 7}}, -3, 1);
    const auto f = poly("y", {{1, -3}, {2, 1}, {4, Scalar(1, 2)}}, 0, 4);
    const Scalar direct = residue(h, "x").coeff({});
    const Scalar changed = residue(mul(derivative(f, "y"), substitute(h, "x", f, "y", -1)), "y").coeff({});
    CHECK(direct == Scalar(5, 3));
    CHECK(changed == direct);
}
