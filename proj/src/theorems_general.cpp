#include <algorithm>
#include <map>
#include <tuple>

#include "freeboson/regularized.hpp"
#include "freeboson/voa.hpp"
#include "theorems_detail.hpp"

namespace freeboson {

namespace {

using detail::exp_coeff;

Json composite_params(const TheoremParams& p, const std::string& identity, std::size_t norders) {
    Json j;
    j["identity"] = identity;
    j["u1"] = to_json(p.u1);
    j["v1"] = to_json(p.v1);
    j["u2"] = to_json(p.u2);
    j["v2"] = to_json(p.v2);
    std::vector<int> orders;
    for (std::size_t i = 0; i < norders; ++i) {
        orders.push_back(p.order(i));
    }
    j["y_orders"] = orders;
    j["x_window"] = p.x_window;
    j["weight_cap"] = p.max_weight;
    if (!p.targets.empty()) {
        j["targets"] = detail::vector_list(p.targets);
    }
    return j;
}

/// [y^p] Y[u, y] v for p from the lowest power up to `top`.
std::map<int, FockVector> bracket_coeffs(const FockVector& u, const FockVector& v, int top) {
    std::map<int, FockVector> out;
    const int low = bracket_lowest_power(u, v);
    if (top < low) {
        return out;
    }
    const VectorSeries s = y_bracket_apply(u, v, top);
    for (int p = low; p <= top; ++p) {
        FockVector c = s.coeff({p});
        if (!c.is_zero()) {
            out.emplace(p, std::move(c));
        }
    }
    return out;
}

VectorSeries grid(const std::string& a, const std::string& b, int x) {
    return VectorSeries({open_window(a, -x, x), open_window(b, -x, x)});
}

VectorSeries dilated(const VectorSeries& s, int o1, int o2) {
    return dilate(dilate(s, "x1", "w1", o1), "x2", "w2", o2);
}

/// Y[a, z] b residue against e^{m z}, with the z-order chosen so the residue is determined.
FockVector exact_comm_residue(const FockVector& a, const FockVector& b, int m) {
    const int low = bracket_lowest_power(a, b);
    const int order = std::max({-1 - low, low, 0});
    return detail::comm_residue(y_bracket_apply(a, b, order), m, order);
}

}  // namespace

SidePair genjacobi_coefficient(const FockVector& u1, const FockVector& v1, const FockVector& u2, const FockVector& v2,
                               const FockVector& w, const std::vector<int>& exps) {
    if (exps.size() != 7) {
        throw std::invalid_argument("genjacobi_coefficient: seven exponents expected");
    }
    const int a = exps[0];
    const int b = exps[1];
    const int c = exps[2];
    const FockVector ap = bracket_coeff(u1, exps[3], v1);
    const FockVector bq = bracket_coeff(u2, exps[4], v2);
    SidePair s = newjacobi_coefficient(ap, bq, w, a, b, c, a);
    const Scalar f = exp_coeff(Scalar(b), exps[5]) * exp_coeff(Scalar(c), exps[6]);
    return {f * s.lhs, f * s.rhs};
}

namespace detail {

CheckReport genjacobi_check(const TheoremParams& p) {
    CheckRecorder rec("GENJACOBI", composite_params(p, "GENJACOBI", 4));
    const int x = p.x_window;
    const auto as = bracket_coeffs(p.u1, p.v1, p.order(0));
    const auto bs = bracket_coeffs(p.u2, p.v2, p.order(1));
    const int o1 = p.order(2);
    const int o2 = p.order(3);
    for (const auto& w : p.target_list()) {
        const Json tj = to_json(w);
        for (const auto& [pa, ap] : as) {
            for (const auto& [qb, bq] : bs) {
                for (int a = -x; a <= x; ++a) {
                    VectorSeries lhs = grid("x1", "x2", x);
                    VectorSeries rhs = grid("x1", "x2", x);
                    for (int b = -x; b <= x; ++b) {
                        for (int c = -x; c <= x; ++c) {
                            const SidePair s = newjacobi_coefficient(ap, bq, w, a, b, c, a);
                            lhs.set({b, c}, s.lhs);
                            rhs.set({b, c}, s.rhs);
                        }
                    }
                    // x_i -> e^{w_i} x_i on both sides
                    const VectorSeries dl = dilated(lhs, o1, o2);
                    const VectorSeries dr = dilated(rhs, o1, o2);
                    for (int b = -x; b <= x; ++b) {
                        for (int c = -x; c <= x; ++c) {
                            for (int i = 0; i <= o1; ++i) {
                                for (int j = 0; j <= o2; ++j) {
                                    rec.compare({a, b, c, pa, qb, i, j}, dl.coeff({b, c, i, j}), dr.coeff({b, c, i, j}), tj);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

CheckReport gencomm_check(const TheoremParams& p) {
    CheckRecorder rec("GENCOMM", composite_params(p, "GENCOMM", 4));
    const int x = p.x_window;
    const auto as = bracket_coeffs(p.u1, p.v1, p.order(0));
    const auto bs = bracket_coeffs(p.u2, p.v2, p.order(1));
    const int o1 = p.order(2);
    const int o2 = p.order(3);
    for (const auto& [pa, ap] : as) {
        for (const auto& [qb, bq] : bs) {
            std::map<int, FockVector> residues;
            for (int m = -x; m <= x; ++m) {
                residues.emplace(m, exact_comm_residue(ap, bq, m));
            }
            for (const auto& w : p.target_list()) {
                const Json tj = to_json(w);
                VectorSeries lhs = grid("x1", "x2", x);
                VectorSeries rhs = grid("x1", "x2", x);
                for (int m = -x; m <= x; ++m) {
                    for (int n = -x; n <= x; ++n) {
                        lhs.set({-m, -n}, commutator(ap, m, bq, n, w));
                        rhs.set({-m, -n}, x_mode(residues.at(m), m + n, w));
                    }
                }
                const VectorSeries dl = dilated(lhs, o1, o2);
                const VectorSeries dr = dilated(rhs, o1, o2);
                for (int b = -x; b <= x; ++b) {
                    for (int c = -x; c <= x; ++c) {
                        for (int i = 0; i <= o1; ++i) {
                            for (int j = 0; j <= o2; ++j) {
                                rec.compare({b, c, pa, qb, i, j}, dl.coeff({b, c, i, j}), dr.coeff({b, c, i, j}), tj);
                            }
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

namespace {

class FourTerm {
public:
    explicit FourTerm(const TheoremParams& p) : p_(p) {}

    /// Vector Z with RHS = X_{m+n}(Z) w at x1^{-m} y1^p y2^q.
    FockVector operand(int m, int p, int q) {
        const auto key = std::make_tuple(m, p, q);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        FockVector z = term1(m, p, q) + term2(m, p, q) - term3(m, p, q) - term4(m, p, q);
        cache_.emplace(key, z);
        return z;
    }

private:
    FockVector at(std::size_t depth, const FockVector& a, int k, const FockVector& b) const {
        if (!p_.inner_orders.empty()) {
            const int cap = p_.inner_orders[std::min(depth, p_.inner_orders.size() - 1)];
            if (k > cap && k >= bracket_lowest_power(a, b)) {
                throw WindowInsufficient("FOURTERM: nested bracket exponent above its order");
            }
        }
        return bracket_coeff(a, k, b);
    }

    // Res_t e^{t d/dy1} delta(e^{-t} x1/x2) Y[u2,y2] Y[u1,y1] Y[v1,t] v2
    FockVector term1(int m, int p, int q) const {
        FockVector out;
        for (int j = bracket_lowest_power(p_.v1, p_.v2); j <= -1; ++j) {
            const FockVector tj = at(0, p_.v1, j, p_.v2);
            if (tj.is_zero()) {
                continue;
            }
            for (int i = 0; i <= -1 - j; ++i) {
                const int d = -1 - i - j;
                const Scalar coef = exp_coeff(Scalar(m), d) * binomial(p + i, i);
                if (coef.is_zero()) {
                    continue;
                }
                out += coef * at(2, p_.u2, q, at(1, p_.u1, p + i, tj));
            }
        }
        return out;
    }

    // Res_t e^{-t d/dy1} delta(e^{y1} x1/x2) Y[u2,y2] Y[v1,-y1] Y[u1,t] v2
    FockVector term2(int m, int p, int q) const {
        FockVector out;
        for (int j = bracket_lowest_power(p_.u1, p_.v2); j <= -1; ++j) {
            const FockVector tj = at(0, p_.u1, j, p_.v2);
            if (tj.is_zero()) {
                continue;
            }
            const int low = bracket_lowest_power(p_.v1, tj);
            for (int i = 0; i <= -1 - j; ++i) {
                const int d = -1 - i - j;
                for (int e = 0; p - e + i >= low; ++e) {
                    const int k = p - e + i;
                    const Scalar sign((k - i) % 2 == 0 ? 1 : -1);
                    const Scalar coef = exp_coeff(Scalar(-m), e) * exp_coeff(Scalar(m), d) * binomial(k, i) * sign;
                    if (coef.is_zero()) {
                        continue;
                    }
                    out += coef * at(2, p_.u2, q, at(1, p_.v1, k, tj));
                }
            }
        }
        return out;
    }

    // Res_t e^{-t d/dy2} delta(e^{-y2} x1/x2) Y[Y[u1,y1] Y[u2,t] v1, y2] v2
    FockVector term3(int m, int p, int q) const {
        FockVector out;
        for (int l = bracket_lowest_power(p_.u2, p_.v1); l <= -1; ++l) {
            const FockVector ul = at(0, p_.u2, l, p_.v1);
            if (ul.is_zero()) {
                continue;
            }
            const FockVector s = at(1, p_.u1, p, ul);
            if (s.is_zero()) {
                continue;
            }
            const int low = bracket_lowest_power(s, p_.v2);
            for (int i = 0; i <= -1 - l; ++i) {
                const int d = -1 - l - i;
                for (int k = low; k <= q + i; ++k) {
                    const int e = q - k + i;
                    const Scalar sign(i % 2 == 0 ? 1 : -1);
                    const Scalar coef = exp_coeff(Scalar(m), e) * exp_coeff(Scalar(-m), d) * binomial(k, i) * sign;
                    if (coef.is_zero()) {
                        continue;
                    }
                    out += coef * at(2, s, k, p_.v2);
                }
            }
        }
        return out;
    }

    // Res_t e^{-t d/dy2} delta(e^{-y2+y1} x1/x2) Y[Y[Y[u2,t] u1, y1] v1, y2 - y1] v2
    FockVector term4(int m, int p, int q) const {
        FockVector out;
        for (int l = bracket_lowest_power(p_.u2, p_.u1); l <= -1; ++l) {
            const FockVector pl = at(0, p_.u2, l, p_.u1);
            if (pl.is_zero()) {
                continue;
            }
            for (int s = 0; s <= -1 - l; ++s) {
                const int d = -1 - l - s;
                for (int r = bracket_lowest_power(pl, p_.v1); r <= p; ++r) {
                    const FockVector qr = at(1, pl, r, p_.v1);
                    if (qr.is_zero()) {
                        continue;
                    }
                    const int low = bracket_lowest_power(qr, p_.v2);
                    for (int i = s; i <= s + p - r; ++i) {
                        const int f = p - r - i + s;
                        for (int k = low; k <= q + i; ++k) {
                            const int e = q - k + i;
                            const Scalar sign(i % 2 == 0 ? 1 : -1);
                            const Scalar coef = exp_coeff(Scalar(m), e) * exp_coeff(Scalar(-m), d) *
                                                exp_coeff(Scalar(-m), f) * binomial(k, i) * sign * binomial(i, s);
                            if (coef.is_zero()) {
                                continue;
                            }
                            out += coef * at(2, qr, k, p_.v2);
                        }
                    }
                }
            }
        }
        return out;
    }

    const TheoremParams& p_;
    std::map<std::tuple<int, int, int>, FockVector> cache_;
};

}  // namespace

CheckReport fourterm_check(const TheoremParams& p) {
    Json jp = composite_params(p, "FOURTERM", 2);
    if (!p.inner_orders.empty()) {
        jp["inner_orders"] = p.inner_orders;
    }
    CheckRecorder rec("FOURTERM", jp);
    const int x = p.x_window;
    const auto as = bracket_coeffs(p.u1, p.v1, p.order(0));
    const auto bs = bracket_coeffs(p.u2, p.v2, p.order(1));
    FourTerm terms(p);
    try {
        for (const auto& [pa, ap] : as) {
            for (const auto& [qb, bq] : bs) {
                for (int m = -x; m <= x; ++m) {
                    const FockVector z = terms.operand(m, pa, qb);
                    for (const auto& w : p.target_list()) {
                        const Json tj = to_json(w);
                        for (int n = -x; n <= x; ++n) {
                            rec.compare({-m, -n, pa, qb}, commutator(ap, m, bq, n, w), x_mode(z, m + n, w), tj);
                        }
                    }
                }
            }
        }
    } catch (const WindowInsufficient& e) {
        rec.window_error(e.what());
    }
    return rec.finish();
}

CheckReport specialize_check(const TheoremParams& p) {
    Json jp;
    jp["identity"] = "SPECIALIZE";
    std::vector<int> orders;
    for (std::size_t i = 0; i < 4; ++i) {
        orders.push_back(p.order(i));
    }
    jp["y_orders"] = orders;
    jp["x_window"] = p.x_window;
    jp["weight_cap"] = p.max_weight;
    if (!p.targets.empty()) {
        jp["targets"] = vector_list(p.targets);
    }
    CheckRecorder rec("SPECIALIZE", jp);
    const int x = p.x_window;
    const FockVector h = v0();
    const int ptop = orders[0] + orders[1];
    const int qtop = orders[2] + orders[3];
    const auto as = bracket_coeffs(h, h, ptop);
    const auto bs = bracket_coeffs(h, h, qtop);
    // R(p, q, m): the commutator residue vector of the composite bracket
    std::map<std::tuple<int, int, int>, FockVector> residues;
    for (const auto& [pa, ap] : as) {
        for (const auto& [qb, bq] : bs) {
            for (int m = -x; m <= x; ++m) {
                residues.emplace(std::make_tuple(pa, qb, m), exact_comm_residue(ap, bq, m));
            }
        }
    }
    auto g = [&](int pa, int qb, int m, int n, const FockVector& w) {
        auto it = residues.find(std::make_tuple(pa, qb, m));
        return it == residues.end() ? FockVector() : x_mode(it->second, m + n, w);
    };
    // [y^a1 y^a2] (y_a - y_b)^k e^{-m y_b}
    auto weight = [](int k, int a1, int a2, int m) {
        if (k < a1) {
            return Scalar(0);
        }
        const Scalar sign((k - a1) % 2 == 0 ? 1 : -1);
        return binomial(k, a1) * sign * exp_coeff(Scalar(-m), a2 - (k - a1));
    };
    for (const auto& w : p.target_list()) {
        const Json tj = to_json(w);
        for (int m = -x; m <= x; ++m) {
            for (int n = -x; n <= x; ++n) {
                // terms with negative powers of y1 - y2 or y3 - y4 must cancel
                for (const auto& [pa, ap] : as) {
                    for (const auto& [qb, bq] : bs) {
                        if (pa < 0 || qb < 0) {
                            rec.compare({-m, -n, pa, qb}, g(pa, qb, m, n, w), FockVector(), tj);
                        }
                    }
                }
                for (const auto& [alpha, lhs, rhs] : theorem1_coefficients(orders, m, n, w)) {
                    FockVector expected;
                    for (int pa = 0; pa <= alpha[0] + alpha[1]; ++pa) {
                        const Scalar c1 = weight(pa, alpha[0], alpha[1], m);
                        if (c1.is_zero()) {
                            continue;
                        }
                        for (int qb = 0; qb <= alpha[2] + alpha[3]; ++qb) {
                            const Scalar c2 = weight(qb, alpha[2], alpha[3], n);
                            if (!c2.is_zero()) {
                                expected += (Scalar(1, 4) * c1 * c2) * g(pa, qb, m, n, w);
                            }
                        }
                    }
                    Exponents mono = alpha;
                    mono.push_back(-m);
                    mono.push_back(-n);
                    rec.compare(mono, lhs, expected, tj);
                    rec.compare(mono, rhs, expected, tj);
                }
            }
        }
    }
    return rec.finish();
}

}  // namespace detail

}  // namespace freeboson
