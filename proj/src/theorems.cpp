#include "freeboson/theorems.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "freeboson/regularized.hpp"
#include "theorems_detail.hpp"
#include "freeboson/voa.hpp"

namespace freeboson {

namespace detail {

Scalar one_minus_power(int n, int k) {
    if (k < 0) {
        return Scalar(0);
    }
    static std::mutex mutex;
    static std::map<int, ScalarSeries> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end() || it->second.vars()[0].high < k) {
        // (1 - t)^n = exp(n log(1 - t))
        ScalarSeries l = log1m("t", std::max(k, 32));
        l *= Scalar(n);
        it = cache.insert_or_assign(n, exp_of(l)).first;
    }
    return it->second.coeff({k});
}

Scalar exp_coeff(const Scalar& c, int k) {
    if (k < 0) {
        return Scalar(0);
    }
    return pow(c, static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
}

VectorSeries log_bracket(const FockVector& u, const FockVector& v, int top) {
    static std::mutex mutex;
    static std::map<std::pair<std::string, std::string>, VectorSeries> cache;
    const auto key = std::make_pair(u.str(), v.str());
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.vars()[0].high >= top) {
            return it->second;
        }
    }
    const int low = bracket_lowest_power(u, v);
    const VectorSeries y = y_bracket_apply(u, v, top, "y");
    // y01 = -log(1 - r)
    ScalarSeries f = log1m("r", top - low + 1);
    f *= Scalar(-1);
    VectorSeries w = substitute(y, "y", f, "r", top);
    std::lock_guard<std::mutex> lock(mutex);
    cache.insert_or_assign(key, w);
    return w;
}

FockVector comm_residue(const VectorSeries& bracket, int m, int order) {
    // delta(e^{-y} z) = sum_k e^{-k y} z^k, coefficient of z^{-m}
    const int reach = std::max(1, std::abs(m));
    const ScalarSeries delta = negate_var(dilate(delta_series("z", reach), "z", "y", order), "y");
    const ScalarSeries e = coefficient_in(delta, "z", -m);
    return residue(mul(e, bracket), "y").coeff({});
}

FockVector commutator(const FockVector& a, int m, const FockVector& b, int n, const FockVector& w) {
    return x_mode(a, m, x_mode(b, n, w)) - x_mode(b, n, x_mode(a, m, w));
}

Json vector_list(const std::vector<FockVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        out.push_back(to_json(v));
    }
    return out;
}

Json base_params(const TheoremParams& p, const std::string& identity) {
    Json j;
    j["identity"] = identity;
    j["u"] = to_json(p.u);
    j["v"] = to_json(p.v);
    j["y_orders"] = std::vector<int>{p.order(0)};
    j["x_window"] = p.x_window;
    j["weight_cap"] = p.max_weight;
    if (!p.targets.empty()) {
        j["targets"] = vector_list(p.targets);
    }
    return j;
}

}  // namespace detail

using namespace detail;

TheoremParams::TheoremParams() : u(v0()), v(v0()), u1(v0()), v1(v0()), u2(v0()), v2(v0()) {}

int TheoremParams::order(std::size_t i) const {
    if (y_orders.empty()) {
        return 2;
    }
    return i < y_orders.size() ? y_orders[i] : y_orders.back();
}

std::vector<FockVector> TheoremParams::target_list() const {
    if (!targets.empty()) {
        return targets;
    }
    std::vector<FockVector> out;
    for (const auto& p : basis_up_to(max_weight)) {
        out.emplace_back(p);
    }
    return out;
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::newjacobi:
            return "NEWJACOBI";
        case TheoremId::comm:
            return "COMM";
        case TheoremId::genjacobi:
            return "GENJACOBI";
        case TheoremId::gencomm:
            return "GENCOMM";
        case TheoremId::fourterm:
            return "FOURTERM";
        case TheoremId::specialize:
            return "SPECIALIZE";
        case TheoremId::bridge:
            return "BRIDGE";
    }
    return "";
}

TheoremId parse_theorem(const std::string& name) {
    for (TheoremId id : {TheoremId::newjacobi, TheoremId::comm, TheoremId::genjacobi, TheoremId::gencomm,
                         TheoremId::fourterm, TheoremId::specialize, TheoremId::bridge}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity: " + name);
}

SidePair newjacobi_coefficient(const FockVector& u, const FockVector& v, const FockVector& w, int a, int b, int c,
                               int y_order) {
    if (a > y_order) {
        throw WindowInsufficient("x0 exponent above the y01 order");
    }
    const int n = -a - 1;
    const int ww = w.max_weight();
    FockVector lhs1;
    for (int k = 0; k <= c + ww; ++k) {
        const Scalar coef = one_minus_power(n, k);
        if (!coef.is_zero()) {
            lhs1 += coef * x_mode(u, n - b - k, x_mode(v, k - c, w));
        }
    }
    FockVector lhs2;
    for (int k = 0; k <= b + ww; ++k) {
        const Scalar coef = one_minus_power(n, k);
        if (!coef.is_zero()) {
            lhs2 += coef * x_mode(v, n - c - k, x_mode(u, k - b, w));
        }
    }
    const Scalar sign(n % 2 == 0 ? 1 : -1);
    SidePair out{lhs1 - sign * lhs2, FockVector()};
    const int low = bracket_lowest_power(u, v);
    if (a >= low && !u.is_zero() && !v.is_zero()) {
        const VectorSeries big_w = log_bracket(u, v, a);
        for (int i = low; i <= a; ++i) {
            const FockVector wi = big_w.coeff({i});
            if (wi.is_zero()) {
                continue;
            }
            const Scalar coef = one_minus_power(a + b, a - i);
            if (!coef.is_zero()) {
                out.rhs += coef * x_mode(wi, -1 - a - b - c, w);
            }
        }
    }
    return out;
}

SidePair comm_coefficient(const FockVector& u, const FockVector& v, const FockVector& w, int m, int n, int y_order) {
    const VectorSeries bracket = y_bracket_apply(u, v, y_order);
    return {commutator(u, m, v, n, w), x_mode(comm_residue(bracket, m, y_order), m + n, w)};
}

namespace {

CheckReport newjacobi_check(const TheoremParams& p) {
    CheckRecorder rec("NEWJACOBI", base_params(p, "NEWJACOBI"));
    const int x = p.x_window;
    const int top = std::min(x, p.order(0));
    rec.details()["x0_range"] = std::vector<int>{-x, top};
    if (top < x) {
        rec.details()["note"] = "x0 exponents above the y01 order are not determined";
    }
    for (const auto& w : p.target_list()) {
        const Json tj = to_json(w);
        for (int a = -x; a <= top; ++a) {
            for (int b = -x; b <= x; ++b) {
                for (int c = -x; c <= x; ++c) {
                    const SidePair s = newjacobi_coefficient(p.u, p.v, w, a, b, c, p.order(0));
                    rec.compare({a, b, c}, s.lhs, s.rhs, tj);
                }
            }
        }
    }
    return rec.finish();
}

CheckReport comm_check(const TheoremParams& p) {
    CheckRecorder rec("COMM", base_params(p, "COMM"));
    const int x = p.x_window;
    const int order = p.order(0);
    try {
        const VectorSeries bracket = y_bracket_apply(p.u, p.v, order);
        std::map<int, FockVector> residues;
        for (int m = -x; m <= x; ++m) {
            residues.emplace(m, comm_residue(bracket, m, order));
        }
        for (const auto& w : p.target_list()) {
            const Json tj = to_json(w);
            for (int m = -x; m <= x; ++m) {
                for (int n = -x; n <= x; ++n) {
                    rec.compare({-m, -n}, commutator(p.u, m, p.v, n, w), x_mode(residues.at(m), m + n, w), tj);
                }
            }
        }
    } catch (const WindowInsufficient& e) {
        rec.window_error(e.what());
    }
    return rec.finish();
}

CheckReport bridge_check(const TheoremParams& p) {
    Json jp;
    jp["identity"] = "BRIDGE";
    jp["y_orders"] = std::vector<int>{p.order(0)};
    jp["x_window"] = p.x_window;
    jp["weight_cap"] = p.max_weight;
    if (!p.targets.empty()) {
        jp["targets"] = vector_list(p.targets);
    }
    CheckRecorder rec("BRIDGE", jp);
    const int k = p.order(0);
    if (k < 1) {
        rec.window_error("BRIDGE needs order >= 1");
        return rec.finish();
    }
    const FockVector h = v0();
    const int top = 2 * k - 1;
    const VectorSeries bracket = y_bracket_apply(h, h, top);
    const int low = bracket_lowest_power(h, h);
    const ScalarSeries reg = derivative(reg_inv_one_minus_exp("y", "w", k), "y");
    auto box = [&](const VectorSeries& s) { return s.restrict("y", -2, k - 1).restrict("w", 0, k); };
    for (const auto& v : p.target_list()) {
        const Json tj = to_json(v);
        const int wt = v.max_weight();
        for (int n = -p.x_window; n <= p.x_window; ++n) {
            // regularized product sum_j :h(j) h(n-j): e^{-j y - (n-j) w} + scalar part
            VectorSeries lhs({laurent_window("y", -2, k - 1), laurent_window("w", 0, k)});
            const int bound = wt + std::abs(n);
            for (int j = -bound; j <= bound; ++j) {
                const FockVector q = normal_quadratic(n, [j](int i) { return Scalar(i == j ? 1 : 0); }, v);
                if (q.is_zero()) {
                    continue;
                }
                const ScalarSeries e = mul(exp_linear("y", Scalar(-j), k), exp_linear("w", Scalar(j - n), k));
                lhs = add(lhs, mul(e, VectorSeries::constant(q)));
            }
            if (n == 0) {
                ScalarSeries r = reg;
                r *= Scalar(-1);
                lhs = add(lhs, mul(r, VectorSeries::constant(v)));
            }
            // sum_p (y - w)^p e^{-n w} X_n(A_p) v
            VectorSeries rhs({laurent_window("y", -2, k - 1), laurent_window("w", 0, k)});
            const ScalarSeries en = exp_linear("w", Scalar(-n), k);
            for (int pw = low; pw <= top; ++pw) {
                const FockVector xa = x_mode(bracket.coeff({pw}), n, v);
                if (xa.is_zero()) {
                    continue;
                }
                const ScalarSeries s = mul(binom_expand("y", "w", pw, k), en);
                rhs = add(rhs, mul(s, VectorSeries::constant(xa)));
            }
            const VectorSeries l = box(lhs);
            const VectorSeries r = box(rhs.over(l.names()));
            for (int ey = -2; ey <= k - 1; ++ey) {
                for (int ew = 0; ew <= k; ++ew) {
                    rec.compare({-n, ey, ew}, l.coeff({ey, ew}), r.coeff({ey, ew}), tj);
                }
            }
        }
    }
    return rec.finish();
}

}  // namespace

CheckReport residue_link_check(const TheoremParams& p) {
    Json jp = base_params(p, "RESIDUE-LINK");
    CheckRecorder rec("RESIDUE-LINK", jp);
    const int x = p.x_window;
    const int low = bracket_lowest_power(p.u, p.v);
    const int comm_order = std::max(p.order(0), -1 - low);
    const VectorSeries bracket = y_bracket_apply(p.u, p.v, comm_order);
    // x1 evaluated at a nonzero rational; F(y) = x1 (1 - e^y)
    const Scalar q(3, 2);
    const int span = -low;
    ScalarSeries f = exp_linear("y", Scalar(1), span + 1);
    f.set({0}, Scalar(0));
    f *= -q;
    const ScalarSeries fprime = derivative(f, "y");
    rec.details()["x1"] = q.str();
    for (const auto& w : p.target_list()) {
        const Json tj = to_json(w);
        for (int b = -x; b <= x; ++b) {
            for (int c = -x; c <= x; ++c) {
                const SidePair comm = {commutator(p.u, -b, p.v, -c, w),
                                       x_mode(comm_residue(bracket, -b, comm_order), -b - c, w)};
                const SidePair at = newjacobi_coefficient(p.u, p.v, w, -1, b, c, p.order(0));
                rec.compare({-1, b, c}, at.lhs, comm.lhs, tj);
                if (low > -1) {
                    rec.compare({-1, b, c}, at.rhs, comm.rhs, tj);
                    continue;
                }
                // h(x0) = sum_a RHS(a, b - 1 - a, c) x1^{b - 1 - a} x0^a, whose x0-residue carries x1^b
                VectorSeries h({laurent_window("x0", low, -1)});
                for (int a = low; a <= -1; ++a) {
                    const SidePair s = newjacobi_coefficient(p.u, p.v, w, a, b - 1 - a, c, p.order(0));
                    h.accumulate({a}, ipow(q, b - 1 - a) * s.rhs);
                }
                const VectorSeries hf = substitute(h, "x0", f, "y", -1);
                FockVector via = residue(mul(fprime, hf), "y").coeff({});
                via = (Scalar(1) / ipow(q, b)) * via;
                rec.compare({-1, b, c}, via, comm.rhs, tj);
            }
        }
    }
    return rec.finish();
}

bool residue_change_holds(const ScalarSeries& h, const ScalarSeries& f) {
    const std::string x = h.vars().at(0).name;
    const std::string y = f.vars().at(0).name;
    const Scalar lhs = residue(h, x).coeff({});
    const int order = std::max(-1, h.vars()[0].low);
    const ScalarSeries hf = substitute(h, x, f, y, order);
    const Scalar rhs = residue(mul(derivative(f, y), hf), y).coeff({});
    return lhs == rhs;
}

CheckReport residue_change_check(std::uint64_t seed, int cases) {
    Json jp;
    jp["seed"] = seed;
    jp["cases"] = cases;
    CheckRecorder rec("RES-CHANGE", jp);
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto rational = [&](bool nonzero) {
        int num = uniform(-9, 9);
        while (nonzero && num == 0) {
            num = uniform(-9, 9);
        }
        return Scalar(num, uniform(1, 5));
    };
    for (int i = 0; i < cases; ++i) {
        const int low = uniform(-5, 1);
        const int high = low + uniform(0, 6);
        ScalarSeries h({poly_window("x", low, high)});
        for (int e = low; e <= high; ++e) {
            h.set({e}, rational(false));
        }
        const int degree = uniform(1, 5);
        ScalarSeries f({poly_window("y", 0, degree)});
        f.set({1}, rational(true));
        for (int e = 2; e <= degree; ++e) {
            f.set({e}, rational(false));
        }
        try {
            const Scalar lhs = residue(h, "x").coeff({});
            const ScalarSeries hf = substitute(h, "x", f, "y", std::max(-1, low));
            const Scalar rhs = residue(mul(derivative(f, "y"), hf), "y").coeff({});
            rec.compare({i}, lhs, rhs, Json());
        } catch (const WindowInsufficient& e) {
            rec.window_error(e.what());
        }
    }
    return rec.finish();
}

CheckReport theorem_check(TheoremId id, const TheoremParams& params) {
    switch (id) {
        case TheoremId::newjacobi:
            return newjacobi_check(params);
        case TheoremId::comm:
            return comm_check(params);
        case TheoremId::genjacobi:
            return genjacobi_check(params);
        case TheoremId::gencomm:
            return gencomm_check(params);
        case TheoremId::fourterm:
            return fourterm_check(params);
        case TheoremId::specialize:
            return specialize_check(params);
        case TheoremId::bridge:
            return bridge_check(params);
    }
    throw std::invalid_argument("theorem_check: unknown identity");
}

}  // namespace freeboson
