#include "freeboson/voa.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "freeboson/regularized.hpp"

namespace freeboson {

namespace {

using ModeKey = std::tuple<std::vector<int>, int, std::vector<int>>;

class ModeCache {
public:
    bool find(const ModeKey& key, FockVector& out) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) {
            return false;
        }
        out = it->second;
        return true;
    }
    void store(ModeKey key, const FockVector& value) {
        std::lock_guard<std::mutex> lock(mutex_);
        map_.emplace(std::move(key), value);
    }

private:
    std::mutex mutex_;
    std::map<ModeKey, FockVector> map_;
};

ModeCache& mode_cache() {
    static ModeCache cache;
    return cache;
}

// sum_i (mu_i) = total with mu_i >= lower_i; applies h(-mu_i) and weights C(mu_i - 1, n_i - 1)
void place_creators(const std::vector<int>& ns, std::size_t i, int remaining, const FockVector& w, const Scalar& coeff,
                    FockVector& out) {
    if (i == ns.size()) {
        if (remaining == 0) {
            out += coeff * w;
        }
        return;
    }
    int rest_min = 0;
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
        rest_min += ns[j];
    }
    for (int mu = ns[i]; mu <= remaining - rest_min; ++mu) {
        const Scalar c = binomial(mu - 1, ns[i] - 1);
        place_creators(ns, i + 1, remaining - mu, h_apply(-mu, w), coeff * c, out);
    }
}

// annihilators first (they commute and act on v), creators deferred
void place_annihilators(const std::vector<int>& parts, std::size_t i, int sum, std::vector<int>& creators,
                        const FockVector& w, const Scalar& coeff, int target, FockVector& out) {
    if (w.is_zero()) {
        return;
    }
    if (i == parts.size()) {
        // creators: sum_c (n_c - mu_c) = target - sum
        int ncsum = 0;
        for (int n : creators) {
            ncsum += n;
        }
        const int mu_total = ncsum - (target - sum);
        if (creators.empty()) {
            if (mu_total == 0) {
                out += coeff * w;
            }
            return;
        }
        if (mu_total < ncsum) {
            return;
        }
        place_creators(creators, 0, mu_total, w, coeff, out);
        return;
    }
    const int ni = parts[i];
    creators.push_back(ni);
    place_annihilators(parts, i + 1, sum, creators, w, coeff, target, out);
    creators.pop_back();
    const int top = w.max_weight();
    for (int m = 1; m <= top; ++m) {
        const Scalar c = binomial(-m - 1, ni - 1);
        if (c.is_zero()) {
            continue;
        }
        place_annihilators(parts, i + 1, sum + m + ni, creators, h_apply(m, w), coeff * c, target, out);
    }
}

FockVector mode_on_basis(const Partition& u, int n, const Partition& v) {
    ModeKey key{u.parts(), n, v.parts()};
    FockVector out;
    if (mode_cache().find(key, out)) {
        return out;
    }
    std::vector<int> creators;
    place_annihilators(u.parts(), 0, 0, creators, FockVector(v), Scalar(1), n + 1, out);
    mode_cache().store(std::move(key), out);
    return out;
}

struct BracketCache {
    std::mutex mutex;
    std::map<std::pair<std::string, std::string>, VectorSeries> series;
};

BracketCache& bracket_cache() {
    static BracketCache cache;
    return cache;
}

}  // namespace

const VoaConfig& free_boson() {
    static const VoaConfig config{Scalar(1), FockVector::vacuum(), FockVector(Partition{1, 1}, Scalar(1, 2))};
    return config;
}

FockVector v0() { return FockVector(Partition{1}); }

int weight_bound(const FockVector& v) { return v.max_weight(); }

FockVector vertex_mode(const FockVector& u, int n, const FockVector& v) {
    FockVector out;
    for (const auto& [pu, cu] : u.terms()) {
        for (const auto& [pv, cv] : v.terms()) {
            const FockVector r = mode_on_basis(pu, n, pv);
            if (!r.is_zero()) {
                out += (cu * cv) * r;
            }
        }
    }
    return out;
}

FockVector x_mode(const FockVector& u, int n, const FockVector& v) {
    FockVector out;
    for (const auto& [w, part] : weight_components(u)) {
        out += vertex_mode(part, n + w - 1, v);
    }
    return out;
}

int bracket_lowest_power(const FockVector& u, const FockVector& v) { return -(u.max_weight() + v.max_weight()); }

VectorSeries y_bracket_apply(const FockVector& u, const FockVector& v, int order, const std::string& y) {
    const int wv = v.max_weight();
    const int lowest = bracket_lowest_power(u, v);
    if (order < lowest) {
        throw WindowInsufficient("y_bracket_apply: order below the lowest power");
    }
    VectorSeries total({laurent_window(y, lowest, order)});
    if (u.is_zero() || v.is_zero()) {
        return total;
    }
    const std::string x = y + "_x";
    for (const auto& [w, part] : weight_components(u)) {
        // Y(u_w, x) v = sum_N (u_w)_N v x^{-N-1}; modes above w + wt v - 1 vanish by weight
        const int low = -(w + wv);
        if (low > order) {
            continue;
        }
        VectorSeries h({laurent_window(x, low, order)});
        for (int e = low; e <= order; ++e) {
            h.set({e}, vertex_mode(part, -e - 1, v));
        }
        const VectorSeries s = subst_em1(h, x, y, order);
        const VectorSeries term = mul(exp_linear(y, Scalar(w), order - low), s);
        total = add(total, term.restrict(y, lowest, order));
    }
    return total;
}

FockVector bracket_coeff(const FockVector& u, int k, const FockVector& v) {
    if (k < bracket_lowest_power(u, v)) {
        return {};
    }
    auto& cache = bracket_cache();
    const auto key = std::make_pair(u.str(), v.str());
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.series.find(key);
        if (it != cache.series.end() && it->second.vars()[0].high >= k) {
            return it->second.coeff({k});
        }
    }
    const VectorSeries s = y_bracket_apply(u, v, std::max(k, 4));
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto& slot = cache.series[key];
    if (slot.nvars() == 0 || slot.vars()[0].high < s.vars()[0].high) {
        slot = s;
    }
    return s.coeff({k});
}

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::lower_truncation:
            return "lower-truncation";
        case Axiom::vacuum:
            return "vacuum";
        case Axiom::creation:
            return "creation";
        case Axiom::derivative:
            return "L(-1)-derivative";
        case Axiom::grading:
            return "L(0)-grading";
    }
    return "";
}

Axiom parse_axiom(const std::string& name) {
    for (Axiom a : {Axiom::lower_truncation, Axiom::vacuum, Axiom::creation, Axiom::derivative, Axiom::grading}) {
        if (to_string(a) == name) {
            return a;
        }
    }
    throw std::invalid_argument("unknown axiom: " + name);
}

CheckReport axiom_check(Axiom axiom, int max_weight, int mode_window) {
    Json params;
    params["axiom"] = to_string(axiom);
    params["weight_cap"] = max_weight;
    params["mode_window"] = mode_window;
    CheckRecorder rec("AXIOMS", params);
    const auto basis = basis_up_to(max_weight);
    const FockVector vac = FockVector::vacuum();
    const FockVector& omega = free_boson().omega;
    switch (axiom) {
        case Axiom::lower_truncation:
            for (const auto& pu : basis) {
                for (const auto& pv : basis) {
                    const FockVector u(pu);
                    const FockVector v(pv);
                    const int edge = pu.weight() + pv.weight() - 1;
                    for (int n = edge + 1; n <= edge + 3; ++n) {
                        rec.compare({n}, vertex_mode(u, n, v), FockVector(), to_json(v));
                    }
                    // weight law below the edge
                    for (int n = -mode_window; n <= edge; ++n) {
                        const FockVector r = vertex_mode(u, n, v);
                        FockVector expected;
                        for (const auto& [w, part] : weight_components(r)) {
                            if (w == edge - n) {
                                expected = part;
                            }
                        }
                        rec.compare({n}, r, expected, to_json(v));
                    }
                }
            }
            break;
        case Axiom::vacuum:
            for (const auto& pv : basis) {
                const FockVector v(pv);
                for (int n = -mode_window; n <= mode_window; ++n) {
                    rec.compare({n}, vertex_mode(vac, n, v), n == -1 ? v : FockVector(), to_json(v));
                }
            }
            break;
        case Axiom::creation:
            for (const auto& pv : basis) {
                const FockVector v(pv);
                for (int n = -1; n <= mode_window; ++n) {
                    rec.compare({n}, vertex_mode(v, n, vac), n == -1 ? v : FockVector(), to_json(vac));
                }
            }
            break;
        case Axiom::derivative:
            for (const auto& pv : basis) {
                const FockVector v(pv);
                const FockVector lv = vertex_mode(omega, 0, v);
                for (const auto& pw : basis) {
                    const FockVector w(pw);
                    for (int n = -mode_window; n <= mode_window; ++n) {
                        rec.compare({n}, vertex_mode(lv, n, w), Scalar(-n) * vertex_mode(v, n - 1, w), to_json(w));
                    }
                }
            }
            break;
        case Axiom::grading:
            for (const auto& pv : basis) {
                const FockVector v(pv);
                rec.compare({1}, vertex_mode(omega, 1, v), Scalar(pv.weight()) * v, to_json(v));
                rec.compare({0}, vertex_mode(omega, 1, v), virasoro_apply(0, v), to_json(v));
            }
            break;
    }
    return rec.finish();
}

CheckReport jacobi_check(const FockVector& u, const FockVector& v, const FockVector& target, int window) {
    Json params;
    params["u"] = to_json(u);
    params["v"] = to_json(v);
    params["target"] = to_json(target);
    params["window"] = window;
    CheckRecorder rec("JACOBI", params);
    const int wu = u.max_weight();
    const int wv = v.max_weight();
    const int ww = target.max_weight();
    const Json tj = to_json(target);
    // C(n, k) (-1)^k from (a - b)^n in nonnegative powers of b
    std::map<std::pair<int, int>, ScalarSeries> binoms;
    auto binom = [&](int n, int k) {
        const int order = 4 * window + wu + wv + ww + 4;
        auto it = binoms.find({n, order});
        if (it == binoms.end()) {
            it = binoms.emplace(std::make_pair(n, order), binom_expand("a", "b", n, order)).first;
        }
        return it->second.coeff({n - k, k});
    };
    for (int a = -window; a <= window; ++a) {
        const int n = -a - 1;
        const Scalar sign_n(n % 2 == 0 ? 1 : -1);
        for (int b = -window; b <= window; ++b) {
            for (int c = -window; c <= window; ++c) {
                FockVector lhs1;
                for (int k = 0; k <= c + wv + ww; ++k) {
                    const Scalar coef = binom(n, k);
                    if (!coef.is_zero()) {
                        lhs1 += coef * vertex_mode(u, n - k - b - 1, vertex_mode(v, k - c - 1, target));
                    }
                }
                FockVector lhs2;
                for (int k = 0; k <= b + wu + ww; ++k) {
                    const Scalar coef = binom(n, k);
                    if (!coef.is_zero()) {
                        lhs2 += coef * vertex_mode(v, n - k - c - 1, vertex_mode(u, k - b - 1, target));
                    }
                }
                FockVector rhs;
                for (int k = 0; k <= a + wu + wv; ++k) {
                    const Scalar coef = binom(b + k, k);
                    if (!coef.is_zero()) {
                        rhs += coef * vertex_mode(vertex_mode(u, k - a - 1, v), -b - k - c - 2, target);
                    }
                }
                rec.compare({a, b, c}, lhs1 - sign_n * lhs2, rhs, tj);
            }
        }
    }
    return rec.finish();
}

}  // namespace freeboson
