#include "freeboson/regularized.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "freeboson/series.hpp"
#include "freeboson/tps.hpp"

namespace freeboson {

BernoulliTable::BernoulliTable(int max_k) {
    if (max_k < 0) {
        throw std::invalid_argument("BernoulliTable: negative size");
    }
    // invert (e^x - 1)/x = sum x^k/(k+1)!
    values_.resize(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        Scalar acc;
        for (int j = 1; j <= k; ++j) {
            acc += values_[k - j] / factorial(static_cast<unsigned>(k - j)) / factorial(static_cast<unsigned>(j + 1));
        }
        // B_k / k! = (k == 0) - acc
        values_[k] = ((k == 0 ? Scalar(1) : Scalar(0)) - acc) * factorial(static_cast<unsigned>(k));
    }
}

const BernoulliTable& bernoulli_table(int k) {
    static std::mutex mutex;
    static std::unique_ptr<BernoulliTable> table;
    std::lock_guard<std::mutex> lock(mutex);
    if (!table || table->max_k() < k) {
        // grown tables are kept alive so references handed out stay valid
        static std::vector<std::unique_ptr<BernoulliTable>> retired;
        if (table) {
            retired.push_back(std::move(table));
        }
        table = std::make_unique<BernoulliTable>(std::max(k, 32));
    }
    return *table;
}

Scalar bernoulli(int k) {
    if (k < 0) {
        throw std::invalid_argument("bernoulli: negative index");
    }
    return bernoulli_table(k)[k];
}

Scalar zeta_neg(int k) {
    if (k < 2) {
        throw std::invalid_argument("zeta_neg: k must be at least 2");
    }
    return -bernoulli(k) / Scalar(k);
}

Scalar regularization_constant(int r) {
    if (r < 0) {
        throw std::invalid_argument("regularization_constant: negative r");
    }
    const Scalar half_zeta = zeta_neg(2 * r + 2) / Scalar(2);
    return r % 2 == 0 ? half_zeta : -half_zeta;
}

FockVector normal_quadratic(int n, const std::function<Scalar(int)>& c, const FockVector& v) {
    FockVector out;
    if (v.is_zero()) {
        return out;
    }
    const int bound = v.max_weight() + std::abs(n);
    for (int j = -bound; j <= bound; ++j) {
        const Scalar cj = c(j);
        if (cj.is_zero()) {
            continue;
        }
        const int k = n - j;
        // annihilator on the right
        const int first = std::max(j, k);
        const int second = std::min(j, k);
        FockVector w = h_apply(first, v);
        if (w.is_zero()) {
            continue;
        }
        w = h_apply(second, w);
        out += cj * w;
    }
    return out;
}

FockVector quad_apply(const QuadraticOpSpec& spec, const FockVector& v) {
    if (spec.r_left < 0 || spec.r_right < 0) {
        throw std::invalid_argument("quad_apply: negative derivative order");
    }
    const int n = spec.n;
    const Scalar half(1, 2);
    FockVector out = normal_quadratic(
        n,
        [&](int j) {
            return half * pow(Scalar(j), static_cast<unsigned>(spec.r_left)) *
                   pow(Scalar(n - j), static_cast<unsigned>(spec.r_right));
        },
        v);
    if (spec.regularized && n == 0 && spec.r_left == spec.r_right) {
        out += regularization_constant(spec.r_left) * v;
    }
    return out;
}

FockVector virasoro_apply(int n, const FockVector& v) { return quad_apply({0, 0, n, false}, v); }

FockVector virasoro_bar_apply(int n, const FockVector& v) { return quad_apply({0, 0, n, true}, v); }

namespace {

CheckReport bracket_check(const std::string& id, int m, int n, int max_weight, bool regularized) {
    Json params;
    params["m"] = m;
    params["n"] = n;
    params["weight_cap"] = max_weight;
    CheckRecorder rec(id, params);
    auto op = [&](int k, const FockVector& v) { return regularized ? virasoro_bar_apply(k, v) : virasoro_apply(k, v); };
    const Scalar m3(m * m * m);
    const Scalar central = m + n != 0 ? Scalar(0) : (regularized ? m3 : m3 - Scalar(m)) / Scalar(12);
    for (const auto& b : basis_up_to(max_weight)) {
        const FockVector v(b);
        const FockVector lhs = op(m, op(n, v)) - op(n, op(m, v));
        const FockVector rhs = Scalar(m - n) * op(m + n, v) + central * v;
        rec.compare({m, n}, lhs, rhs, to_json(v));
    }
    rec.details()["central_term"] = central.str();
    return rec.finish();
}

// exact solve of a square system, used for the polynomial fit in central_term
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            throw std::runtime_error("central_term: singular fit");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Scalar f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[i] / a[i][i];
    }
    return x;
}

}  // namespace

CheckReport virasoro_check(int m, int n, int max_weight) { return bracket_check("VIRASORO", m, n, max_weight, false); }

CheckReport modified_virasoro_check(int m, int n, int max_weight) {
    return bracket_check("MODVIR", m, n, max_weight, true);
}

Scalar central_term(int r, int s, int m, int max_weight) {
    if (m == 0) {
        throw std::invalid_argument("central_term: m must be nonzero");
    }
    if (r < 0 || s < 0) {
        throw std::invalid_argument("central_term: negative derivative order");
    }
    const int degree = r + s;
    const int cap = max_weight < 0 ? 2 * r + 2 * s + 4 : max_weight;
    if (cap < degree + 1) {
        throw std::invalid_argument("central_term: weight cap too small for the fit");
    }
    auto commutator = [&](const FockVector& v) {
        const QuadraticOpSpec a{r, r, m, true};
        const QuadraticOpSpec b{s, s, -m, true};
        return quad_apply(a, quad_apply(b, v)) - quad_apply(b, quad_apply(a, v));
    };
    const FockVector vac = FockVector::vacuum();
    const FockVector cv = commutator(vac);
    const Scalar vac_value = cv.coeff(Partition{});
    if (!(cv == vac_value * vac)) {
        throw std::runtime_error("central_term: commutator does not preserve the vacuum line");
    }
    // operator part sum_k a_k L^(k)(0), L^(k)(0) h(-j)1 = (-1)^k j^{2k+1} h(-j)1
    std::vector<std::vector<Scalar>> mat;
    std::vector<Scalar> rhs;
    for (int j = 1; j <= degree + 1; ++j) {
        const Partition p{j};
        const FockVector img = commutator(FockVector(p));
        std::vector<Scalar> row;
        for (int k = 0; k <= degree; ++k) {
            const Scalar jj = pow(Scalar(j), static_cast<unsigned>(2 * k + 1));
            row.push_back(k % 2 == 0 ? jj : -jj);
        }
        mat.push_back(std::move(row));
        rhs.push_back(img.coeff(p) - vac_value);
    }
    const auto a = solve(mat, rhs);
    for (const auto& b : basis_up_to(cap)) {
        const FockVector v(b);
        FockVector expected = vac_value * v;
        for (int k = 0; k <= degree; ++k) {
            if (!a[k].is_zero()) {
                expected += a[k] * quad_apply({k, k, 0, false}, v);
            }
        }
        if (!(commutator(v) == expected)) {
            throw std::runtime_error("central_term: identity component inconsistent on " + b.str());
        }
    }
    Scalar lambda = vac_value;
    for (int k = 0; k <= degree; ++k) {
        lambda -= a[k] * regularization_constant(k);
    }
    return lambda;
}

CheckReport pure_monomial_check(int r, int s, const std::vector<int>& modes, int max_weight) {
    Json params;
    params["r"] = r;
    params["s"] = s;
    params["modes"] = modes;
    params["weight_cap"] = max_weight < 0 ? 2 * r + 2 * s + 4 : max_weight;
    CheckRecorder rec("BLOCH-MONOMIAL", params);
    Json lambdas = Json::array();
    std::optional<Scalar> first;
    for (int m : modes) {
        Scalar lambda;
        try {
            lambda = central_term(r, s, m, max_weight);
        } catch (const std::runtime_error& e) {
            rec.fail(e.what());
            continue;
        }
        const Scalar ratio = lambda / ipow(Scalar(m), 2 * r + 2 * s + 3);
        lambdas.push_back(Json{{"m", m}, {"lambda", lambda.str()}, {"ratio", ratio.str()}});
        if (!first) {
            first = ratio;
        }
        rec.compare({m}, ratio, *first);
    }
    rec.details()["central_terms"] = std::move(lambdas);
    if (first) {
        rec.details()["constant"] = first->str();
    }
    return rec.finish();
}

Scalar gen_quadratic_scalar(int a, int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("gen_quadratic_scalar: negative exponent");
    }
    const int order = std::max(a + 1, b);
    const auto d = derivative(reg_inv_one_minus_exp("y1", "y2", order), "y1");
    return -d.coeff({a, b}) / Scalar(2);
}

FockVector gen_quadratic_coeff(int a, int b, int n, bool regularized, const FockVector& v) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("gen_quadratic_coeff: negative exponent");
    }
    // e^{-j y1 - (n-j) y2} at y1^a y2^b
    const Scalar denom = factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)) * Scalar(2);
    FockVector out = normal_quadratic(
        n,
        [&](int j) {
            return pow(Scalar(-j), static_cast<unsigned>(a)) * pow(Scalar(j - n), static_cast<unsigned>(b)) / denom;
        },
        v);
    if (regularized && n == 0) {
        out += gen_quadratic_scalar(a, b) * v;
    }
    return out;
}

CheckReport wick_check(int window, int max_weight, int y_order) {
    Json params;
    params["x_window"] = window;
    params["weight_cap"] = max_weight;
    if (y_order >= 0) {
        params["y_order"] = y_order;
    }
    CheckRecorder rec(y_order >= 0 ? "WICK-DILATED" : "WICK", params);
    const int n = window;
    // x2 d/dx2 of x1/(x1 - x2), expanded in nonnegative powers of x2
    ScalarSeries geo = mul(ScalarSeries::monomial({"x1"}, {1}, Scalar(1)), binom_expand("x1", "x2", -1, 2 * n + 1));
    ScalarSeries contraction = shift(derivative(geo, "x2"), "x2", 1);
    try {
        for (const auto& b : basis_up_to(max_weight)) {
            const FockVector v(b);
            VectorSeries lhs({open_window("x1", -n, n), open_window("x2", -n, n)});
            VectorSeries normal({open_window("x1", -n, n), open_window("x2", -n, n)});
            for (int i = -n; i <= n; ++i) {
                for (int j = -n; j <= n; ++j) {
                    // x1^i x2^j carries h(-i) h(-j)
                    lhs.set({i, j}, h_apply(-i, h_apply(-j, v)));
                    const int hi = std::max(-i, -j);
                    const int lo = std::min(-i, -j);
                    normal.set({i, j}, h_apply(lo, h_apply(hi, v)));
                }
            }
            VectorSeries rhs = add(normal, mul(contraction, VectorSeries::monomial({"x1", "x2"}, {0, 0}, v)));
            if (y_order >= 0) {
                lhs = dilate(dilate(lhs, "x1", "y1", y_order), "x2", "y2", y_order);
                rhs = dilate(dilate(rhs, "x1", "y1", y_order), "x2", "y2", y_order);
            }
            for (const auto& mm : compare(lhs, rhs)) {
                rec.compare(mm.exponents, mm.lhs, mm.rhs, to_json(v));
            }
            rec.count(static_cast<std::int64_t>(lhs.terms().size()));
        }
    } catch (const WindowInsufficient& e) {
        rec.window_error(e.what());
    }
    return rec.finish();
}

}  // namespace freeboson
