#include "freeboson/series.hpp"

namespace freeboson {

namespace {

/// Dense u^alpha for a univariate power series u with u[0] = 1 (Miller's recurrence).
std::vector<Scalar> unit_power(const std::vector<Scalar>& u, int alpha, int order) {
    std::vector<Scalar> g(static_cast<std::size_t>(order) + 1);
    g[0] = Scalar(1);
    const Scalar a(alpha);
    for (int k = 1; k <= order; ++k) {
        Scalar acc;
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j) {
            acc += ((a + Scalar(1)) * Scalar(j) - Scalar(k)) * u[j] * g[k - j];
        }
        g[k] = acc / Scalar(k);
    }
    return g;
}

}  // namespace

ScalarSeries binom_expand(const std::string& a, const std::string& b, int n, int order) {
    if (a == b) {
        throw VariableMismatch("binom_expand: variables must differ");
    }
    if (n >= 0) {
        ScalarSeries out({poly_window(a, 0, n), poly_window(b, 0, n)});
        for (int k = 0; k <= n; ++k) {
            Scalar c = binomial(n, k);
            if (k % 2 != 0) {
                c = -c;
            }
            out.set({n - k, k}, c);
        }
        return out;
    }
    if (order < 0) {
        throw std::invalid_argument("binom_expand: negative order");
    }
    // a^{n-k} is only populated down to n - order for b^k, k <= order
    ScalarSeries out({VarWindow{a, n - order, n, false, true}, power_window(b, order)});
    for (int k = 0; k <= order; ++k) {
        Scalar c = binomial(n, k);
        if (k % 2 != 0) {
            c = -c;
        }
        out.set({n - k, k}, c);
    }
    return out;
}

ScalarSeries delta_series(const std::string& x, int n_window) {
    if (n_window < 0) {
        throw std::invalid_argument("delta_series: negative window");
    }
    ScalarSeries out({open_window(x, -n_window, n_window)});
    for (int n = -n_window; n <= n_window; ++n) {
        out.set({n}, Scalar(1));
    }
    return out;
}

ScalarSeries log1m(const std::string& t, int order) {
    if (order < 1) {
        throw std::invalid_argument("log1m: order must be >= 1");
    }
    ScalarSeries out({power_window(t, order)});
    for (int k = 1; k <= order; ++k) {
        out.set({k}, Scalar(-1, k));
    }
    return out;
}

ScalarSeries exp_linear(const std::string& t, const Scalar& c, int order) {
    ScalarSeries out({power_window(t, order)});
    Scalar term(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            term *= c / Scalar(k);
        }
        out.set({k}, term);
    }
    return out;
}

ScalarSeries exp_of(const ScalarSeries& f) {
    if (f.nvars() != 1) {
        throw VariableMismatch("exp_of: expects a one-variable series");
    }
    const VarWindow& w = f.vars()[0];
    if (!w.zero_below || w.low < 0 || w.zero_above) {
        throw WindowInsufficient("exp_of: argument must be a truncated power series");
    }
    if (!f.coeff({0}).is_zero()) {
        throw std::invalid_argument("exp_of: argument must have zero constant term");
    }
    const int order = w.high;
    std::vector<Scalar> fc(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        fc[k] = f.coeff({k});
    }
    // g' = f' g
    std::vector<Scalar> g(fc.size());
    g[0] = Scalar(1);
    for (int n = 1; n <= order; ++n) {
        Scalar acc;
        for (int k = 1; k <= n; ++k) {
            acc += Scalar(k) * fc[k] * g[n - k];
        }
        g[n] = acc / Scalar(n);
    }
    ScalarSeries out({power_window(w.name, order)});
    for (int n = 0; n <= order; ++n) {
        out.set({n}, g[n]);
    }
    return out;
}

ScalarSeries inverse(const ScalarSeries& f, const std::string& y) {
    const std::size_t yi = f.index_of(y);
    const VarWindow& w = f.vars()[yi];
    if (!w.zero_below || w.low < 0) {
        throw WindowInsufficient("inverse: argument must be a power series in " + y);
    }
    if (w.zero_above) {
        throw WindowInsufficient("inverse: argument has no truncation order in " + y);
    }
    const int order = w.high;
    // leading coefficient must be a single monomial
    const Exponents* lead_e = nullptr;
    const Scalar* lead_c = nullptr;
    for (const auto& [e, c] : f.terms()) {
        if (e[yi] == 0) {
            if (lead_e != nullptr) {
                throw std::invalid_argument("inverse: constant coefficient is not a monomial");
            }
            lead_e = &e;
            lead_c = &c;
        }
    }
    if (lead_e == nullptr) {
        throw std::invalid_argument("inverse: constant coefficient vanishes");
    }
    const auto names = f.names();
    Exponents inv_e(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        inv_e[i] = -(*lead_e)[i];
    }
    const auto lead_inv = ScalarSeries::monomial(names, inv_e, Scalar(1) / *lead_c);
    // f = lead (1 + E), E of positive y-order
    ScalarSeries normalised = mul(lead_inv, f);
    ScalarSeries minus_e(normalised.vars());
    for (const auto& [e, c] : normalised.terms()) {
        if (e[yi] != 0) {
            minus_e.set(e, -c);
        }
    }
    Exponents zero(names.size(), 0);
    ScalarSeries sum = ScalarSeries::monomial(names, zero, Scalar(1));
    ScalarSeries power_k = sum;
    for (int k = 1; k <= order; ++k) {
        power_k = mul(power_k, minus_e);
        sum = add(sum.over(power_k.names()), power_k);
    }
    return mul(lead_inv, sum).restrict(y, 0, order);
}

ScalarSeries power(const ScalarSeries& f, const std::string& y, int n) {
    ScalarSeries base = n < 0 ? inverse(f, y) : f;
    const int m = n < 0 ? -n : n;
    Exponents zero(f.nvars(), 0);
    ScalarSeries out = ScalarSeries::monomial(f.names(), zero, Scalar(1));
    for (int k = 0; k < m; ++k) {
        out = mul(out, base);
    }
    return out;
}

std::vector<Scalar> unit_series_power(const std::vector<Scalar>& u, int alpha, int order) {
    if (u.empty() || u[0] != Scalar(1)) {
        throw std::invalid_argument("unit_series_power: constant term must be 1");
    }
    if (order < 0) {
        return {};
    }
    return unit_power(u, alpha, order);
}

std::vector<Scalar> em1_unit_coeffs(int order) {
    std::vector<Scalar> u(static_cast<std::size_t>(std::max(order, 0)) + 1);
    for (int k = 0; k <= order; ++k) {
        u[k] = Scalar(1) / factorial(static_cast<unsigned>(k + 1));
    }
    return u;
}

std::vector<Scalar> em1_unit_power(int n, int order) {
    if (order < 0) {
        return {};
    }
    return unit_power(em1_unit_coeffs(order), n, order);
}

ScalarSeries reg_inv_one_minus_exp(const std::string& y1, const std::string& y2, int order) {
    if (order < 0) {
        throw std::invalid_argument("reg_inv_one_minus_exp: negative order");
    }
    // t/(1 - e^{-t}) = 1 / v(t), v(t) = (1 - e^{-t})/t = sum (-1)^k t^k/(k+1)!
    const int kmax = 2 * order + 1;
    std::vector<Scalar> v(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        v[k] = Scalar(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k + 1));
    }
    const auto f = unit_power(v, -1, kmax);

    ScalarSeries out({open_window(y1, -1, order), power_window(y2, order)});
    // (y1 - y2)^{-1} in nonnegative powers of y2: only y1^{-1} y2^0 fits the window
    out.accumulate({-1, 0}, Scalar(1));
    for (int k = 1; k <= kmax; ++k) {
        const int d = k - 1;
        for (int j = 0; j <= d; ++j) {
            Scalar c = f[k] * binomial(d, j);
            if (j % 2 != 0) {
                c = -c;
            }
            out.accumulate({d - j, j}, c);
        }
    }
    return out;
}

}  // namespace freeboson
