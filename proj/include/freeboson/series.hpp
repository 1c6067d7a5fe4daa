#pragma once

// Multivariate truncated formal Laurent series with per-variable windows.
//
// Each variable carries a window [low, high] and two flags. A coefficient is
// KNOWN when, in every variable, its exponent lies in the known interval
//   [zero_below ? -inf : low,  zero_above ? +inf : high]
// and every coefficient whose exponent leaves [low, high] on a side flagged
// zero_* is exactly zero. Everything else is UNKNOWN; nothing outside a
// window is ever assumed to vanish.
//
// A power series in x carries zero_below with low = 0; a polynomial carries
// both flags; the truncated delta series carries neither.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freeboson/fock.hpp"
#include "freeboson/scalar.hpp"

namespace freeboson {

struct VarWindow {
    std::string name;
    int low = 0;
    int high = 0;
    bool zero_below = false;
    bool zero_above = false;

    friend bool operator==(const VarWindow&, const VarWindow&) = default;
};

inline VarWindow power_window(std::string name, int high) { return {std::move(name), 0, high, true, false}; }
inline VarWindow laurent_window(std::string name, int low, int high, bool zero_below = true) {
    return {std::move(name), low, high, zero_below, false};
}
inline VarWindow poly_window(std::string name, int low, int high) { return {std::move(name), low, high, true, true}; }
inline VarWindow open_window(std::string name, int low, int high) { return {std::move(name), low, high, false, false}; }

using Exponents = std::vector<int>;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A product whose coefficients would be infinite sums (e.g. delta * delta).
class IllDefinedProduct : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// A requested coefficient lies outside what the inputs determine.
class WindowInsufficient : public SeriesError {
public:
    using SeriesError::SeriesError;
};

class VariableMismatch : public SeriesError {
public:
    using SeriesError::SeriesError;
};

namespace detail {

inline constexpr std::int64_t kInf = std::int64_t{1} << 40;

struct Interval {
    std::int64_t lo;
    std::int64_t hi;
    [[nodiscard]] bool empty() const { return lo > hi; }
    [[nodiscard]] bool contains(std::int64_t e) const { return lo <= e && e <= hi; }
};

inline std::int64_t ext_add(std::int64_t a, std::int64_t b) {
    if (a <= -kInf || b <= -kInf) {
        return -kInf;
    }
    if (a >= kInf || b >= kInf) {
        return kInf;
    }
    return a + b;
}

/// Possible-support interval.
inline Interval support_of(const VarWindow& w) {
    return {w.zero_below ? w.low : -kInf, w.zero_above ? w.high : kInf};
}

/// Known interval.
inline Interval known_of(const VarWindow& w) {
    return {w.zero_below ? -kInf : w.low, w.zero_above ? kInf : w.high};
}

/// Builds a window from support and known intervals; throws when the
/// intersection is empty or unbounded.
inline VarWindow make_window(const std::string& name, Interval support, Interval known) {
    const std::int64_t lo = std::max(support.lo, known.lo);
    const std::int64_t hi = std::min(support.hi, known.hi);
    if (lo > hi) {
        throw WindowInsufficient("empty result window in variable " + name);
    }
    if (lo <= -kInf || hi >= kInf) {
        throw WindowInsufficient("unbounded result window in variable " + name);
    }
    return {name, static_cast<int>(lo), static_cast<int>(hi), support.lo >= known.lo, support.hi <= known.hi};
}

inline bool coeff_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool coeff_is_zero(const FockVector& v) { return v.is_zero(); }
inline std::string coeff_str(const Scalar& s) { return s.str(); }
inline std::string coeff_str(const FockVector& v) { return v.str(); }

}  // namespace detail

template <class C>
class Series {
public:
    using Terms = std::map<Exponents, C>;

    Series() = default;
    explicit Series(std::vector<VarWindow> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].low > vars_[i].high) {
                throw std::invalid_argument("Series: window low > high for " + vars_[i].name);
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (vars_[i].name == vars_[j].name) {
                    throw VariableMismatch("Series: duplicate variable " + vars_[i].name);
                }
            }
        }
    }

    /// c * prod x_i^{e_i}, exact in every variable.
    static Series monomial(const std::vector<std::string>& names, const Exponents& e, C c) {
        std::vector<VarWindow> vars;
        for (std::size_t i = 0; i < names.size(); ++i) {
            vars.push_back(poly_window(names[i], e[i], e[i]));
        }
        Series s(std::move(vars));
        s.set(e, std::move(c));
        return s;
    }

    /// A constant with no variables.
    static Series constant(C c) {
        Series s(std::vector<VarWindow>{});
        s.set({}, std::move(c));
        return s;
    }

    [[nodiscard]] const std::vector<VarWindow>& vars() const { return vars_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::size_t nvars() const { return vars_.size(); }

    [[nodiscard]] std::optional<std::size_t> find_var(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].name == name) {
                return i;
            }
        }
        return std::nullopt;
    }
    [[nodiscard]] std::size_t index_of(const std::string& name) const {
        auto i = find_var(name);
        if (!i) {
            throw VariableMismatch("Series: no variable " + name);
        }
        return *i;
    }
    [[nodiscard]] const VarWindow& window(const std::string& name) const { return vars_[index_of(name)]; }

    [[nodiscard]] bool in_window(const Exponents& e) const {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] < vars_[i].low || e[i] > vars_[i].high) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool known(const Exponents& e) const {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!detail::known_of(vars_[i]).contains(e[i])) {
                return false;
            }
        }
        return true;
    }

    /// Coefficient at e; throws WindowInsufficient when it is not determined.
    [[nodiscard]] C coeff(const Exponents& e) const {
        if (e.size() != vars_.size()) {
            throw VariableMismatch("Series: exponent arity mismatch");
        }
        if (!known(e)) {
            throw WindowInsufficient("Series: coefficient outside known window");
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    /// Stores c at e (which must lie in the window); zero removes the entry.
    void set(const Exponents& e, C c) {
        if (!in_window(e)) {
            throw WindowInsufficient("Series: exponent outside declared window");
        }
        if (detail::coeff_is_zero(c)) {
            terms_.erase(e);
        } else {
            terms_[e] = std::move(c);
        }
    }

    /// Adds c at e when e is inside the window; silently drops it otherwise.
    void accumulate(const Exponents& e, const C& c) {
        if (detail::coeff_is_zero(c) || !in_window(e)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    /// Narrows the window of one variable, dropping terms outside it.
    [[nodiscard]] Series restrict(const std::string& name, int low, int high) const {
        const std::size_t i = index_of(name);
        std::vector<VarWindow> vars = vars_;
        VarWindow& w = vars[i];
        if (low > w.low) {
            w.low = low;
            w.zero_below = false;
        }
        if (high < w.high) {
            w.high = high;
            w.zero_above = false;
        }
        Series out(std::move(vars));
        for (const auto& [e, c] : terms_) {
            if (out.in_window(e)) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Same series re-expressed over a superset of variables (new ones exact at exponent 0)
    /// in the given order.
    [[nodiscard]] Series over(const std::vector<std::string>& names) const {
        std::vector<VarWindow> vars;
        std::vector<std::optional<std::size_t>> src;
        for (const auto& n : names) {
            auto i = find_var(n);
            src.push_back(i);
            vars.push_back(i ? vars_[*i] : poly_window(n, 0, 0));
        }
        for (const auto& w : vars_) {
            if (std::find(names.begin(), names.end(), w.name) == names.end()) {
                throw VariableMismatch("Series::over drops variable " + w.name);
            }
        }
        Series out(std::move(vars));
        for (const auto& [e, c] : terms_) {
            Exponents f(names.size(), 0);
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (src[k]) {
                    f[k] = e[*src[k]];
                }
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    [[nodiscard]] std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& w : vars_) {
            out.push_back(w.name);
        }
        return out;
    }

    Series& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

private:
    template <class D>
    friend class Series;

    std::vector<VarWindow> vars_;
    Terms terms_;
};

using ScalarSeries = Series<Scalar>;
using VectorSeries = Series<FockVector>;

namespace detail {

inline std::vector<std::string> union_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& n : b) {
        if (std::find(out.begin(), out.end(), n) == out.end()) {
            out.push_back(n);
        }
    }
    return out;
}

}  // namespace detail

/// Coefficientwise sum; the window in each variable is what both operands determine.
template <class C>
Series<C> add(const Series<C>& a, const Series<C>& b) {
    auto an = a.names();
    auto bn = b.names();
    if (std::is_permutation(an.begin(), an.end(), bn.begin(), bn.end()) == false) {
        throw VariableMismatch("add: operands have different variable sets");
    }
    const Series<C> bb = b.over(an);
    std::vector<VarWindow> vars;
    for (std::size_t i = 0; i < an.size(); ++i) {
        const auto pa = detail::support_of(a.vars()[i]);
        const auto pb = detail::support_of(bb.vars()[i]);
        const auto ka = detail::known_of(a.vars()[i]);
        const auto kb = detail::known_of(bb.vars()[i]);
        vars.push_back(detail::make_window(an[i], {std::min(pa.lo, pb.lo), std::max(pa.hi, pb.hi)},
                                           {std::max(ka.lo, kb.lo), std::min(ka.hi, kb.hi)}));
    }
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : a.terms()) {
        out.accumulate(e, c);
    }
    for (const auto& [e, c] : bb.terms()) {
        out.accumulate(e, c);
    }
    return out;
}

template <class C>
Series<C> sub(const Series<C>& a, const Series<C>& b) {
    Series<C> nb = b;
    nb *= Scalar(-1);
    return add(a, nb);
}

/// Exact product. Missing variables are treated as exact constants. The result
/// window is the set of exponents whose convolution sum only involves known
/// coefficients; throws IllDefinedProduct when that sum could be infinite.
template <class C>
Series<C> mul(const Series<Scalar>& a, const Series<C>& b) {
    using detail::ext_add;
    using detail::kInf;
    const auto names = detail::union_names(a.names(), b.names());
    const Series<Scalar> aa = a.over(names);
    const Series<C> bb = b.over(names);
    std::vector<VarWindow> vars;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto pa = detail::support_of(aa.vars()[i]);
        const auto pb = detail::support_of(bb.vars()[i]);
        const auto ka = detail::known_of(aa.vars()[i]);
        const auto kb = detail::known_of(bb.vars()[i]);
        if ((pa.lo <= -kInf && pb.hi >= kInf) || (pa.hi >= kInf && pb.lo <= -kInf)) {
            throw IllDefinedProduct("mul: infinite convolution sum in variable " + names[i]);
        }
        const detail::Interval pc{ext_add(pa.lo, pb.lo), ext_add(pa.hi, pb.hi)};
        detail::Interval g{-kInf, kInf};
        if (pa.lo < ka.lo) {
            g.lo = std::max(g.lo, ext_add(ka.lo, pb.hi));
        }
        if (pb.hi > kb.hi) {
            g.hi = std::min(g.hi, ext_add(pa.lo, kb.hi));
        }
        if (pa.hi > ka.hi) {
            g.hi = std::min(g.hi, ext_add(ka.hi, pb.lo));
        }
        if (pb.lo < kb.lo) {
            g.lo = std::max(g.lo, ext_add(pa.hi, kb.lo));
        }
        vars.push_back(detail::make_window(names[i], pc, g));
    }
    Series<C> out(std::move(vars));
    Exponents e(names.size());
    for (const auto& [ea, ca] : aa.terms()) {
        for (const auto& [eb, cb] : bb.terms()) {
            for (std::size_t i = 0; i < names.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            if (out.in_window(e)) {
                out.accumulate(e, ca * cb);
            }
        }
    }
    return out;
}

/// f(e^y x): the x^n coefficient is multiplied by exp(n y), truncated at y^order.
template <class C>
Series<C> dilate(const Series<C>& f, const std::string& x, const std::string& y, int order) {
    if (f.find_var(y)) {
        throw VariableMismatch("dilate: variable " + y + " is not fresh");
    }
    if (order < 0) {
        throw std::invalid_argument("dilate: negative order");
    }
    const std::size_t xi = f.index_of(x);
    std::vector<VarWindow> vars = f.vars();
    vars.push_back(power_window(y, order));
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : f.terms()) {
        const Scalar n(e[xi]);
        Scalar factor(1);
        Exponents g = e;
        g.push_back(0);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                factor *= n / Scalar(k);
            }
            g.back() = k;
            C term = c;
            term *= factor;
            out.accumulate(g, term);
        }
    }
    return out;
}

/// f(x + y) = exp(y d/dx) f, binomial expansion in nonnegative powers of y.
template <class C>
Series<C> taylor_shift(const Series<C>& f, const std::string& x, const std::string& y, int order) {
    if (f.find_var(y)) {
        throw VariableMismatch("taylor_shift: variable " + y + " is not fresh");
    }
    if (order < 0) {
        throw std::invalid_argument("taylor_shift: negative order");
    }
    const std::size_t xi = f.index_of(x);
    std::vector<VarWindow> vars = f.vars();
    const auto p = detail::support_of(vars[xi]);
    const auto k = detail::known_of(vars[xi]);
    vars[xi] = detail::make_window(x, {detail::ext_add(p.lo, -order), p.hi}, {k.lo, detail::ext_add(k.hi, -order)});
    vars.push_back(power_window(y, order));
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : f.terms()) {
        Exponents g = e;
        g.push_back(0);
        for (int j = 0; j <= order; ++j) {
            const Scalar b = binomial(e[xi], j);
            if (b.is_zero()) {
                continue;
            }
            g[xi] = e[xi] - j;
            g.back() = j;
            C term = c;
            term *= b;
            out.accumulate(g, term);
        }
    }
    return out;
}

/// d/dx
template <class C>
Series<C> derivative(const Series<C>& f, const std::string& x) {
    const std::size_t xi = f.index_of(x);
    std::vector<VarWindow> vars = f.vars();
    VarWindow& w = vars[xi];
    if (w.zero_below && w.low == 0 && (w.high >= 1 || w.zero_above)) {
        // power series stay power series
        w.high = std::max(w.high - 1, 0);
    } else {
        w.low -= 1;
        w.high -= 1;
    }
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : f.terms()) {
        if (e[xi] == 0) {
            continue;
        }
        Exponents g = e;
        g[xi] -= 1;
        C term = c;
        term *= Scalar(e[xi]);
        out.accumulate(g, term);
    }
    return out;
}

/// f(-x)
template <class C>
Series<C> negate_var(const Series<C>& f, const std::string& x) {
    const std::size_t xi = f.index_of(x);
    Series<C> out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        C term = c;
        if (e[xi] % 2 != 0) {
            term *= Scalar(-1);
        }
        out.accumulate(e, term);
    }
    return out;
}

/// x^k f
template <class C>
Series<C> shift(const Series<C>& f, const std::string& x, int k) {
    const std::size_t xi = f.index_of(x);
    std::vector<VarWindow> vars = f.vars();
    vars[xi].low += k;
    vars[xi].high += k;
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : f.terms()) {
        Exponents g = e;
        g[xi] += k;
        out.accumulate(g, c);
    }
    return out;
}

/// Coefficient of x^{-1}, as a series in the remaining variables.
template <class C>
Series<C> residue(const Series<C>& f, const std::string& x) {
    const std::size_t xi = f.index_of(x);
    if (!detail::known_of(f.vars()[xi]).contains(-1)) {
        throw WindowInsufficient("residue: exponent -1 outside the window of " + x);
    }
    std::vector<VarWindow> vars = f.vars();
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(xi));
    Series<C> out(std::move(vars));
    for (const auto& [e, c] : f.terms()) {
        if (e[xi] != -1) {
            continue;
        }
        Exponents g = e;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(xi));
        out.accumulate(g, c);
    }
    return out;
}

/// Coefficient of x^k, as a series in the remaining variables.
template <class C>
Series<C> coefficient_in(const Series<C>& f, const std::string& x, int k) {
    return residue(shift(f, x, -1 - k), x);
}

/// One located disagreement between two series.
template <class C>
struct SeriesMismatch {
    Exponents exponents;
    C lhs;
    C rhs;
};

/// Compares on the exponents known in both series. Returns the disagreements.
template <class C>
std::vector<SeriesMismatch<C>> compare(const Series<C>& a, const Series<C>& b) {
    auto an = a.names();
    auto bn = b.names();
    if (!std::is_permutation(an.begin(), an.end(), bn.begin(), bn.end())) {
        throw VariableMismatch("compare: operands have different variable sets");
    }
    const Series<C> bb = b.over(an);
    std::vector<SeriesMismatch<C>> out;
    auto check = [&](const Exponents& e) {
        if (!a.known(e) || !bb.known(e)) {
            return;
        }
        C ca = a.coeff(e);
        C cb = bb.coeff(e);
        if (!(ca == cb)) {
            out.push_back({e, std::move(ca), std::move(cb)});
        }
    };
    for (const auto& [e, c] : a.terms()) {
        check(e);
    }
    for (const auto& [e, c] : bb.terms()) {
        if (a.terms().count(e) == 0) {
            check(e);
        }
    }
    return out;
}

// ---- scalar constructions -------------------------------------------------

/// (a - b)^n expanded in nonnegative powers of b, truncated at b^order when n < 0.
ScalarSeries binom_expand(const std::string& a, const std::string& b, int n, int order);

/// sum_{|n| <= N} x^n with window [-N, N].
ScalarSeries delta_series(const std::string& x, int n_window);

/// log(1 - t) = -sum_{k=1}^{order} t^k / k.
ScalarSeries log1m(const std::string& t, int order);

/// exp(c t) to t^order.
ScalarSeries exp_linear(const std::string& t, const Scalar& c, int order);

/// exp(f) for a one-variable power series f with zero constant term.
ScalarSeries exp_of(const ScalarSeries& f);

/// Multiplicative inverse of a power series in `y` (possibly with extra
/// polynomial variables) whose y^0 coefficient is a single nonzero monomial.
ScalarSeries inverse(const ScalarSeries& f, const std::string& y);

/// n-th power (any integer n; negative needs an invertible series).
ScalarSeries power(const ScalarSeries& f, const std::string& y, int n);

/// The power series u(y) = (e^y - 1)/y, coefficients 1/(k+1)!, for k = 0..order.
std::vector<Scalar> em1_unit_coeffs(int order);

/// Coefficients of u(y)^n for k = 0..order, any integer n.
std::vector<Scalar> em1_unit_power(int n, int order);

/// The rigorised 1/(1 - e^{-y1+y2}) = (y1 - y2)^{-1} F(y1, y2): (y1-y2)^{-1} in
/// nonnegative powers of y2, F the power series t/(1-e^{-t}) at t = y1 - y2.
/// Window y1 in [-1, order], y2 in [0, order].
ScalarSeries reg_inv_one_minus_exp(const std::string& y1, const std::string& y2, int order);

/// Coefficients of u^alpha for a univariate power series u with u[0] = 1, to t^order.
std::vector<Scalar> unit_series_power(const std::vector<Scalar>& u, int alpha, int order);

/// h(F(y)) for h with finitely many negative powers of x and F a power series
/// in y with zero constant term and invertible linear coefficient, truncated to
/// y^order (and to what the windows of h and F determine).
template <class C>
Series<C> substitute(const Series<C>& h, const std::string& x, const ScalarSeries& f, const std::string& y, int order) {
    if (h.nvars() != 1 || h.vars()[0].name != x) {
        throw VariableMismatch("substitute: h must be a series in " + x + " only");
    }
    if (f.nvars() != 1 || f.vars()[0].name != y) {
        throw VariableMismatch("substitute: F must be a series in " + y + " only");
    }
    const VarWindow& hw = h.vars()[0];
    const VarWindow& fw = f.vars()[0];
    if (!hw.zero_below) {
        throw WindowInsufficient("substitute: h may have infinitely many negative powers");
    }
    if (!fw.zero_below || fw.low < 0) {
        throw std::invalid_argument("substitute: F must be a power series");
    }
    if (!f.coeff({0}).is_zero()) {
        throw std::invalid_argument("substitute: F must have zero constant term");
    }
    const Scalar c1 = f.coeff({1});
    if (c1.is_zero()) {
        throw std::invalid_argument("substitute: F must have invertible linear coefficient");
    }
    int top = order;
    if (!hw.zero_above) {
        top = std::min(top, hw.high);
    }
    if (!fw.zero_above) {
        // F / y is known to y^{high - 1}, so y^k (F/y)^k is known to y^{k + high - 1}
        top = std::min(top, hw.low + fw.high - 1);
    }
    if (top < hw.low) {
        throw WindowInsufficient("substitute: window too small for requested order");
    }
    const int span = top - hw.low;
    std::vector<Scalar> unit(static_cast<std::size_t>(span) + 1);
    for (int k = 0; k <= span; ++k) {
        const bool known = fw.zero_above || k + 1 <= fw.high;
        unit[k] = known ? f.coeff({k + 1}) / c1 : Scalar(0);
    }
    Series<C> out({laurent_window(y, hw.low, top)});
    for (const auto& [e, c] : h.terms()) {
        const int k = e[0];
        if (k > top) {
            continue;
        }
        // F^k = c1^k y^k (F / (c1 y))^k
        const auto p = unit_series_power(unit, k, top - k);
        const Scalar scale = ipow(c1, k);
        for (int i = 0; i + k <= top; ++i) {
            if (p[i].is_zero()) {
                continue;
            }
            C term = c;
            term *= scale * p[i];
            out.accumulate({k + i}, term);
        }
    }
    return out;
}

/// h(e^y - 1) truncated to y^order. h is a one-variable series in x with
/// finitely many negative powers.
template <class C>
Series<C> subst_em1(const Series<C>& h, const std::string& x, const std::string& y, int order) {
    if (h.nvars() != 1 || h.vars()[0].name != x) {
        throw VariableMismatch("subst_em1: h must be a series in " + x + " only");
    }
    const VarWindow& w = h.vars()[0];
    if (!w.zero_below) {
        throw WindowInsufficient("subst_em1: h may have infinitely many negative powers");
    }
    const int top = std::min(order, detail::known_of(w).hi >= detail::kInf ? order : w.high);
    if (top < w.low) {
        throw WindowInsufficient("subst_em1: window too small for requested order");
    }
    Series<C> out({laurent_window(y, w.low, top)});
    for (const auto& [e, c] : h.terms()) {
        const int n = e[0];
        if (n > top) {
            continue;
        }
        // (e^y - 1)^n = y^n u(y)^n
        const auto un = em1_unit_power(n, top - n);
        for (int k = 0; k + n <= top; ++k) {
            if (un[k].is_zero()) {
                continue;
            }
            C term = c;
            term *= un[k];
            out.accumulate({n + k}, term);
        }
    }
    return out;
}

}  // namespace freeboson
