#include "freeboson/tps.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace freeboson {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// all exponent vectors of total degree exactly d
void for_each_of_degree(int nvars, int d, const std::function<void(const Exponents&)>& fn) {
    Exponents e(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[i] = left;
            fn(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (nvars == 0) {
        if (d == 0) {
            fn(e);
        }
        return;
    }
    rec(0, d);
}

}  // namespace

Tps::Tps(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) {
        throw std::invalid_argument("Tps: negative size");
    }
}

Tps Tps::constant(int nvars, int degree, const Scalar& c) {
    Tps t(nvars, degree);
    t.accumulate(Exponents(nvars, 0), c);
    return t;
}

Tps Tps::linear(const LinearForm& form, int degree) {
    const int n = static_cast<int>(form.size());
    Tps t(n, degree);
    if (degree < 1) {
        return t;
    }
    for (int i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        t.accumulate(e, Scalar(form[i]));
    }
    return t;
}

Tps Tps::exp_linear(const LinearForm& form, int degree) {
    const int n = static_cast<int>(form.size());
    Tps t(n, degree);
    // per-variable tables c^a / a!
    std::vector<std::vector<Scalar>> table(n);
    for (int i = 0; i < n; ++i) {
        table[i].resize(static_cast<std::size_t>(degree) + 1);
        table[i][0] = Scalar(1);
        for (int a = 1; a <= degree; ++a) {
            table[i][a] = table[i][a - 1] * Scalar(form[i]) / Scalar(a);
        }
    }
    for (int d = 0; d <= degree; ++d) {
        for_each_of_degree(n, d, [&](const Exponents& e) {
            Scalar c(1);
            for (int i = 0; i < n && !c.is_zero(); ++i) {
                c *= table[i][e[i]];
            }
            t.accumulate(e, c);
        });
    }
    return t;
}

Tps Tps::compose(const std::vector<Scalar>& coeffs, const LinearForm& form, int degree) {
    const int n = static_cast<int>(form.size());
    Tps out(n, degree);
    const Tps s = linear(form, degree);
    Tps power = constant(n, degree, Scalar(1));
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= degree; ++k) {
        if (k > 0) {
            power = power * s;
        }
        if (!coeffs[k].is_zero()) {
            out += coeffs[k] * power;
        }
    }
    return out;
}

Scalar Tps::coeff(const Exponents& e) const {
    if (static_cast<int>(e.size()) != nvars_) {
        throw VariableMismatch("Tps: exponent arity mismatch");
    }
    if (total(e) > degree_) {
        throw WindowInsufficient("Tps: coefficient beyond truncation degree");
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Tps::accumulate(const Exponents& e, const Scalar& c) {
    if (c.is_zero() || total(e) > degree_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Tps& Tps::operator+=(const Tps& o) {
    if (o.nvars_ != nvars_) {
        throw VariableMismatch("Tps: arity mismatch");
    }
    degree_ = std::min(degree_, o.degree_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = total(it->first) > degree_ ? terms_.erase(it) : std::next(it);
    }
    for (const auto& [e, c] : o.terms_) {
        accumulate(e, c);
    }
    return *this;
}

Tps& Tps::operator-=(const Tps& o) {
    Tps neg = o;
    neg *= Scalar(-1);
    return *this += neg;
}

Tps& Tps::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

Tps operator*(const Tps& a, const Tps& b) {
    if (a.nvars_ != b.nvars_) {
        throw VariableMismatch("Tps: arity mismatch");
    }
    Tps out(a.nvars_, std::min(a.degree_, b.degree_));
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total(eb) > out.degree_) {
                continue;
            }
            for (int i = 0; i < a.nvars_; ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.accumulate(e, ca * cb);
        }
    }
    return out;
}

Tps Tps::truncated(int degree) const {
    Tps out(nvars_, std::min(degree, degree_));
    for (const auto& [e, c] : terms_) {
        out.accumulate(e, c);
    }
    return out;
}

Tps Tps::derivative(int i) const {
    Tps out(nvars_, std::max(degree_ - 1, 0));
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) {
            continue;
        }
        Exponents f = e;
        f[i] -= 1;
        out.accumulate(f, c * Scalar(e[i]));
    }
    return out;
}

Tps Tps::divide_linear(const LinearForm& form) const {
    if (static_cast<int>(form.size()) != nvars_) {
        throw VariableMismatch("Tps: arity mismatch");
    }
    int pivot = -1;
    for (int i = 0; i < nvars_; ++i) {
        if (form[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) {
        throw std::domain_error("Tps: division by the zero form");
    }
    // long division, eliminating the highest power of the pivot variable first;
    // terms of degree > degree_ - 1 in the quotient are not determined and dropped
    Tps quotient(nvars_, std::max(degree_ - 1, 0));
    Terms rest = terms_;
    const Scalar lead(form[pivot]);
    while (!rest.empty()) {
        auto best = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            if (it->first[pivot] > best->first[pivot]) {
                best = it;
            }
        }
        if (best->first[pivot] == 0) {
            throw std::domain_error("Tps: linear form does not divide the series");
        }
        Exponents q = best->first;
        q[pivot] -= 1;
        const Scalar c = best->second / lead;
        quotient.accumulate(q, c);
        for (int i = 0; i < nvars_; ++i) {
            if (form[i] == 0) {
                continue;
            }
            Exponents e = q;
            e[i] += 1;
            auto [it, inserted] = rest.try_emplace(e, Scalar(0));
            it->second -= c * Scalar(form[i]);
            if (it->second.is_zero()) {
                rest.erase(it);
            }
        }
    }
    return quotient;
}

}  // namespace freeboson
