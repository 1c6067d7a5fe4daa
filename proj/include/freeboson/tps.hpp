#pragma once

// Dense-by-degree truncated power series in a fixed number of variables,
// truncated at a total degree. Used where the y-dependence of an identity
// is an exponential of a linear form, possibly divided by a power of
// another linear form.

#include <map>
#include <string>
#include <vector>

#include "freeboson/scalar.hpp"
#include "freeboson/series.hpp"

namespace freeboson {

/// Integer linear form sum_i c_i y_i.
using LinearForm = std::vector<int>;

class Tps {
public:
    using Terms = std::map<Exponents, Scalar>;

    Tps(int nvars, int degree);

    static Tps constant(int nvars, int degree, const Scalar& c);
    /// The linear form itself.
    static Tps linear(const LinearForm& form, int degree);
    /// exp(sum_i c_i y_i), coefficient prod c_i^{a_i} / a_i!.
    static Tps exp_linear(const LinearForm& form, int degree);
    /// sum_k c_k s^k for a univariate coefficient list and a linear form s.
    static Tps compose(const std::vector<Scalar>& coeffs, const LinearForm& form, int degree);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] Scalar coeff(const Exponents& e) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void accumulate(const Exponents& e, const Scalar& c);

    Tps& operator+=(const Tps& o);
    Tps& operator-=(const Tps& o);
    Tps& operator*=(const Scalar& c);
    friend Tps operator+(Tps a, const Tps& b) { return a += b; }
    friend Tps operator-(Tps a, const Tps& b) { return a -= b; }
    friend Tps operator*(const Scalar& c, Tps a) { return a *= c; }
    friend Tps operator*(const Tps& a, const Tps& b);

    /// Same series truncated at a lower total degree.
    [[nodiscard]] Tps truncated(int degree) const;
    /// d/dy_i; the result is complete to degree - 1.
    [[nodiscard]] Tps derivative(int i) const;
    /// Exact quotient by a linear form; the result is complete to degree - 1.
    /// Throws std::domain_error when the form does not divide the series.
    [[nodiscard]] Tps divide_linear(const LinearForm& form) const;

private:
    int nvars_;
    int degree_;
    Terms terms_;
};

}  // namespace freeboson
