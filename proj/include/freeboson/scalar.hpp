#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace freeboson {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(const mpz_class& integer) : value_(integer) {}
    explicit Scalar(mpq_class value);

    /// Parses "p" or "p/q" (q may be any nonzero integer; the result is normalised).
    static Scalar parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class value_{0};
};

/// Integer power, exponent >= 0; 0^0 = 1.
Scalar pow(const Scalar& base, unsigned exponent);
/// Integer power allowing negative exponents (base must be nonzero then).
Scalar ipow(const Scalar& base, int exponent);
/// n! as a Scalar.
Scalar factorial(unsigned n);
/// Generalised binomial coefficient C(n, k) for any integer n and k >= 0.
Scalar binomial(long n, long k);

}  // namespace freeboson
