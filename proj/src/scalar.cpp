#include "freeboson/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace freeboson {

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::domain_error("Scalar: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Scalar(mpz_class(s, 10));
        }
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) {
            throw std::domain_error("Scalar: zero denominator in '" + s + "'");
        }
        return Scalar(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
    }
}

std::string Scalar::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) {
        throw std::domain_error("Scalar: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Scalar pow(const Scalar& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Scalar(mpq_class(num, den));
}

Scalar ipow(const Scalar& base, int exponent) {
    if (exponent >= 0) {
        return pow(base, static_cast<unsigned>(exponent));
    }
    return Scalar(1) / pow(base, static_cast<unsigned>(-exponent));
}

Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

Scalar binomial(long n, long k) {
    if (k < 0) {
        return Scalar(0);
    }
    if (n >= 0) {
        if (k > n) {
            return Scalar(0);
        }
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Scalar(c);
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) {
        c = -c;
    }
    return Scalar(c);
}

}  // namespace freeboson
