#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace wigner_ur {

/// Exact carrier for coupling-coefficient values: sign * sqrt(p/q) with the
/// radicand held as a GMP rational in lowest terms. Products and quotients are
/// always exact. A sum stays exact whenever the two radicands differ by a
/// perfect rational square; otherwise the value degrades to a 128-bit float
/// and is flagged inexact.
class SqrtRational {
public:
    SqrtRational() = default;  // zero

    static SqrtRational zero() { return {}; }
    static SqrtRational one() { return make(1, 1); }
    static SqrtRational integer(long v);
    static SqrtRational rational(const mpq_class& v);  // exact rational value v
    static SqrtRational make(int sign, mpq_class radicand);

    int sign() const { return sign_; }
    bool is_zero() const { return exact_ && sign_ == 0; }
    bool exact() const { return exact_; }
    const mpq_class& radicand() const { return rad_; }

    double to_double() const;
    __float128 to_wide() const;

    /// "0", "+sqrt(p/q)" or "-sqrt(p/q)" for exact values; a 33-digit decimal
    /// prefixed with "~" for inexact ones.
    std::string str() const;
    static std::optional<SqrtRational> parse(const std::string& s);

    SqrtRational operator-() const;
    SqrtRational operator*(const SqrtRational& o) const;
    SqrtRational operator/(const SqrtRational& o) const;
    SqrtRational operator+(const SqrtRational& o) const;
    SqrtRational operator-(const SqrtRational& o) const { return *this + (-o); }

    SqrtRational& operator+=(const SqrtRational& o) { return *this = *this + o; }
    SqrtRational& operator*=(const SqrtRational& o) { return *this = *this * o; }

    /// Exact structural equality; both sides must be exact.
    bool operator==(const SqrtRational& o) const;

private:
    static SqrtRational inexact(__float128 v);

    int sign_ = 0;
    mpq_class rad_ = 0;      // nonnegative, lowest terms; meaningful when exact_
    bool exact_ = true;
    __float128 approx_ = 0;  // meaningful when !exact_
};

/// n! as an exact big integer (n >= 0).
mpz_class factorial(long n);

/// Exact square root of a rational, when it exists.
std::optional<mpq_class> exact_sqrt(const mpq_class& v);

}  // namespace wigner_ur
