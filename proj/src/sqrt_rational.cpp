#include "wigner_ur/sqrt_rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wigner_ur {

namespace {

__float128 pow2_wide(long e) {
    __float128 base = e >= 0 ? 2.0 : 0.5;
    unsigned long n = e >= 0 ? static_cast<unsigned long>(e) : -static_cast<unsigned long>(e);
    __float128 p = 1.0;
    while (n != 0) {
        if (n & 1) p *= base;
        base *= base;
        n >>= 1;
    }
    return p;
}

// sqrt of a nonnegative rational as a 128-bit float via 256-bit GMP floats.
__float128 sqrt_to_wide(const mpq_class& q) {
    if (q == 0) return 0;
    mpf_class f(q, 256);
    mpf_class root(0, 256);
    mpf_sqrt(root.get_mpf_t(), f.get_mpf_t());
    // split into a double mantissa and a power of two; the mantissa alone would
    // overflow a double for factorial-sized radicands
    long exp2 = 0;
    double mant = mpf_get_d_2exp(&exp2, root.get_mpf_t());
    return static_cast<__float128>(mant) * pow2_wide(exp2);
}

}  // namespace

mpz_class factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& v) {
    if (v < 0) return std::nullopt;
    const mpz_class& num = v.get_num();
    const mpz_class& den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

SqrtRational SqrtRational::make(int sign, mpq_class radicand) {
    if (radicand < 0) throw std::invalid_argument("SqrtRational: negative radicand");
    SqrtRational r;
    if (sign == 0 || radicand == 0) return r;
    radicand.canonicalize();
    r.sign_ = sign > 0 ? 1 : -1;
    r.rad_ = std::move(radicand);
    return r;
}

SqrtRational SqrtRational::integer(long v) {
    return make(v > 0 ? 1 : (v < 0 ? -1 : 0), mpq_class(v) * mpq_class(v));
}

SqrtRational SqrtRational::rational(const mpq_class& v) {
    int s = sgn(v);
    return make(s, v * v);
}

SqrtRational SqrtRational::inexact(__float128 v) {
    SqrtRational r;
    r.exact_ = false;
    r.approx_ = v;
    r.sign_ = v > 0 ? 1 : (v < 0 ? -1 : 0);
    return r;
}

__float128 SqrtRational::to_wide() const {
    if (!exact_) return approx_;
    return sign_ * sqrt_to_wide(rad_);
}

double SqrtRational::to_double() const { return static_cast<double>(to_wide()); }

SqrtRational SqrtRational::operator-() const {
    SqrtRational r = *this;
    r.sign_ = -r.sign_;
    if (!r.exact_) r.approx_ = -r.approx_;
    return r;
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
    if (!exact_ || !o.exact_) return inexact(to_wide() * o.to_wide());
    if (sign_ == 0 || o.sign_ == 0) return zero();
    return make(sign_ * o.sign_, rad_ * o.rad_);
}

SqrtRational SqrtRational::operator/(const SqrtRational& o) const {
    if (!exact_ || !o.exact_) {
        __float128 d = o.to_wide();
        if (d == 0) throw std::domain_error("SqrtRational: division by zero");
        return inexact(to_wide() / d);
    }
    if (o.sign_ == 0) throw std::domain_error("SqrtRational: division by zero");
    if (sign_ == 0) return zero();
    return make(sign_ * o.sign_, rad_ / o.rad_);
}

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
    if (!exact_ || !o.exact_) return inexact(to_wide() + o.to_wide());
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    // sqrt(r1) = c * sqrt(r2) with rational c, when r1/r2 is a perfect square
    if (auto c = exact_sqrt(rad_ / o.rad_)) {
        mpq_class coeff = sign_ * (*c) + o.sign_;
        int s = sgn(coeff);
        return make(s, coeff * coeff * o.rad_);
    }
    return inexact(to_wide() + o.to_wide());
}

bool SqrtRational::operator==(const SqrtRational& o) const {
    if (!exact_ || !o.exact_)
        throw std::domain_error("SqrtRational: exact comparison on inexact value");
    return sign_ == o.sign_ && (sign_ == 0 || rad_ == o.rad_);
}

std::string SqrtRational::str() const {
    if (!exact_) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "~%.33Lg", static_cast<long double>(approx_));
        return buf;
    }
    if (sign_ == 0) return "0";
    std::string s = sign_ > 0 ? "+sqrt(" : "-sqrt(";
    s += rad_.get_num().get_str();
    s += '/';
    s += rad_.get_den().get_str();
    s += ')';
    return s;
}

std::optional<SqrtRational> SqrtRational::parse(const std::string& s) {
    if (s == "0") return zero();
    if (s.size() < 8) return std::nullopt;
    int sign = s[0] == '+' ? 1 : (s[0] == '-' ? -1 : 0);
    if (sign == 0) return std::nullopt;
    if (s.substr(1, 5) != "sqrt(" || s.back() != ')') return std::nullopt;
    const std::string body = s.substr(6, s.size() - 7);
    std::size_t slash = body.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= body.size()) return std::nullopt;
    try {
        mpq_class rad(mpz_class(body.substr(0, slash)), mpz_class(body.substr(slash + 1)));
        if (rad <= 0) return std::nullopt;
        rad.canonicalize();
        return make(sign, rad);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace wigner_ur
