#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wigner_ur/sqrt_rational.hpp"

using namespace wigner_ur;

TEST_CASE("construction and value") {
    CHECK(SqrtRational::zero().is_zero());
    CHECK(SqrtRational::one().to_double() == 1.0);
    CHECK(SqrtRational::integer(-3).to_double() == -3.0);
    const auto half = SqrtRational::make(1, mpq_class(1, 2));
    CHECK(half.to_double() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(SqrtRational::rational(mpq_class(-2, 3)).to_double() ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("products and quotients stay exact") {
    const auto a = SqrtRational::make(1, mpq_class(3, 5));
    const auto b = SqrtRational::make(-1, mpq_class(5, 12));
    const auto p = a * b;
    CHECK(p.exact());
    CHECK(p == SqrtRational::make(-1, mpq_class(1, 4)));
    CHECK(p / b == a);
    CHECK((a / a) == SqrtRational::one());
}

TEST_CASE("addition with square ratio stays exact") {
    // sqrt(9/2) - sqrt(1/2) = 2 sqrt(1/2) = sqrt(2)
    const auto s = SqrtRational::make(1, mpq_class(9, 2)) + SqrtRational::make(-1, mpq_class(1, 2));
    CHECK(s.exact());
    CHECK(s == SqrtRational::make(1, mpq_class(2)));
    // exact cancellation
    const auto z = SqrtRational::make(1, mpq_class(7, 3)) + SqrtRational::make(-1, mpq_class(7, 3));
    CHECK(z.is_zero());
}

TEST_CASE("addition with non-square ratio degrades to a flagged float") {
    const auto s = SqrtRational::make(1, mpq_class(2)) + SqrtRational::make(1, mpq_class(3));
    CHECK(!s.exact());
    CHECK(s.to_double() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-14));
    CHECK_THROWS(void(s == SqrtRational::one()));
    // inexactness propagates through products
    CHECK(!(s * SqrtRational::one()).exact());
}

TEST_CASE("factorial radicands stay exact far past double range") {
    const auto big = SqrtRational::make(1, mpq_class(factorial(300), factorial(299)));
    CHECK(big.exact());
    CHECK(big.to_double() == doctest::Approx(std::sqrt(300.0)).epsilon(1e-14));
    const auto huge = SqrtRational::make(1, mpq_class(factorial(300)));
    CHECK((huge / huge) == SqrtRational::one());
}

TEST_CASE("printing and parsing round trip") {
    const auto v = SqrtRational::make(-1, mpq_class(2, 49));
    CHECK(v.str() == "-sqrt(2/49)");
    CHECK(SqrtRational::zero().str() == "0");
    CHECK(SqrtRational::one().str() == "+sqrt(1/1)");
    for (const auto& s : {"-sqrt(2/49)", "+sqrt(1/2)", "0", "+sqrt(25/4)"}) {
        const auto parsed = SqrtRational::parse(s);
        REQUIRE(parsed.has_value());
        CHECK(parsed->str() == s);
    }
    CHECK(!SqrtRational::parse("sqrt(1/2)").has_value());
    CHECK(!SqrtRational::parse("+sqrt(1/2").has_value());
    CHECK(!SqrtRational::parse("+sqrt(-1/2)").has_value());
}

TEST_CASE("exact square root detection") {
    CHECK(exact_sqrt(mpq_class(4, 9)).value() == mpq_class(2, 3));
    CHECK(!exact_sqrt(mpq_class(2, 9)).has_value());
    CHECK(!exact_sqrt(mpq_class(-4, 9)).has_value());
}

namespace {
// values of the form (p/q) sqrt(base): closed under + and *, so the algebra
// laws below stay in the exact regime
SqrtRational random_on_ray(std::mt19937& rng, long base) {
    std::uniform_int_distribution<long> num(-8, 8), den(1, 8);
    const long n = num(rng);
    return SqrtRational::rational(mpq_class(n, den(rng))) *
           SqrtRational::make(1, mpq_class(base));
}
}  // namespace

TEST_CASE("field laws hold exactly on a common square-free ray") {
    std::mt19937 rng(20240811);
    for (long base : {1L, 2L, 15L}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_on_ray(rng, base);
            const auto b = random_on_ray(rng, base);
            const auto c = random_on_ray(rng, base);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == SqrtRational::zero());
            CHECK(a + SqrtRational::zero() == a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
            // parse is a left inverse of printing
            const auto round = SqrtRational::parse(a.str());
            REQUIRE(round.has_value());
            CHECK(*round == a);
        }
    }
}
