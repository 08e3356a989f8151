#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pfaffkit/errors.hpp"
#include "pfaffkit/quad.hpp"
#include "pfaffkit/rational.hpp"
#include "test_support.hpp"

using namespace pfaffkit;
using pfaffkit::testing::ParamSampler;
using pfaffkit::testing::is_canonical;

TEST_CASE("rational parsing accepts p, -p and p/q") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("3/4") == Rational(BigInt(3), BigInt(4)));
    CHECK(Rational::parse("-3/4") == Rational(BigInt(-3), BigInt(4)));
    CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("123456789012345678901234567890/7") * Rational(7) ==
          Rational(BigInt("123456789012345678901234567890")));
}

TEST_CASE("rational parsing rejects malformed input") {
    for (const char* bad : {"", "-", "/2", "1/", "1//2", " 1", "1 ", "+1",
                            "1/-2", "0x10", "a", "1.5", "--1"}) {
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational canonical form") {
    const Rational r(BigInt(4), BigInt(-6));
    CHECK(r.numerator() == -2);
    CHECK(r.denominator() == 3);
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));

    ParamSampler sampler(7);
    for (int i = 0; i < 100; ++i) {
        const Rational a = sampler.small_rational();
        const Rational b = sampler.nonzero_small_rational();
        CHECK(is_canonical(a + b));
        CHECK(is_canonical(a - b));
        CHECK(is_canonical(a * b));
        CHECK(is_canonical(a / b));
    }
}

TEST_CASE("rational division") {
    CHECK(Rational(1) / Rational(BigInt(-1), BigInt(2)) == Rational(-2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational rendering") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(BigInt(-1), BigInt(2)).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("quad addition is componentwise") {
    const Rational alpha(-1);
    const QuadScalar x(1, 2, alpha);
    const QuadScalar y(3, -1, alpha);
    CHECK(x + y == QuadScalar(4, 1, alpha));
    CHECK(x + QuadScalar::zero(alpha) == x);
}

TEST_CASE("mismatched rings are an error, not a value") {
    const QuadScalar a1 = QuadScalar::root_of(Rational(-2));
    const QuadScalar a2 = QuadScalar::root_of(Rational(-1));
    CHECK_THROWS_AS(a1 + a2, ring_mismatch_error);
    CHECK_THROWS_AS(a1 - a2, ring_mismatch_error);
    CHECK_THROWS_AS(a1 * a2, ring_mismatch_error);
    CHECK_THROWS_AS((void)(a1 == a2), ring_mismatch_error);
}

TEST_CASE("the defining relation a^2 = alpha") {
    const QuadScalar i = QuadScalar::root_of(Rational(-1));
    CHECK(i * i == QuadScalar::from_rational(-1, Rational(-1)));
    const QuadScalar isqrt2 = QuadScalar::root_of(Rational(-2));
    CHECK(isqrt2 * isqrt2 == QuadScalar::from_rational(-2, Rational(-2)));
    // (1 + a)(1 - a) = 1 - alpha
    const QuadScalar one = QuadScalar::from_rational(1, Rational(-1));
    CHECK((one + i) * (one - i) == QuadScalar::from_rational(2, Rational(-1)));
}

TEST_CASE("negation, subtraction, equality up to canonical form") {
    const Rational alpha(-1);
    const QuadScalar x(2, -3, alpha);
    CHECK(-x == QuadScalar(-2, 3, alpha));
    CHECK(x - x == QuadScalar::zero(alpha));
    CHECK(QuadScalar(Rational(BigInt(2), BigInt(4)), 0, alpha) ==
          QuadScalar(Rational(BigInt(1), BigInt(2)), 0, alpha));
}

TEST_CASE("ring axioms hold for random triples") {
    ParamSampler sampler(11);
    for (int i = 0; i < 100; ++i) {
        const Rational alpha = sampler.small_rational();
        const QuadScalar x = sampler.quad(alpha);
        const QuadScalar y = sampler.quad(alpha);
        const QuadScalar z = sampler.quad(alpha);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("v = 0 operands behave exactly like rationals") {
    ParamSampler sampler(13);
    for (int i = 0; i < 100; ++i) {
        const Rational alpha = sampler.small_rational();
        const Rational r = sampler.small_rational();
        const Rational s = sampler.small_rational();
        const QuadScalar qr = QuadScalar::from_rational(r, alpha);
        const QuadScalar qs = QuadScalar::from_rational(s, alpha);
        CHECK((qr + qs).u() == r + s);
        CHECK((qr - qs).u() == r - s);
        CHECK((qr * qs).u() == r * s);
        CHECK((qr * qs).is_rational());
    }
}

TEST_CASE("quad rendering") {
    const Rational alpha(-1);
    CHECK(QuadScalar(1, 2, alpha).str() == "1 + 2*a");
    CHECK(QuadScalar(1, -2, alpha).str() == "1 - 2*a");
    CHECK(QuadScalar(0, 1, alpha).str() == "1*a");
    CHECK(QuadScalar(Rational(BigInt(-1), BigInt(2)), 0, alpha).str() == "-1/2");
    CHECK(QuadScalar::zero(alpha).str() == "0");
}
