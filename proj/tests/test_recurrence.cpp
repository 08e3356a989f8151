#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pfaffkit/generators.hpp"
#include "pfaffkit/oracle.hpp"
#include "pfaffkit/recurrence.hpp"
#include "test_support.hpp"

using namespace pfaffkit;
using pfaffkit::testing::ParamSampler;

TEST_CASE("seed values") {
    const Params p{Rational(BigInt(-2), BigInt(3)), Rational(BigInt(5), BigInt(7))};
    const SeqTriple s = coupled_fg(1, p);
    CHECK(s.f.at(-1) == Rational(0));
    CHECK(s.f.at(0) == Rational(1));
    CHECK(s.f.at(1) == p.b);
    CHECK(s.g.at(-1) == Rational(0));
    CHECK(s.g.at(0) == Rational(1));
    CHECK(s.g.at(1) == -p.b);
    CHECK_THROWS_AS((void)s.f.at(2), std::out_of_range);
    CHECK_THROWS_AS((void)s.f.at(-2), std::out_of_range);
    CHECK_THROWS_AS(coupled_fg(-1, p), std::domain_error);
}

TEST_CASE("signed Fibonacci run") {
    const Params p{Rational(-1), Rational(1)};
    const SeqTriple s = coupled_fg(8, p);
    const long expected[] = {1, 1, -2, -3, 5, 8, -13, -21, 34};
    for (long k = 0; k <= 8; ++k) {
        CHECK(s.f.at(k) == Rational(expected[k]));
    }
}

TEST_CASE("signed Pell and Jacobsthal spot values") {
    const Params pell{Rational(-1), Rational(2)};
    CHECK(coupled_fg(5, pell).f.at(4) == Rational(29));
    CHECK(pf_fast(5, pell) == Rational(70));

    const Params jac{Rational(-2), Rational(1)};
    CHECK(coupled_fg(6, jac).f.at(6) == Rational(-43));
}

TEST_CASE("every stored value satisfies the coupled recurrence") {
    ParamSampler sampler(53);
    for (int trial = 0; trial < 20; ++trial) {
        const Params p = sampler.params();
        const SeqTriple s = coupled_fg(30, p);
        for (long n = 1; n <= 30; ++n) {
            CHECK(s.f.at(n) == p.b * s.g.at(n - 1) + p.alpha * s.f.at(n - 2));
            CHECK(s.g.at(n) == -p.b * s.f.at(n - 1) + p.alpha * s.g.at(n - 2));
        }
    }
}

TEST_CASE("single_f seeds force f[1] = b") {
    const Params p{Rational(-1), Rational(BigInt(5), BigInt(7))};
    const PfSequence f = single_f(1, p);
    CHECK(f.at(1) == p.b);
    CHECK(single_f(4, Params{Rational(-1), Rational(1)}).at(4) == Rational(5));
}

TEST_CASE("single_f equals the coupled f-sequence") {
    ParamSampler sampler(59);
    for (int trial = 0; trial < 20; ++trial) {
        const Params p = sampler.params();
        CHECK(single_f(30, p) == coupled_fg(30, p).f);
    }
    // one long run
    const Params p = sampler.params();
    CHECK(single_f(200, p) == coupled_fg(200, p).f);
}

TEST_CASE("pf_fast basics") {
    CHECK(pf_fast(1, Params{Rational(-1), Rational(7)}) == Rational(7));
    CHECK(pf_fast(5, Params{Rational(-1), Rational(2)}) == Rational(70));
    CHECK_THROWS_AS(pf_fast(0, Params{Rational(-1), Rational(1)}), std::domain_error);
}

TEST_CASE("pf_fast matches the matching-sum oracle for both families") {
    ParamSampler sampler(61);
    for (int trial = 0; trial < 20; ++trial) {
        const Params p = sampler.params();
        for (long k = 1; k <= 6; ++k) {
            const std::size_t ku = static_cast<std::size_t>(k);
            CHECK(pfaffian_oracle(gen_f(ku, p)) ==
                  QuadScalar::from_rational(pf_fast(k, p, PfFamily::F), p.alpha));
            CHECK(pfaffian_oracle(gen_g(ku, p)) ==
                  QuadScalar::from_rational(pf_fast(k, p, PfFamily::G), p.alpha));
        }
    }
}
