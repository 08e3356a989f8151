#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pfaffkit/blockdiag.hpp"
#include "pfaffkit/recurrence.hpp"
#include "pfaffkit/sequences.hpp"

using namespace pfaffkit;

TEST_CASE("sequence values") {
    const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    const long pell[] = {1, 2, 5, 12, 29, 70, 169, 408, 985};
    const long jac[] = {1, 1, 3, 5, 11, 21, 43, 85, 171};
    for (long n = 1; n <= 9; ++n) {
        CHECK(seq_value(SequenceKind::fibonacci, n) == fib[n - 1]);
        CHECK(seq_value(SequenceKind::pell, n) == pell[n - 1]);
        CHECK(seq_value(SequenceKind::jacobsthal, n) == jac[n - 1]);
    }
    CHECK_THROWS_AS(seq_value(SequenceKind::fibonacci, 0), std::domain_error);
}

TEST_CASE("parameter mapping") {
    const Params fib = params_for(SequenceKind::fibonacci);
    CHECK(fib.alpha == Rational(-1));
    CHECK(fib.b == Rational(1));
    const Params pell = params_for(SequenceKind::pell);
    CHECK(pell.alpha == Rational(-1));
    CHECK(pell.b == Rational(2));
    const Params jac = params_for(SequenceKind::jacobsthal);
    CHECK(jac.alpha == Rational(-2));
    CHECK(jac.b == Rational(1));
}

TEST_CASE("expected_pf applies the mod-4 sign law") {
    CHECK(expected_pf(SequenceKind::fibonacci, 6) == -13);
    CHECK(expected_pf(SequenceKind::pell, 8) == 985);
    CHECK(expected_pf(SequenceKind::jacobsthal, 3) == -5);
    for (long k = 1; k <= 12; ++k) {
        const long r = k % 4;
        const int sign = (r == 0 || r == 1) ? 1 : -1;
        CHECK(expected_pf(SequenceKind::fibonacci, k) ==
              sign * seq_value(SequenceKind::fibonacci, k + 1));
    }
    CHECK_THROWS_AS(expected_pf(SequenceKind::pell, 0), std::domain_error);
}

TEST_CASE("expected_det squares the sequence value") {
    CHECK(expected_det(SequenceKind::fibonacci, 8) == 1156);
    CHECK(expected_det(SequenceKind::pell, 2) == 25);
    CHECK(expected_det(SequenceKind::jacobsthal, 1) == 1);
}

TEST_CASE("expected_det is expected_pf squared") {
    for (const SequenceKind kind : {SequenceKind::fibonacci, SequenceKind::pell,
                                    SequenceKind::jacobsthal}) {
        for (long k = 1; k <= 40; ++k) {
            const BigInt pf = expected_pf(kind, k);
            CHECK(expected_det(kind, k) == pf * pf);
        }
    }
}

TEST_CASE("fast paths reproduce the predicted identities out to k = 40") {
    for (const SequenceKind kind : {SequenceKind::fibonacci, SequenceKind::pell,
                                    SequenceKind::jacobsthal}) {
        const Params p = params_for(kind);
        for (long k = 1; k <= 40; ++k) {
            CHECK(pf_fast(k, p) == Rational(expected_pf(kind, k)));
            CHECK(det_closed(k, p) == Rational(expected_det(kind, k)));
        }
    }
}

TEST_CASE("kind names round-trip") {
    for (const SequenceKind kind : {SequenceKind::fibonacci, SequenceKind::pell,
                                    SequenceKind::jacobsthal}) {
        CHECK(sequence_kind_from(to_string(kind)) == kind);
    }
    CHECK_FALSE(sequence_kind_from("lucas").has_value());
}
