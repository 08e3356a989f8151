#pragma once

#include <string>
#include <utility>

#include "pfaffkit/errors.hpp"
#include "pfaffkit/rational.hpp"

namespace pfaffkit {

// Ring parameters shared by every generator and recurrence: alpha = a^2 and b.
struct Params {
    Rational alpha;
    Rational b;
};

// Element u + v*a of the quadratic extension ring Q[x]/(x^2 - alpha).
//
// alpha = -1 realizes a = i, alpha = -2 realizes a = i*sqrt(2). The ring has
// zero divisors when alpha is a rational square, so no division is defined;
// every consumer stays division-free.
class QuadScalar {
public:
    QuadScalar() = default; // zero of the alpha = 0 ring
    QuadScalar(Rational u, Rational v, Rational alpha)
        : u_(std::move(u)), v_(std::move(v)), alpha_(std::move(alpha)) {}

    static QuadScalar zero(const Rational& alpha) { return {0, 0, alpha}; }
    static QuadScalar from_rational(const Rational& u, const Rational& alpha) {
        return {u, 0, alpha};
    }
    // The adjoined element a itself (u = 0, v = 1).
    static QuadScalar root_of(const Rational& alpha) { return {0, 1, alpha}; }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Rational& alpha() const { return alpha_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    QuadScalar operator-() const { return {-u_, -v_, alpha_}; }

    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { a += b; return a; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { a -= b; return a; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { a *= b; return a; }

    // Exact equality on canonical components; mismatched rings are an error,
    // not "unequal".
    bool operator==(const QuadScalar& o) const;
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    // "u", "v*a" or "u + v*a" with canonical rational components.
    std::string str() const;

private:
    void require_same_ring(const QuadScalar& o) const;

    Rational u_{0};
    Rational v_{0};
    Rational alpha_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& q);

} // namespace pfaffkit
