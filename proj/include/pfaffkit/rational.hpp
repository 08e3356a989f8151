#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pfaffkit {

using BigInt = mpz_class;

// Exact rational number, canonical at all times: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : value_(n) {} // NOLINT: implicit by design
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p", "-p" and "p/q": base 10, no whitespace, q a positive
    // digit string. Anything else is rejected.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return mpq_sgn(value_.get_mpq_t()) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return mpq_sgn(value_.get_mpq_t()); }

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    explicit Rational(mpq_class q) : value_(std::move(q)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pfaffkit
