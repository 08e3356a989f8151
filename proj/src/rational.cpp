#include "pfaffkit/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pfaffkit {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> void {
        throw std::invalid_argument("invalid rational literal: \"" + std::string(text) + "\"");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') {
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == num_begin) {
        fail();
    }
    const std::string num_str(text.substr(0, pos));
    std::string den_str = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') {
            fail();
        }
        const std::size_t den_begin = ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == den_begin || pos != text.size()) {
            fail();
        }
        den_str = std::string(text.substr(den_begin));
    }
    return Rational(BigInt(num_str), BigInt(den_str));
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    std::string s = value_.get_num().get_str();
    if (value_.get_den() != 1) {
        s += "/" + value_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace pfaffkit
