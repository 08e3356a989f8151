#include "pfaffkit/quad.hpp"

#include <ostream>

namespace pfaffkit {

void QuadScalar::require_same_ring(const QuadScalar& o) const {
    if (alpha_ != o.alpha_) {
        throw ring_mismatch_error("quadratic ring mismatch: alpha " + alpha_.str() +
                                  " vs " + o.alpha_.str());
    }
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    require_same_ring(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    require_same_ring(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    require_same_ring(o);
    // (u1 + v1 a)(u2 + v2 a) = (u1 u2 + alpha v1 v2) + (u1 v2 + v1 u2) a
    Rational u = u_ * o.u_ + alpha_ * v_ * o.v_;
    Rational v = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

bool QuadScalar::operator==(const QuadScalar& o) const {
    require_same_ring(o);
    return u_ == o.u_ && v_ == o.v_;
}

std::string QuadScalar::str() const {
    if (v_.is_zero()) {
        return u_.str();
    }
    if (u_.is_zero()) {
        return v_.str() + "*a";
    }
    if (v_.sign() < 0) {
        return u_.str() + " - " + (-v_).str() + "*a";
    }
    return u_.str() + " + " + v_.str() + "*a";
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& q) {
    return os << q.str();
}

} // namespace pfaffkit
