#include "pfaffkit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace pfaffkit {

DenseMatrix::DenseMatrix(std::size_t order, Rational alpha)
    : order_(order),
      alpha_(std::move(alpha)),
      entries_(order * order, QuadScalar::zero(alpha_)) {}

std::size_t DenseMatrix::index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > order_ || j < 1 || j > order_) {
        throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for order " +
                                std::to_string(order_));
    }
    return (i - 1) * order_ + (j - 1);
}

void DenseMatrix::require_same_ring(const DenseMatrix& o) const {
    if (alpha_ != o.alpha_) {
        throw ring_mismatch_error("matrix ring mismatch: alpha " + alpha_.str() +
                                  " vs " + o.alpha_.str());
    }
}

void DenseMatrix::set(std::size_t i, std::size_t j, const QuadScalar& value) {
    if (value.alpha() != alpha_) {
        throw ring_mismatch_error("entry alpha " + value.alpha().str() +
                                  " does not match matrix alpha " + alpha_.str());
    }
    entries_[index(i, j)] = value;
}

void DenseMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    entries_[index(i, j)] = QuadScalar::from_rational(value, alpha_);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(order_, alpha_);
    for (std::size_t i = 1; i <= order_; ++i) {
        for (std::size_t j = 1; j <= order_; ++j) {
            out.entries_[out.index(j, i)] = at(i, j);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator-() const {
    DenseMatrix out(order_, alpha_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = -entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    require_same_ring(o);
    if (order_ != o.order_) {
        throw std::domain_error("matrix order mismatch in addition");
    }
    DenseMatrix out(order_, alpha_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] + o.entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    require_same_ring(o);
    if (order_ != o.order_) {
        throw std::domain_error("matrix order mismatch in subtraction");
    }
    DenseMatrix out(order_, alpha_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] - o.entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    require_same_ring(o);
    if (order_ != o.order_) {
        throw std::domain_error("matrix order mismatch in multiplication");
    }
    DenseMatrix out(order_, alpha_);
    for (std::size_t i = 1; i <= order_; ++i) {
        for (std::size_t j = 1; j <= order_; ++j) {
            QuadScalar sum = QuadScalar::zero(alpha_);
            for (std::size_t t = 1; t <= order_; ++t) {
                const QuadScalar& left = at(i, t);
                const QuadScalar& right = o.at(t, j);
                if (!left.is_zero() && !right.is_zero()) {
                    sum += left * right;
                }
            }
            out.entries_[out.index(i, j)] = sum;
        }
    }
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    require_same_ring(o);
    if (order_ != o.order_) {
        return false;
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] != o.entries_[k]) {
            return false;
        }
    }
    return true;
}

std::string DenseMatrix::to_text() const {
    if (order_ == 0) {
        return "(empty 0x0 matrix)";
    }
    std::vector<std::vector<std::string>> rows = rows_as_strings();
    std::vector<std::size_t> widths(order_, 0);
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < order_; ++j) {
            widths[j] = std::max(widths[j], row[j].size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            if (j > 0) {
                os << "  ";
            }
            os << std::string(widths[j] - rows[i][j].size(), ' ') << rows[i][j];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::vector<std::string>> DenseMatrix::rows_as_strings() const {
    std::vector<std::vector<std::string>> rows(order_);
    for (std::size_t i = 1; i <= order_; ++i) {
        rows[i - 1].reserve(order_);
        for (std::size_t j = 1; j <= order_; ++j) {
            rows[i - 1].push_back(at(i, j).str());
        }
    }
    return rows;
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.alpha() != b.alpha()) {
        throw ring_mismatch_error("direct sum requires matching ring parameters");
    }
    DenseMatrix out(a.order() + b.order(), a.alpha());
    for (std::size_t i = 1; i <= a.order(); ++i) {
        for (std::size_t j = 1; j <= a.order(); ++j) {
            out.set(i, j, a.at(i, j));
        }
    }
    for (std::size_t i = 1; i <= b.order(); ++i) {
        for (std::size_t j = 1; j <= b.order(); ++j) {
            out.set(a.order() + i, a.order() + j, b.at(i, j));
        }
    }
    return out;
}

Permutation::Permutation(std::vector<std::size_t> dest) : dest_(std::move(dest)) {
    const std::size_t k = dest_.size();
    src_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t d = dest_[i];
        if (d < 1 || d > k || src_[d - 1] != 0) {
            throw std::domain_error("permutation map is not a bijection on 1..k");
        }
        src_[d - 1] = i + 1;
    }
}

Permutation Permutation::identity(std::size_t k) {
    std::vector<std::size_t> dest(k);
    for (std::size_t i = 0; i < k; ++i) {
        dest[i] = i + 1;
    }
    return Permutation(std::move(dest));
}

std::size_t Permutation::dest_of(std::size_t i) const {
    if (i < 1 || i > dest_.size()) {
        throw std::out_of_range("permutation index out of range");
    }
    return dest_[i - 1];
}

std::size_t Permutation::source_at(std::size_t pos) const {
    if (pos < 1 || pos > src_.size()) {
        throw std::out_of_range("permutation position out of range");
    }
    return src_[pos - 1];
}

} // namespace pfaffkit
