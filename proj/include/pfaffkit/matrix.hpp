#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaffkit/quad.hpp"

namespace pfaffkit {

// Square matrix over one quadratic ring. Public indices are 1-based and
// bounds-checked; every entry shares the matrix alpha. Order 0 (the empty
// matrix) is allowed so block splits stay uniform.
class DenseMatrix {
public:
    DenseMatrix(std::size_t order, Rational alpha);

    std::size_t order() const { return order_; }
    const Rational& alpha() const { return alpha_; }

    const QuadScalar& at(std::size_t i, std::size_t j) const {
        return entries_[index(i, j)];
    }
    void set(std::size_t i, std::size_t j, const QuadScalar& value);
    void set(std::size_t i, std::size_t j, const Rational& value);

    DenseMatrix transposed() const;
    DenseMatrix operator-() const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;

    bool operator==(const DenseMatrix& o) const;
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    // Column-aligned plain-text grid.
    std::string to_text() const;
    // Row-major entry strings, for JSON dumps.
    std::vector<std::vector<std::string>> rows_as_strings() const;

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    void require_same_ring(const DenseMatrix& o) const;

    std::size_t order_;
    Rational alpha_;
    std::vector<QuadScalar> entries_;
};

// diag(a, b); the alphas must agree.
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

// Bijection on {1..k}. dest_of(i) says where source index i lands;
// source_at(p) is the inverse view.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> dest);
    static Permutation identity(std::size_t k);

    std::size_t size() const { return dest_.size(); }
    std::size_t dest_of(std::size_t i) const;
    std::size_t source_at(std::size_t pos) const;

private:
    std::vector<std::size_t> dest_;
    std::vector<std::size_t> src_;
};

} // namespace pfaffkit
