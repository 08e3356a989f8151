#pragma once

#include <optional>
#include <vector>

#include "pfaffkit/matrix.hpp"

namespace pfaffkit {

// Tridiagonal matrix given by its three diagonals; order 0 is the empty
// matrix with determinant 1.
struct TridiagSpec {
    std::vector<Rational> diag;  // d_1 .. d_n
    std::vector<Rational> sub;   // entries (i, i-1) for i = 2 .. n
    std::vector<Rational> super; // entries (i, i+1) for i = 1 .. n-1

    std::size_t order() const { return diag.size(); }

    // Extracts the bands; rejects matrices with entries beyond |i-j| = 1 or
    // entries outside the rational subring (std::domain_error).
    static TridiagSpec from_matrix(const DenseMatrix& m);
};

// Determinant by the three-term recurrence
// v[i] = d[i]*v[i-1] - sub[i]*super[i-1]*v[i-2], v[0] = 1, v[-1] = 0.
Rational tridiag_det(const TridiagSpec& t);

// w[i] = (-2*alpha + b^2)*w[i-1] - alpha^2*w[i-2] with w[-1] = 0, w[0] = 1,
// plus the backward extension w[-2] = -1/alpha^2 when alpha != 0 (reading
// the recurrence at i = 0 in reverse).
class WSeq {
public:
    // Valid for -2 <= i <= max_index(); i = -2 throws
    // singular_extension_error when alpha = 0.
    const Rational& at(long i) const;
    long max_index() const { return max_; }
    bool has_back_extension() const { return back_.has_value(); }

private:
    friend WSeq w_seq(long m, const Params& p);

    std::optional<Rational> back_;
    std::vector<Rational> values_; // values_[i + 1] holds index i, from -1
    long max_ = -1;
};

WSeq w_seq(long m, const Params& p);

// Closed-form determinant of the order-2k F family:
//   k even: ((-alpha + b^2) w[k/2-1] - alpha^2 w[k/2-2])^2
//   k odd:  w[(k-1)/2] ((-alpha+b^2)^2 w[(k-3)/2]
//           - 2 alpha^2 (-alpha+b^2) w[(k-5)/2] + alpha^4 w[(k-7)/2])
// k = 1 reduces to b^2 outright; k = 3 uses the backward-extended w[-2] and
// falls back to det_blockdiag when alpha = 0 makes that extension singular.
Rational det_closed(long k, const Params& p);

// Product of the two split-block determinants, each by tridiag_det.
Rational det_blockdiag(long k, const Params& p);

} // namespace pfaffkit
