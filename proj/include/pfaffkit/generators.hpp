#pragma once

#include <utility>

#include "pfaffkit/matrix.hpp"

namespace pfaffkit {

// Generators for the structured matrix family and its reduction blocks.
// All take k >= 1 (std::domain_error otherwise) and build entries in the
// ring with alpha = p.alpha.

// k x k: a on the superdiagonal, -a on the subdiagonal.
DenseMatrix gen_a(std::size_t k, const Params& p);

// k x k anti-diagonal: entry (i, k+1-i) = (-1)^(i+1) * b.
DenseMatrix gen_b(std::size_t k, const Params& p);

// 2k x 2k skew-centrosymmetric family [[A, B], [(-1)^k B, A]].
DenseMatrix gen_f(std::size_t k, const Params& p);

// Companion family [[A, -B], [(-1)^(k+1) B, A]].
DenseMatrix gen_g(std::size_t k, const Params& p);

// Exchange matrix of order n (ones on the anti-diagonal).
DenseMatrix gen_j(std::size_t n, const Rational& alpha = Rational(0));

// 2-banded reduction of gen_f: pure-rational entries, alpha at |i-j| = 2,
// diagonal -2*alpha + b^2 with -alpha + b^2 at both ends for k >= 2.
// For k = 1 the reduction A^2 + B^2 has no -alpha contribution, so T_1 = [b^2].
DenseMatrix gen_t(std::size_t k, const Params& p);

// A*D - B*C over the four k x k blocks of f; checks the commutation
// hypothesis A*C = C*A first (structural_error if violated). Equals
// gen_t(k, p) whenever f = gen_f(k, p).
DenseMatrix schur_reduce(const DenseMatrix& f, std::size_t k);

// The two tridiagonal blocks gen_t splits into under gen_permutation:
// (H, K) for odd k, (N, Q) for even k. k = 1 yields an empty first block
// and T_1 as the second.
std::pair<DenseMatrix, DenseMatrix> gen_split_blocks(std::size_t k, const Params& p);

// Even source indices 2, 4, ... first, then odd ones 1, 3, ...
Permutation gen_permutation(std::size_t k);

// P^T M P: entry (i, j) of the result is M(source_at(i), source_at(j)).
DenseMatrix permute_conjugate(const DenseMatrix& m, const Permutation& p);

// M^T = -M (forces a zero diagonal).
bool is_skew_symmetric(const DenseMatrix& m);

// J M J = -M with J the exchange matrix of the same order.
bool is_skew_centrosymmetric(const DenseMatrix& m);

} // namespace pfaffkit
