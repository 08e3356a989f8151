#pragma once

#include "pfaffkit/matrix.hpp"

namespace pfaffkit {

// Hard size limits for the brute-force oracles. The environment variable
// PFAFFKIT_ORACLE_CAP may lower both, never raise them.
struct OracleCaps {
    std::size_t pfaffian_order; // default 16: (order-1)!! matching terms
    std::size_t det_order;      // default 14: 2^order memoized expansion states
};

OracleCaps oracle_caps();

// Ground-truth Pfaffian: signed sum over perfect matchings, expanded along
// the lowest unmatched index. Division-free. Requires even order and exact
// skew-symmetry (std::domain_error), order within cap (resource_error).
QuadScalar pfaffian_oracle(const DenseMatrix& m);

// Ground-truth determinant: memoized Leibniz/cofactor expansion over column
// subsets. Division-free. Order within cap (resource_error).
QuadScalar det_oracle(const DenseMatrix& m);

// det(M) == Pf(M)^2, both sides by the oracles above.
bool cayley_check(const DenseMatrix& m);

} // namespace pfaffkit
