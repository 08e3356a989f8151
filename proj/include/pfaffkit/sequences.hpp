#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pfaffkit/quad.hpp"

namespace pfaffkit {

// The three named second-order integer sequences, 1-based:
//   Fibonacci:  s[n] = s[n-1] + s[n-2],   s[1] = 1, s[2] = 1
//   Pell:       s[n] = 2 s[n-1] + s[n-2], s[1] = 1, s[2] = 2
//   Jacobsthal: s[n] = s[n-1] + 2 s[n-2], s[1] = 1, s[2] = 1
enum class SequenceKind { fibonacci, pell, jacobsthal };

// nth term, exact. n >= 1 (std::domain_error otherwise).
BigInt seq_value(SequenceKind kind, long n);

// The ring parameters whose Pfaffians realize the sequence:
// Fibonacci (-1, 1), Pell (-1, 2), Jacobsthal (-2, 1).
Params params_for(SequenceKind kind);

// Signed Pfaffian value predicted for index k: +s[k+1] when k = 0, 1 (mod 4),
// -s[k+1] when k = 2, 3 (mod 4).
BigInt expected_pf(SequenceKind kind, long k);

// Determinant predicted for index k: s[k+1]^2.
BigInt expected_det(SequenceKind kind, long k);

std::string to_string(SequenceKind kind);
std::optional<SequenceKind> sequence_kind_from(std::string_view name);

} // namespace pfaffkit
