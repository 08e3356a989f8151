#include "pfaffkit/oracle.hpp"

#include <bit>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "pfaffkit/errors.hpp"
#include "pfaffkit/generators.hpp"

namespace pfaffkit {

namespace {

constexpr std::size_t kPfaffianCapDefault = 16;
constexpr std::size_t kDetCapDefault = 14;

// Pfaffian over the active index set `mask` (bit i <-> matrix index i+1),
// expanding along the lowest active index: pairing it with the t-th
// remaining index carries sign (-1)^(t-1), the crossing parity of the
// matching being built.
QuadScalar pfaffian_over(const DenseMatrix& m, std::uint32_t mask,
                         std::unordered_map<std::uint32_t, QuadScalar>& memo) {
    if (mask == 0) {
        return QuadScalar::from_rational(1, m.alpha());
    }
    if (auto it = memo.find(mask); it != memo.end()) {
        return it->second;
    }
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1); // clears the lowest bit
    QuadScalar sum = QuadScalar::zero(m.alpha());
    bool positive = true;
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        const QuadScalar& entry = m.at(static_cast<std::size_t>(low) + 1,
                                       static_cast<std::size_t>(j) + 1);
        if (!entry.is_zero()) {
            const QuadScalar term =
                entry * pfaffian_over(m, rest & ~(std::uint32_t{1} << j), memo);
            if (positive) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        positive = !positive;
    }
    memo.emplace(mask, sum);
    return sum;
}

} // namespace

OracleCaps oracle_caps() {
    OracleCaps caps{kPfaffianCapDefault, kDetCapDefault};
    if (const char* raw = std::getenv("PFAFFKIT_ORACLE_CAP")) {
        errno = 0;
        char* end = nullptr;
        const long v = std::strtol(raw, &end, 10);
        if (end != raw && end != nullptr && *end == '\0' && errno == 0) {
            const std::size_t limit = v < 0 ? 0 : static_cast<std::size_t>(v);
            caps.pfaffian_order = std::min(caps.pfaffian_order, limit);
            caps.det_order = std::min(caps.det_order, limit);
        }
    }
    return caps;
}

QuadScalar pfaffian_oracle(const DenseMatrix& m) {
    const std::size_t n = m.order();
    if (n % 2 != 0) {
        throw std::domain_error("pfaffian requires even order, got " + std::to_string(n));
    }
    const OracleCaps caps = oracle_caps();
    if (n > caps.pfaffian_order) {
        throw resource_error("order " + std::to_string(n) +
                             " exceeds the pfaffian oracle cap of " +
                             std::to_string(caps.pfaffian_order));
    }
    if (!is_skew_symmetric(m)) {
        throw std::domain_error("pfaffian requires a skew-symmetric matrix");
    }
    if (n == 0) {
        return QuadScalar::from_rational(1, m.alpha());
    }
    std::unordered_map<std::uint32_t, QuadScalar> memo;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    return pfaffian_over(m, full, memo);
}

QuadScalar det_oracle(const DenseMatrix& m) {
    const std::size_t n = m.order();
    const OracleCaps caps = oracle_caps();
    if (n > caps.det_order) {
        throw resource_error("order " + std::to_string(n) +
                             " exceeds the determinant oracle cap of " +
                             std::to_string(caps.det_order));
    }
    if (n == 0) {
        return QuadScalar::from_rational(1, m.alpha());
    }
    // dp[mask] accumulates signed products of the first popcount(mask) rows
    // over the column set `mask`; assigning row r to column j adds one
    // inversion per already-used column above j.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<QuadScalar> dp(full + 1, QuadScalar::zero(m.alpha()));
    dp[0] = QuadScalar::from_rational(1, m.alpha());
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        QuadScalar sum = QuadScalar::zero(m.alpha());
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            const int j = std::countr_zero(bits);
            const QuadScalar& entry = m.at(row, static_cast<std::size_t>(j) + 1);
            if (entry.is_zero()) {
                continue;
            }
            const QuadScalar term = entry * dp[mask & ~(std::uint32_t{1} << j)];
            if (std::popcount(mask >> (j + 1)) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        dp[mask] = sum;
    }
    return dp[full];
}

bool cayley_check(const DenseMatrix& m) {
    const QuadScalar pf = pfaffian_oracle(m);
    return det_oracle(m) == pf * pf;
}

} // namespace pfaffkit
