#pragma once

#include <vector>

#include "pfaffkit/quad.hpp"

namespace pfaffkit {

// Sequence values for indices -1 .. max_index(), stored densely
// (element [i + 1] holds index i).
class PfSequence {
public:
    explicit PfSequence(std::vector<Rational> values) : values_(std::move(values)) {}

    const Rational& at(long i) const;
    long max_index() const { return static_cast<long>(values_.size()) - 2; }

    bool operator==(const PfSequence& o) const { return values_ == o.values_; }
    bool operator!=(const PfSequence& o) const { return !(*this == o); }

private:
    std::vector<Rational> values_;
};

struct SeqTriple {
    PfSequence f;
    PfSequence g;
    Params params;
};

// Coupled pair f[n] = b*g[n-1] + alpha*f[n-2], g[n] = -b*f[n-1] + alpha*g[n-2]
// seeded with f[-1] = g[-1] = 0 and f[0] = g[0] = 1 (hence f[1] = b,
// g[1] = -b). f[k] is the Pfaffian of the order-2k F family, g[k] of G.
SeqTriple coupled_fg(long m, const Params& p);

// Decoupled form f[n] = (-1)^(n-1)*b*f[n-1] + alpha*f[n-2], same seeds;
// agrees with coupled_fg(m, p).f elementwise.
PfSequence single_f(long m, const Params& p);

enum class PfFamily { F, G };

// f[k] (family F) or g[k] (family G) in O(k) ring operations.
Rational pf_fast(long k, const Params& p, PfFamily family = PfFamily::F);

} // namespace pfaffkit
