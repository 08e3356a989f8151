#include "pfaffkit/recurrence.hpp"

#include <stdexcept>

namespace pfaffkit {

const Rational& PfSequence::at(long i) const {
    if (i < -1 || i > max_index()) {
        throw std::out_of_range("sequence index " + std::to_string(i) +
                                " outside -1.." + std::to_string(max_index()));
    }
    return values_[static_cast<std::size_t>(i + 1)];
}

SeqTriple coupled_fg(long m, const Params& p) {
    if (m < 0) {
        throw std::domain_error("sequence bound must be >= 0");
    }
    std::vector<Rational> f;
    std::vector<Rational> g;
    f.reserve(static_cast<std::size_t>(m) + 2);
    g.reserve(static_cast<std::size_t>(m) + 2);
    f.push_back(0); // index -1
    f.push_back(1); // index 0
    g.push_back(0);
    g.push_back(1);
    for (long n = 1; n <= m; ++n) {
        // value at index i lives at position i + 1
        const std::size_t prev = static_cast<std::size_t>(n);      // index n - 1
        const std::size_t prev2 = static_cast<std::size_t>(n - 1); // index n - 2
        f.push_back(p.b * g[prev] + p.alpha * f[prev2]);
        g.push_back(-p.b * f[prev] + p.alpha * g[prev2]);
    }
    return SeqTriple{PfSequence(std::move(f)), PfSequence(std::move(g)), p};
}

PfSequence single_f(long m, const Params& p) {
    if (m < 0) {
        throw std::domain_error("sequence bound must be >= 0");
    }
    std::vector<Rational> f;
    f.reserve(static_cast<std::size_t>(m) + 2);
    f.push_back(0);
    f.push_back(1);
    for (long n = 1; n <= m; ++n) {
        const Rational coeff = (n % 2 == 1) ? p.b : -p.b; // (-1)^(n-1) b
        const std::size_t prev = static_cast<std::size_t>(n);
        const std::size_t prev2 = static_cast<std::size_t>(n - 1);
        f.push_back(coeff * f[prev] + p.alpha * f[prev2]);
    }
    return PfSequence(std::move(f));
}

Rational pf_fast(long k, const Params& p, PfFamily family) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1");
    }
    const SeqTriple seqs = coupled_fg(k, p);
    return family == PfFamily::F ? seqs.f.at(k) : seqs.g.at(k);
}

} // namespace pfaffkit
