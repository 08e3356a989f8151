#include "pfaffkit/blockdiag.hpp"

#include <stdexcept>

#include "pfaffkit/errors.hpp"
#include "pfaffkit/generators.hpp"

namespace pfaffkit {

TridiagSpec TridiagSpec::from_matrix(const DenseMatrix& m) {
    const std::size_t n = m.order();
    TridiagSpec t;
    t.diag.reserve(n);
    if (n > 0) {
        t.sub.reserve(n - 1);
        t.super.reserve(n - 1);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const QuadScalar& e = m.at(i, j);
            const std::size_t dist = i > j ? i - j : j - i;
            if (dist >= 2) {
                if (!e.is_zero()) {
                    throw std::domain_error("matrix is not tridiagonal");
                }
                continue;
            }
            if (!e.is_rational()) {
                throw std::domain_error("tridiagonal extraction requires rational entries");
            }
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        t.diag.push_back(m.at(i, i).u());
        if (i < n) {
            t.super.push_back(m.at(i, i + 1).u());
            t.sub.push_back(m.at(i + 1, i).u());
        }
    }
    return t;
}

Rational tridiag_det(const TridiagSpec& t) {
    const std::size_t n = t.order();
    if (n > 0 && (t.sub.size() != n - 1 || t.super.size() != n - 1)) {
        throw std::domain_error("tridiagonal band lengths must be order - 1");
    }
    Rational prev(0); // v[-1]
    Rational cur(1);  // v[0]
    for (std::size_t i = 1; i <= n; ++i) {
        Rational next = t.diag[i - 1] * cur;
        if (i >= 2) {
            next -= t.sub[i - 2] * t.super[i - 2] * prev;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

const Rational& WSeq::at(long i) const {
    if (i < -2 || i > max_) {
        throw std::out_of_range("w-sequence index " + std::to_string(i) +
                                " outside -2.." + std::to_string(max_));
    }
    if (i == -2) {
        if (!back_) {
            throw singular_extension_error(
                "w[-2] does not exist for alpha = 0; use the tridiagonal path");
        }
        return *back_;
    }
    return values_[static_cast<std::size_t>(i + 1)];
}

WSeq w_seq(long m, const Params& p) {
    if (m < -2) {
        throw std::domain_error("w-sequence bound must be >= -2");
    }
    WSeq w;
    w.max_ = m;
    const Rational middle = p.b * p.b - 2 * p.alpha;
    const Rational alpha_sq = p.alpha * p.alpha;
    w.values_.push_back(0); // index -1
    w.values_.push_back(1); // index 0
    for (long i = 1; i <= m; ++i) {
        const std::size_t prev = static_cast<std::size_t>(i);      // index i - 1
        const std::size_t prev2 = static_cast<std::size_t>(i - 1); // index i - 2
        w.values_.push_back(middle * w.values_[prev] - alpha_sq * w.values_[prev2]);
    }
    if (!p.alpha.is_zero()) {
        // Reading w[0] = middle*w[-1] - alpha^2*w[-2] backwards: 1 = -alpha^2 w[-2].
        w.back_ = Rational(-1) / alpha_sq;
    }
    return w;
}

Rational det_closed(long k, const Params& p) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1");
    }
    if (k == 1) {
        // T_1 = [b^2]: the order-1 reduction has no -alpha contribution.
        return p.b * p.b;
    }
    const Rational end = p.b * p.b - p.alpha;
    const Rational alpha_sq = p.alpha * p.alpha;
    if (k % 2 == 0) {
        const long half = k / 2;
        const WSeq w = w_seq(half - 1, p);
        const Rational root = end * w.at(half - 1) - alpha_sq * w.at(half - 2);
        return root * root;
    }
    if (k == 3 && p.alpha.is_zero()) {
        // The odd formula needs the singular w[-2] here; the block product
        // computes the same value without it.
        return det_blockdiag(k, p);
    }
    const WSeq w = w_seq((k - 1) / 2, p);
    const Rational inner = end * end * w.at((k - 3) / 2) -
                           2 * alpha_sq * end * w.at((k - 5) / 2) +
                           alpha_sq * alpha_sq * w.at((k - 7) / 2);
    return w.at((k - 1) / 2) * inner;
}

Rational det_blockdiag(long k, const Params& p) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1");
    }
    const auto blocks = gen_split_blocks(static_cast<std::size_t>(k), p);
    return tridiag_det(TridiagSpec::from_matrix(blocks.first)) *
           tridiag_det(TridiagSpec::from_matrix(blocks.second));
}

} // namespace pfaffkit
