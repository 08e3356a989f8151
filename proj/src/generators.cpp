#include "pfaffkit/generators.hpp"

#include <stdexcept>

namespace pfaffkit {

namespace {

void require_positive(std::size_t k) {
    if (k < 1) {
        throw std::domain_error("matrix order parameter must be >= 1");
    }
}

void place_block(DenseMatrix& dst, const DenseMatrix& src,
                 std::size_t row0, std::size_t col0) {
    for (std::size_t i = 1; i <= src.order(); ++i) {
        for (std::size_t j = 1; j <= src.order(); ++j) {
            dst.set(row0 + i, col0 + j, src.at(i, j));
        }
    }
}

} // namespace

DenseMatrix gen_a(std::size_t k, const Params& p) {
    require_positive(k);
    DenseMatrix m(k, p.alpha);
    const QuadScalar a = QuadScalar::root_of(p.alpha);
    for (std::size_t i = 1; i + 1 <= k; ++i) {
        m.set(i, i + 1, a);
        m.set(i + 1, i, -a);
    }
    return m;
}

DenseMatrix gen_b(std::size_t k, const Params& p) {
    require_positive(k);
    DenseMatrix m(k, p.alpha);
    for (std::size_t i = 1; i <= k; ++i) {
        m.set(i, k + 1 - i, i % 2 == 1 ? p.b : -p.b);
    }
    return m;
}

DenseMatrix gen_f(std::size_t k, const Params& p) {
    require_positive(k);
    const DenseMatrix a = gen_a(k, p);
    const DenseMatrix b = gen_b(k, p);
    DenseMatrix m(2 * k, p.alpha);
    place_block(m, a, 0, 0);
    place_block(m, b, 0, k);
    place_block(m, k % 2 == 0 ? b : -b, k, 0);
    place_block(m, a, k, k);
    return m;
}

DenseMatrix gen_g(std::size_t k, const Params& p) {
    require_positive(k);
    const DenseMatrix a = gen_a(k, p);
    const DenseMatrix b = gen_b(k, p);
    DenseMatrix m(2 * k, p.alpha);
    place_block(m, a, 0, 0);
    place_block(m, -b, 0, k);
    place_block(m, k % 2 == 0 ? -b : b, k, 0);
    place_block(m, a, k, k);
    return m;
}

DenseMatrix gen_j(std::size_t n, const Rational& alpha) {
    require_positive(n);
    DenseMatrix m(n, alpha);
    for (std::size_t i = 1; i <= n; ++i) {
        m.set(i, n + 1 - i, Rational(1));
    }
    return m;
}

DenseMatrix gen_t(std::size_t k, const Params& p) {
    require_positive(k);
    DenseMatrix m(k, p.alpha);
    if (k == 1) {
        m.set(1, 1, p.b * p.b);
        return m;
    }
    const Rational end = p.b * p.b - p.alpha;
    const Rational mid = p.b * p.b - 2 * p.alpha;
    for (std::size_t i = 1; i <= k; ++i) {
        m.set(i, i, (i == 1 || i == k) ? end : mid);
    }
    for (std::size_t i = 1; i + 2 <= k; ++i) {
        m.set(i, i + 2, p.alpha);
        m.set(i + 2, i, p.alpha);
    }
    return m;
}

DenseMatrix schur_reduce(const DenseMatrix& f, std::size_t k) {
    require_positive(k);
    if (f.order() != 2 * k) {
        throw std::domain_error("schur_reduce expects a matrix of order 2k");
    }
    const auto block = [&](std::size_t row0, std::size_t col0) {
        DenseMatrix b(k, f.alpha());
        for (std::size_t i = 1; i <= k; ++i) {
            for (std::size_t j = 1; j <= k; ++j) {
                b.set(i, j, f.at(row0 + i, col0 + j));
            }
        }
        return b;
    };
    const DenseMatrix a = block(0, 0);
    const DenseMatrix b = block(0, k);
    const DenseMatrix c = block(k, 0);
    const DenseMatrix d = block(k, k);
    if (a * c != c * a) {
        throw structural_error("block commutation hypothesis A C = C A failed");
    }
    return a * d - b * c;
}

std::pair<DenseMatrix, DenseMatrix> gen_split_blocks(std::size_t k, const Params& p) {
    require_positive(k);
    if (k == 1) {
        return {DenseMatrix(0, p.alpha), gen_t(1, p)};
    }
    const Rational end = p.b * p.b - p.alpha;
    const Rational mid = p.b * p.b - 2 * p.alpha;
    const auto tridiagonal = [&](std::size_t order, bool end_first, bool end_last) {
        DenseMatrix m(order, p.alpha);
        for (std::size_t i = 1; i <= order; ++i) {
            const bool at_end = (end_first && i == 1) || (end_last && i == order);
            m.set(i, i, at_end ? end : mid);
            if (i < order) {
                m.set(i, i + 1, p.alpha);
                m.set(i + 1, i, p.alpha);
            }
        }
        return m;
    };
    if (k % 2 == 1) {
        // H: interior entries only; K: -alpha + b^2 at both ends.
        return {tridiagonal((k - 1) / 2, false, false),
                tridiagonal((k + 1) / 2, true, true)};
    }
    // N: -alpha + b^2 at the last position; Q: at the first.
    return {tridiagonal(k / 2, false, true),
            tridiagonal(k / 2, true, false)};
}

Permutation gen_permutation(std::size_t k) {
    require_positive(k);
    const std::size_t evens = k / 2;
    std::vector<std::size_t> dest(k);
    for (std::size_t i = 1; i <= k; ++i) {
        dest[i - 1] = (i % 2 == 0) ? i / 2 : evens + (i + 1) / 2;
    }
    return Permutation(std::move(dest));
}

DenseMatrix permute_conjugate(const DenseMatrix& m, const Permutation& p) {
    if (m.order() != p.size()) {
        throw std::domain_error("permutation size must match matrix order");
    }
    DenseMatrix out(m.order(), m.alpha());
    for (std::size_t i = 1; i <= m.order(); ++i) {
        for (std::size_t j = 1; j <= m.order(); ++j) {
            out.set(i, j, m.at(p.source_at(i), p.source_at(j)));
        }
    }
    return out;
}

bool is_skew_symmetric(const DenseMatrix& m) {
    for (std::size_t i = 1; i <= m.order(); ++i) {
        for (std::size_t j = i; j <= m.order(); ++j) {
            if (m.at(j, i) != -m.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool is_skew_centrosymmetric(const DenseMatrix& m) {
    if (m.order() == 0) {
        return true;
    }
    const DenseMatrix j = gen_j(m.order(), m.alpha());
    return j * m * j == -m;
}

} // namespace pfaffkit
