#include "pfaffkit/sequences.hpp"

#include <stdexcept>

namespace pfaffkit {

namespace {

struct SeqDef {
    long c1;     // coefficient of s[n-1]
    long c2;     // coefficient of s[n-2]
    long second; // s[2]
};

SeqDef seq_def(SequenceKind kind) {
    switch (kind) {
    case SequenceKind::fibonacci:
        return {1, 1, 1};
    case SequenceKind::pell:
        return {2, 1, 2};
    case SequenceKind::jacobsthal:
        return {1, 2, 1};
    }
    throw std::logic_error("unknown sequence kind");
}

} // namespace

BigInt seq_value(SequenceKind kind, long n) {
    if (n < 1) {
        throw std::domain_error("sequence index must be >= 1");
    }
    const SeqDef def = seq_def(kind);
    if (n == 1) {
        return 1;
    }
    BigInt prev(1);
    BigInt cur(def.second);
    for (long i = 3; i <= n; ++i) {
        BigInt next = def.c1 * cur + def.c2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Params params_for(SequenceKind kind) {
    switch (kind) {
    case SequenceKind::fibonacci:
        return {Rational(-1), Rational(1)};
    case SequenceKind::pell:
        return {Rational(-1), Rational(2)};
    case SequenceKind::jacobsthal:
        return {Rational(-2), Rational(1)};
    }
    throw std::logic_error("unknown sequence kind");
}

BigInt expected_pf(SequenceKind kind, long k) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1");
    }
    BigInt v = seq_value(kind, k + 1);
    const long r = k % 4;
    if (r == 0 || r == 1) {
        return v;
    }
    return BigInt(-v);
}

BigInt expected_det(SequenceKind kind, long k) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1");
    }
    const BigInt v = seq_value(kind, k + 1);
    return v * v;
}

std::string to_string(SequenceKind kind) {
    switch (kind) {
    case SequenceKind::fibonacci:
        return "fibonacci";
    case SequenceKind::pell:
        return "pell";
    case SequenceKind::jacobsthal:
        return "jacobsthal";
    }
    throw std::logic_error("unknown sequence kind");
}

std::optional<SequenceKind> sequence_kind_from(std::string_view name) {
    if (name == "fibonacci") {
        return SequenceKind::fibonacci;
    }
    if (name == "pell") {
        return SequenceKind::pell;
    }
    if (name == "jacobsthal") {
        return SequenceKind::jacobsthal;
    }
    return std::nullopt;
}

} // namespace pfaffkit
