// pfaffkit command line: compute Pfaffians and determinants of the
// structured skew-centrosymmetric family, tabulate the named-sequence
// identities, run the cross-method verification suite, and benchmark the
// O(k) paths against the brute-force oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource-cap error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pfaffkit/blockdiag.hpp"
#include "pfaffkit/errors.hpp"
#include "pfaffkit/generators.hpp"
#include "pfaffkit/oracle.hpp"
#include "pfaffkit/recurrence.hpp"
#include "pfaffkit/sequences.hpp"

namespace {

using namespace pfaffkit;
using nlohmann::json;

long long elapsed_ns(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::size_t digit_count(const std::string& rendered) {
    return static_cast<std::size_t>(std::count_if(
        rendered.begin(), rendered.end(),
        [](unsigned char c) { return std::isdigit(c) != 0; }));
}

Params parse_params(const std::string& alpha, const std::string& b) {
    return Params{Rational::parse(alpha), Rational::parse(b)};
}

json params_json(long k, const Params& p) {
    return json{{"k", k}, {"alpha", p.alpha.str()}, {"b", p.b.str()}};
}

// ---------------------------------------------------------------------------
// pf / det

struct ValueOptions {
    long k = 1;
    std::string alpha = "-1";
    std::string b = "1";
    std::string method;
    std::string format = "text";
    bool with_g = false;
    bool dump = false;
};

void emit_value_report(const std::string& command, const ValueOptions& opt,
                       const Params& p, const std::string& value,
                       const std::string& value_g, long long ns,
                       const DenseMatrix* dumped_f, const DenseMatrix* dumped_g) {
    if (opt.format == "json") {
        json out{{"command", command},
                 {"params", params_json(opt.k, p)},
                 {"method", opt.method},
                 {"value", value},
                 {"elapsed_ns", ns}};
        if (opt.with_g) {
            out["value_g"] = value_g;
        }
        if (dumped_f != nullptr) {
            out["matrix"] = dumped_f->rows_as_strings();
        }
        if (dumped_g != nullptr) {
            out["matrix_g"] = dumped_g->rows_as_strings();
        }
        std::cout << out.dump() << '\n';
        return;
    }
    if (dumped_f != nullptr) {
        std::cout << dumped_f->to_text();
    }
    if (dumped_g != nullptr) {
        std::cout << dumped_g->to_text();
    }
    std::cout << value << '\n';
    if (opt.with_g) {
        std::cout << value_g << '\n';
    }
    std::cerr << "method=" << opt.method << " elapsed_ns=" << ns << '\n';
}

int cmd_pf(const ValueOptions& opt) {
    const Params p = parse_params(opt.alpha, opt.b);
    const std::size_t k = static_cast<std::size_t>(opt.k);
    std::string value;
    std::string value_g;
    const auto start = std::chrono::steady_clock::now();
    if (opt.method == "recurrence") {
        value = pf_fast(opt.k, p, PfFamily::F).str();
        if (opt.with_g) {
            value_g = pf_fast(opt.k, p, PfFamily::G).str();
        }
    } else { // oracle
        const OracleCaps caps = oracle_caps();
        if (2 * k > caps.pfaffian_order) {
            throw resource_error("order " + std::to_string(2 * k) +
                                 " exceeds the pfaffian oracle cap of " +
                                 std::to_string(caps.pfaffian_order));
        }
        value = pfaffian_oracle(gen_f(k, p)).str();
        if (opt.with_g) {
            value_g = pfaffian_oracle(gen_g(k, p)).str();
        }
    }
    const long long ns = elapsed_ns(start);
    std::optional<DenseMatrix> fmat;
    std::optional<DenseMatrix> gmat;
    if (opt.dump) {
        fmat = gen_f(k, p);
        if (opt.with_g) {
            gmat = gen_g(k, p);
        }
    }
    emit_value_report("pf", opt, p, value, value_g, ns,
                      fmat ? &*fmat : nullptr, gmat ? &*gmat : nullptr);
    return 0;
}

int cmd_det(const ValueOptions& opt) {
    const Params p = parse_params(opt.alpha, opt.b);
    const std::size_t k = static_cast<std::size_t>(opt.k);
    std::string value;
    const auto start = std::chrono::steady_clock::now();
    if (opt.method == "closed") {
        value = det_closed(opt.k, p).str();
    } else if (opt.method == "blockdiag") {
        value = det_blockdiag(opt.k, p).str();
    } else if (opt.method == "pf-squared") {
        const Rational f = pf_fast(opt.k, p, PfFamily::F);
        value = (f * f).str();
    } else { // oracle
        const OracleCaps caps = oracle_caps();
        if (2 * k > caps.det_order) {
            throw resource_error("order " + std::to_string(2 * k) +
                                 " exceeds the determinant oracle cap of " +
                                 std::to_string(caps.det_order));
        }
        value = det_oracle(gen_f(k, p)).str();
    }
    const long long ns = elapsed_ns(start);
    std::optional<DenseMatrix> fmat;
    if (opt.dump) {
        fmat = gen_f(k, p);
    }
    emit_value_report("det", opt, p, value, "", ns, fmat ? &*fmat : nullptr, nullptr);
    return 0;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const std::string& family, long kmax, const std::string& format) {
    const auto kind = sequence_kind_from(family);
    if (!kind) {
        throw std::invalid_argument("unknown family: \"" + family + "\"");
    }
    const Params p = params_for(*kind);
    json rows = json::array();
    std::string csv = "k,pf,expected_pf,det,expected_det,pf_match,det_match\n";
    for (long k = 1; k <= kmax; ++k) {
        const Rational pf = pf_fast(k, p, PfFamily::F);
        const Rational det = det_closed(k, p);
        const BigInt epf = expected_pf(*kind, k);
        const BigInt edet = expected_det(*kind, k);
        const bool pf_match = pf == Rational(epf);
        const bool det_match = det == Rational(edet);
        if (format == "json") {
            rows.push_back(json{{"k", k},
                                {"pf", pf.str()},
                                {"expected_pf", epf.get_str()},
                                {"det", det.str()},
                                {"expected_det", edet.get_str()},
                                {"pf_match", pf_match},
                                {"det_match", det_match}});
        } else {
            csv += std::to_string(k) + ',' + pf.str() + ',' + epf.get_str() + ',' +
                   det.str() + ',' + edet.get_str() + ',' +
                   (pf_match ? "true" : "false") + ',' +
                   (det_match ? "true" : "false") + '\n';
        }
    }
    if (format == "json") {
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << csv;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    std::string scope;
    bool ok = true;
    std::string counterexample;

    void fail(const std::string& detail) {
        if (ok) {
            ok = false;
            counterexample = detail;
        }
    }
};

class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : eng_(seed) {}

    Rational small_rational() {
        const long num = static_cast<long>(eng_() % 19) - 9;
        const long den = static_cast<long>(eng_() % 9) + 1;
        return Rational(BigInt(num), BigInt(den));
    }

    Params params() {
        Rational alpha = small_rational();
        Rational b = small_rational();
        return {std::move(alpha), std::move(b)};
    }

private:
    std::mt19937_64 eng_;
};

std::string describe(long k, const Params& p) {
    return "k=" + std::to_string(k) + " alpha=" + p.alpha.str() + " b=" + p.b.str();
}

int cmd_verify(long kmax_oracle, long kmax_fast, long trials, std::uint64_t seed) {
    if (kmax_oracle < 1 || kmax_oracle > 6) {
        throw std::invalid_argument("--kmax-oracle must be between 1 and 6");
    }
    if (kmax_fast < 1 || trials < 1) {
        throw std::invalid_argument("--kmax-fast and --trials must be >= 1");
    }
    ParamSampler sampler(seed);
    std::vector<CheckResult> results;

    const std::string trials_scope = std::to_string(trials) + " trials";

    {
        CheckResult r{"scalar-ring-axioms", trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Rational alpha = sampler.small_rational();
            const QuadScalar x(sampler.small_rational(), sampler.small_rational(), alpha);
            const QuadScalar y(sampler.small_rational(), sampler.small_rational(), alpha);
            const QuadScalar z(sampler.small_rational(), sampler.small_rational(), alpha);
            if ((x + y) + z != x + (y + z) || (x * y) * z != x * (y * z) ||
                x * y != y * x || x * (y + z) != x * y + x * z) {
                r.fail("alpha=" + alpha.str() + " x=" + x.str() + " y=" + y.str() +
                       " z=" + z.str());
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"generator-skew-structure", "k<=8, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (std::size_t k = 1; k <= 8 && r.ok; ++k) {
                const DenseMatrix f = gen_f(k, p);
                const DenseMatrix g = gen_g(k, p);
                if (!is_skew_symmetric(f) || !is_skew_centrosymmetric(f) ||
                    !is_skew_symmetric(g) || !is_skew_centrosymmetric(g)) {
                    r.fail(describe(static_cast<long>(k), p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"commutation-hypothesis", "k<=8, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (std::size_t k = 1; k <= 8 && r.ok; ++k) {
                const DenseMatrix a = gen_a(k, p);
                DenseMatrix c = gen_b(k, p);
                if (k % 2 == 1) {
                    c = -c;
                }
                if (a * c != c * a) {
                    r.fail(describe(static_cast<long>(k), p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"schur-reduce-equals-t", "k<=8, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (std::size_t k = 1; k <= 8 && r.ok; ++k) {
                if (schur_reduce(gen_f(k, p), k) != gen_t(k, p)) {
                    r.fail(describe(static_cast<long>(k), p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"split-block-conjugation", "k<=12, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (std::size_t k = 1; k <= 12 && r.ok; ++k) {
                const auto blocks = gen_split_blocks(k, p);
                if (permute_conjugate(gen_t(k, p), gen_permutation(k)) !=
                    direct_sum(blocks.first, blocks.second)) {
                    r.fail(describe(static_cast<long>(k), p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"even-split-reversal-dets", "even k<=12, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (std::size_t k = 2; k <= 12 && r.ok; k += 2) {
                const auto blocks = gen_split_blocks(k, p);
                if (det_oracle(blocks.first) != det_oracle(blocks.second)) {
                    r.fail(describe(static_cast<long>(k), p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"pf-recurrence-oracle-equivalence",
                      "k<=" + std::to_string(kmax_oracle) + ", " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (long k = 1; k <= kmax_oracle && r.ok; ++k) {
                const std::size_t ku = static_cast<std::size_t>(k);
                const QuadScalar pf_f = pfaffian_oracle(gen_f(ku, p));
                const QuadScalar pf_g = pfaffian_oracle(gen_g(ku, p));
                const Rational f = pf_fast(k, p, PfFamily::F);
                const Rational g = pf_fast(k, p, PfFamily::G);
                if (pf_f != QuadScalar::from_rational(f, p.alpha)) {
                    r.fail(describe(k, p) + " expected=" + f.str() + " got=" + pf_f.str());
                } else if (pf_g != QuadScalar::from_rational(g, p.alpha)) {
                    r.fail(describe(k, p) + " expected=" + g.str() + " got=" + pf_g.str());
                }
            }
        }
        results.push_back(r);
    }

    {
        const long kmax = std::min(kmax_oracle,
                                   static_cast<long>(oracle_caps().det_order / 2));
        CheckResult r{"cayley-det-pf-square",
                      "k<=" + std::to_string(kmax) + ", " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (long k = 1; k <= kmax && r.ok; ++k) {
                const std::size_t ku = static_cast<std::size_t>(k);
                if (!cayley_check(gen_f(ku, p)) || !cayley_check(gen_g(ku, p))) {
                    r.fail(describe(k, p));
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"single-f-equals-coupled", "m=200, " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            if (single_f(200, p) != coupled_fg(200, p).f) {
                r.fail("alpha=" + p.alpha.str() + " b=" + p.b.str());
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"fast-methods-agree",
                      "k<=" + std::to_string(kmax_fast) + ", " + trials_scope};
        for (long t = 0; t < trials && r.ok; ++t) {
            const Params p = sampler.params();
            for (long k = 1; k <= kmax_fast && r.ok; ++k) {
                const Rational f = pf_fast(k, p, PfFamily::F);
                const Rational closed = det_closed(k, p);
                const Rational block = det_blockdiag(k, p);
                if (closed != f * f || closed != block) {
                    r.fail(describe(k, p) + " pf2=" + (f * f).str() + " closed=" +
                           closed.str() + " blockdiag=" + block.str());
                }
            }
        }
        results.push_back(r);
    }

    {
        CheckResult r{"table-identities", "k<=" + std::to_string(kmax_fast)};
        for (const SequenceKind kind : {SequenceKind::fibonacci, SequenceKind::pell,
                                        SequenceKind::jacobsthal}) {
            const Params p = params_for(kind);
            for (long k = 1; k <= kmax_fast && r.ok; ++k) {
                if (pf_fast(k, p, PfFamily::F) != Rational(expected_pf(kind, k)) ||
                    det_closed(k, p) != Rational(expected_det(kind, k))) {
                    r.fail(to_string(kind) + " " + describe(k, p));
                }
            }
        }
        results.push_back(r);
    }

    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.ok) {
            ++passed;
            std::cout << "ok    " << r.name << " (" << r.scope << ")\n";
        } else {
            std::cout << "FAIL  " << r.name << " (" << r.scope << ")\n"
                      << "      counterexample: " << r.counterexample << '\n';
        }
    }
    std::cout << "verify: " << passed << "/" << results.size()
              << " invariants passed\n";
    return passed == results.size() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(long kmax, long step, const std::string& alpha, const std::string& b,
              const std::string& format) {
    if (kmax < 1 || step < 1) {
        throw std::invalid_argument("--kmax and --step must be >= 1");
    }
    const Params p = parse_params(alpha, b);
    const OracleCaps caps = oracle_caps();

    struct Row {
        long k;
        std::string method;
        long long ns;
        std::size_t digits;
    };
    std::vector<Row> rows;
    for (long k = step; k <= kmax; k += step) {
        const std::size_t ku = static_cast<std::size_t>(k);
        {
            const auto start = std::chrono::steady_clock::now();
            const Rational v = pf_fast(k, p, PfFamily::F);
            rows.push_back({k, "pf_fast", elapsed_ns(start), digit_count(v.str())});
        }
        {
            const auto start = std::chrono::steady_clock::now();
            const Rational v = det_closed(k, p);
            rows.push_back({k, "det_closed", elapsed_ns(start), digit_count(v.str())});
        }
        if (2 * ku <= caps.pfaffian_order) {
            const auto start = std::chrono::steady_clock::now();
            const QuadScalar v = pfaffian_oracle(gen_f(ku, p));
            rows.push_back({k, "pfaffian_oracle", elapsed_ns(start), digit_count(v.str())});
        }
        if (2 * ku <= caps.det_order) {
            const auto start = std::chrono::steady_clock::now();
            const QuadScalar v = det_oracle(gen_f(ku, p));
            rows.push_back({k, "det_oracle", elapsed_ns(start), digit_count(v.str())});
        }
    }

    if (format == "json") {
        json out = json::array();
        for (const Row& r : rows) {
            out.push_back(json{{"k", r.k},
                               {"method", r.method},
                               {"elapsed_ns", r.ns},
                               {"value_digits", r.digits}});
        }
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "k,method,elapsed_ns,value_digits\n";
        for (const Row& r : rows) {
            std::cout << r.k << ',' << r.method << ',' << r.ns << ',' << r.digits << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Pfaffian/determinant toolkit for a structured "
                 "skew-centrosymmetric matrix family"};
    app.require_subcommand(1);

    ValueOptions pf_opt;
    pf_opt.method = "recurrence";
    CLI::App* pf = app.add_subcommand("pf", "Pfaffian of the order-2k F family");
    pf->add_option("--k", pf_opt.k, "block parameter k (matrix order is 2k)")
        ->required()
        ->check(CLI::PositiveNumber);
    pf->add_option("--alpha,--a-squared", pf_opt.alpha,
                   "ring parameter alpha = a^2, as a rational string");
    pf->add_option("--b", pf_opt.b, "anti-diagonal weight b, as a rational string");
    pf->add_option("--method", pf_opt.method, "evaluation method")
        ->check(CLI::IsMember({"recurrence", "oracle"}));
    pf->add_option("--format", pf_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    pf->add_flag("--with-g", pf_opt.with_g, "also report the G-family Pfaffian");
    pf->add_flag("--dump", pf_opt.dump, "include the generated matrix");

    ValueOptions det_opt;
    det_opt.method = "closed";
    CLI::App* det = app.add_subcommand("det", "determinant of the order-2k F family");
    det->add_option("--k", det_opt.k, "block parameter k (matrix order is 2k)")
        ->required()
        ->check(CLI::PositiveNumber);
    det->add_option("--alpha,--a-squared", det_opt.alpha,
                    "ring parameter alpha = a^2, as a rational string");
    det->add_option("--b", det_opt.b, "anti-diagonal weight b, as a rational string");
    det->add_option("--method", det_opt.method, "evaluation method")
        ->check(CLI::IsMember({"closed", "blockdiag", "oracle", "pf-squared"}));
    det->add_option("--format", det_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    det->add_flag("--dump", det_opt.dump, "include the generated matrix");

    std::string table_family = "fibonacci";
    long table_kmax = 8;
    std::string table_format = "csv";
    CLI::App* table = app.add_subcommand(
        "table", "Pfaffian/determinant identity table for a named sequence");
    table->add_option("--family", table_family, "fibonacci, pell or jacobsthal");
    table->add_option("--kmax", table_kmax, "largest k to tabulate")
        ->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    long verify_kmax_oracle = 5;
    long verify_kmax_fast = 40;
    long verify_trials = 20;
    std::uint64_t verify_seed = 20210607;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the cross-method invariant suite with randomized parameters");
    verify->add_option("--kmax-oracle", verify_kmax_oracle,
                       "largest k for oracle-backed checks (at most 6)");
    verify->add_option("--kmax-fast", verify_kmax_fast,
                       "largest k for recurrence/closed-form checks");
    verify->add_option("--trials", verify_trials, "randomized parameter pairs");
    verify->add_option("--seed", verify_seed, "random seed (fixed seed, fixed transcript)");

    long bench_kmax = 1000;
    long bench_step = 100;
    std::string bench_alpha = "-1";
    std::string bench_b = "1";
    std::string bench_format = "csv";
    CLI::App* bench = app.add_subcommand(
        "bench", "time the O(k) paths (and oracles within their caps)");
    bench->add_option("--kmax", bench_kmax, "largest k to time");
    bench->add_option("--step", bench_step, "k increment");
    bench->add_option("--alpha,--a-squared", bench_alpha, "ring parameter alpha = a^2");
    bench->add_option("--b", bench_b, "anti-diagonal weight b");
    bench->add_option("--format", bench_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pf->parsed()) {
            return cmd_pf(pf_opt);
        }
        if (det->parsed()) {
            return cmd_det(det_opt);
        }
        if (table->parsed()) {
            return cmd_table(table_family, table_kmax, table_format);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_kmax_oracle, verify_kmax_fast, verify_trials,
                              verify_seed);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_kmax, bench_step, bench_alpha, bench_b, bench_format);
        }
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
