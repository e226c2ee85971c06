#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "logops/code_file.hpp"
#include "logops/codes.hpp"
#include "logops/errors.hpp"
#include "logops/oracle.hpp"
#include "logops/report_json.hpp"
#include "logops/sgsop.hpp"

namespace {

using namespace logops;

// Exit codes: 0 success, 1 failed checks / disagreement, 2 parse error,
// 3 validation error.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;

void print_report_text(const CodeReport& report) {
    std::cout << "kind: " << report.kind
              << (report.entanglement_assisted ? " (entanglement assisted)" : "") << "\n";
    std::cout << "n: " << report.n << "  k: " << report.k << "  c: " << report.c
              << "  i: " << report.i << "  m: " << report.m;
    if (report.l) std::cout << "  l: " << *report.l;
    if (report.p) std::cout << "  p: " << *report.p;
    std::cout << "\n";
    std::cout << "logical pairs: " << report.logical_pairs.size() << "\n";
    for (std::size_t i = 0; i < report.logical_pairs.size(); ++i) {
        std::cout << "  pair " << (i + 1) << ": " << report.logical_pairs[i].first.to_string()
                  << " | " << report.logical_pairs[i].second.to_string() << "\n";
    }
    std::cout << "isotropic generators: " << report.isotropic_gens.size() << "\n";
    for (std::size_t i = 0; i < report.isotropic_gens.size(); ++i) {
        std::cout << "  iso " << (i + 1) << ": " << report.isotropic_gens[i].to_string() << "\n";
    }
    std::cout << "formula checks:\n";
    for (const FormulaCheck& c : report.checks) {
        std::cout << "  [" << (c.agree ? "ok" : "FAIL") << "] " << c.name << ": " << c.lhs
                  << (c.agree ? " == " : " != ") << c.rhs << "\n";
    }
    std::cout << "all checks pass: " << (report.all_checks_pass() ? "yes" : "NO") << "\n";
}

int cmd_analyze(const std::string& path, const std::string& format) {
    const CodeFile file = load_code_file(path);
    const CodeReport report = analyze_code_file(file);
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        print_report_text(report);
    }
    return report.all_checks_pass() ? kExitOk : kExitCheckFailure;
}

int cmd_sgsop(const std::string& path, const std::string& format, bool reverse) {
    const CodeFile file = load_code_file(path);
    if (file.kind != CodeFile::Kind::Pauli) {
        throw ValidationError("sgsop expects a Pauli generator file");
    }
    const SymplecticDecomposition d = sgsop(file.generators);

    bool replay_matches = true;
    GeneratorSet replayed;
    if (reverse) {
        replayed = replay_inverse(d);
        replay_matches = replayed == file.generators;
    }

    if (format == "json") {
        nlohmann::ordered_json j = decomposition_to_json(d);
        if (reverse) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const PauliVector& g : replayed.gens) arr.push_back(g.to_string());
            j["replayed_input"] = arr;
            j["replay_matches_input"] = replay_matches;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d.pairs.size() << " pairs, " << d.isotropic.size() << " isotropic\n";
        for (std::size_t i = 0; i < d.pairs.size(); ++i) {
            std::cout << "pair " << (i + 1) << ": " << d.pairs[i].first.to_string() << " | "
                      << d.pairs[i].second.to_string() << "\n";
        }
        for (std::size_t i = 0; i < d.isotropic.size(); ++i) {
            std::cout << "iso " << (i + 1) << ": " << d.isotropic[i].to_string() << "\n";
        }
        std::cout << "log: " << d.log.size() << " steps\n";
        for (std::size_t i = 0; i < d.log.size(); ++i) {
            const SgsopStep& s = d.log[i];
            std::cout << "  step " << (i + 1) << ": ";
            switch (s.kind) {
                case SgsopStepKind::SetAside:
                    std::cout << "set-aside pos " << s.pos;
                    break;
                case SgsopStepKind::PairFound:
                    std::cout << "pair-found pos " << s.pos << " partner " << s.partner;
                    break;
                case SgsopStepKind::RowUpdate:
                    std::cout << "row-update pos " << s.pos << " pivots (" << s.pivot_a << ","
                              << s.pivot_b << ") exponents (" << s.exp_a << "," << s.exp_b
                              << ")";
                    break;
            }
            std::cout << "\n";
        }
        if (reverse) {
            std::cout << "replayed input:\n";
            for (const PauliVector& g : replayed.gens) {
                std::cout << "  " << g.to_string() << "\n";
            }
            std::cout << "replay matches input: " << (replay_matches ? "yes" : "NO") << "\n";
        }
    }
    return replay_matches ? kExitOk : kExitCheckFailure;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.empty() ? 0.0 : v[v.size() / 2];
}

// Runs f `repeats` times; returns the last result and the median wall time
// in microseconds.
std::pair<std::size_t, double> timed_median(const std::function<std::size_t()>& f,
                                            int repeats) {
    std::size_t result = 0;
    std::vector<double> times;
    times.reserve(repeats);
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        result = f();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    }
    return {result, median(std::move(times))};
}

int cmd_entanglement(const std::string& path, const std::string& method,
                     const std::string& format, int repeats) {
    const CodeFile file = load_code_file(path);

    std::function<std::size_t()> from_generators;
    std::function<std::size_t()> from_checks;
    std::string kind;
    if (file.kind == CodeFile::Kind::Css) {
        const CssCodePair code = build_css_code(file);
        kind = "css";
        from_generators = [code] { return css_ebits_from_generators(code); };
        from_checks = [code] { return css_ebits_from_checks(code); };
    } else if (file.kind == CodeFile::Kind::Crss) {
        const Gf4Code code = build_gf4_code(file);
        kind = "crss";
        from_generators = [code] { return crss_ebits_from_generators(code); };
        from_checks = [code] { return crss_ebits_from_checks(code); };
    } else {
        throw ValidationError("entanglement expects a css or crss file");
    }

    struct MethodResult {
        std::string name;
        std::size_t c;
        double median_us;
    };
    std::vector<MethodResult> results;
    if (method == "G" || method == "both") {
        const auto [c, us] = timed_median(from_generators, repeats);
        results.push_back({"G", c, us});
    }
    if (method == "H" || method == "both") {
        const auto [c, us] = timed_median(from_checks, repeats);
        results.push_back({"H", c, us});
    }

    bool agree = true;
    for (const MethodResult& r : results) agree = agree && r.c == results[0].c;

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchemaVersion;
        j["kind"] = kind;
        j["repeats"] = repeats;
        nlohmann::ordered_json methods;
        for (const MethodResult& r : results) {
            methods[r.name] = {{"c", r.c}, {"median_us", r.median_us}};
        }
        j["methods"] = methods;
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kind: " << kind << "\n";
        for (const MethodResult& r : results) {
            std::cout << "method " << r.name << ": c = " << r.c << ", median " << r.median_us
                      << " us over " << repeats << " runs\n";
        }
        if (results.size() > 1) {
            std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
        }
    }
    return agree ? kExitOk : kExitCheckFailure;
}

// Oracle suite over one parsed file: decomposition contracts for every
// generator set the file yields, plus the rank-formula cross-checks.
oracle::VerificationReport verify_file(const CodeFile& file) {
    oracle::VerificationReport report;

    const auto merge = [&report](const std::string& prefix,
                                 const oracle::VerificationReport& sub) {
        for (const oracle::VerificationCheck& c : sub.checks) {
            report.checks.push_back({prefix + c.name, c.expected, c.actual, c.pass});
        }
    };

    if (file.kind == CodeFile::Kind::Pauli) {
        const SymplecticDecomposition d = sgsop(file.generators);
        merge("generators: ", oracle::verify_decomposition(file.generators, d));
        if (file.normalizer) {
            const SymplecticDecomposition dn = sgsop(*file.normalizer);
            merge("normalizer: ", oracle::verify_decomposition(*file.normalizer, dn));
            long long violations = 0;
            for (const PauliVector& g : file.normalizer->gens) {
                for (const PauliVector& s : d.isotropic) {
                    violations += symplectic_product(g, s);
                }
            }
            report.add("normalizer commutes with isotropic part", 0, violations);
            report.add("p == i + 2l",
                       static_cast<long long>(d.isotropic.size() + 2 * dn.pairs.size()),
                       static_cast<long long>(file.normalizer->size()));
        }
        return report;
    }

    if (file.kind == CodeFile::Kind::Css) {
        const CssCodePair code = build_css_code(file);
        const GeneratorSet checks = css_check_matrix(code);
        const GeneratorSet normalizer = css_normalizer(code);
        const SymplecticDecomposition dc = sgsop(checks);
        const SymplecticDecomposition dn = sgsop(normalizer);
        merge("checks: ", oracle::verify_decomposition(checks, dc));
        merge("normalizer: ", oracle::verify_decomposition(normalizer, dn));
        const long long c = static_cast<long long>(dc.pairs.size());
        const long long target = static_cast<long long>(code.k1()) +
                                 static_cast<long long>(code.k2()) -
                                 static_cast<long long>(code.n) + c;
        report.add("naive rank(G1*G2^T) == k1+k2-n+c", target,
                   static_cast<long long>(
                       oracle::naive_rank(oracle::naive_mul(code.g1, transpose(code.g2)))));
        report.add("naive rank(H1*H2^T) == c", c,
                   static_cast<long long>(
                       oracle::naive_rank(oracle::naive_mul(code.h1, transpose(code.h2)))));
        report.add("normalizer pairs == k1+k2-n+c", target,
                   static_cast<long long>(dn.pairs.size()));
        return report;
    }

    const Gf4Code code = build_gf4_code(file);
    const GeneratorSet checks = crss_check_matrix(code);
    const GeneratorSet normalizer = crss_normalizer(code);
    const SymplecticDecomposition dc = sgsop(checks);
    const SymplecticDecomposition dn = sgsop(normalizer);
    merge("checks: ", oracle::verify_decomposition(checks, dc));
    merge("normalizer: ", oracle::verify_decomposition(normalizer, dn));
    const long long c = static_cast<long long>(dc.pairs.size());
    const long long target = 2 * static_cast<long long>(code.dim()) -
                             static_cast<long long>(code.n) + c;
    report.add("rank(G*G^dag) == 2k-n+c", target,
               static_cast<long long>(rank_gf4(conj_transpose_product(code.g, code.g))));
    report.add("rank(H*H^dag) == c", c,
               static_cast<long long>(rank_gf4(conj_transpose_product(code.h, code.h))));
    long long cross = 0;
    for (const PauliVector& a : normalizer.gens) {
        for (const PauliVector& b : checks.gens) {
            cross += symplectic_product(a, b);
        }
    }
    report.add("normalizer commutes with check generators", 0, cross);
    return report;
}

oracle::VerificationReport verify_random(std::uint64_t n, std::uint64_t trials,
                                         std::uint64_t seed) {
    oracle::VerificationReport report;
    report.seed = seed;

    long long decomposition_failures = 0;
    long long css_failures = 0;
    long long crss_failures = 0;
    long long stabilizer_failures = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        const std::size_t nt = 1 + rng() % n;
        switch (t % 4) {
            case 0: {
                const GeneratorSet gs = oracle::random_generator_set(nt, rng() % (2 * nt + 1), rng);
                if (!oracle::verify_decomposition(gs, sgsop(gs)).all_pass()) {
                    ++decomposition_failures;
                }
                break;
            }
            case 1: {
                const CssCodePair code =
                    oracle::random_css_code(nt, rng() % (nt + 1), rng() % (nt + 1), rng);
                if (!analyze_css(code).all_checks_pass()) ++css_failures;
                break;
            }
            case 2: {
                const Gf4Code code = oracle::random_gf4_code(nt, rng() % (nt + 1), rng);
                if (!analyze_crss(code).all_checks_pass()) ++crss_failures;
                break;
            }
            case 3:
            default: {
                const auto [gens, normalizer] =
                    oracle::random_stabilizer_with_normalizer(nt, 1 + rng() % (2 * nt), rng);
                if (!analyze_stabilizer(gens, normalizer).all_checks_pass()) {
                    ++stabilizer_failures;
                }
                break;
            }
        }
    }

    report.add("decomposition contract failures", 0, decomposition_failures);
    report.add("css formula failures", 0, css_failures);
    report.add("crss formula failures", 0, crss_failures);
    report.add("stabilizer analysis failures", 0, stabilizer_failures);
    return report;
}

int emit_verification(const oracle::VerificationReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << verification_to_json(report).dump(2) << "\n";
    } else {
        for (const oracle::VerificationCheck& c : report.checks) {
            std::cout << "[" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": expected "
                      << c.expected << ", actual " << c.actual << "\n";
        }
        std::cout << "seed: " << report.seed << "\n";
        std::cout << "all pass: " << (report.all_pass() ? "yes" : "NO") << "\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical operator extraction for stabilizer and entanglement-assisted "
                 "codes via symplectic Gram-Schmidt orthogonalization"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    std::string method = "both";
    bool reverse = false;
    int repeats = 5;
    std::vector<std::uint64_t> random_args;
    std::uint64_t seed_override = 0;
    bool seed_given = false;

    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a code file and report "
                                                      "logical operators and formula checks");
    analyze->add_option("file", path, "code description file")->required();
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* sgsop_cmd = app.add_subcommand("sgsop", "Decompose a Pauli generator file into "
                                                      "symplectic pairs and isotropic part");
    sgsop_cmd->add_option("file", path, "pauli generator file")->required();
    sgsop_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sgsop_cmd->add_flag("--reverse", reverse, "also replay the log backwards and print the "
                                              "reconstructed input");

    CLI::App* ent = app.add_subcommand("entanglement", "Compute the required ebits by the "
                                                       "competing rank formulas, with timings");
    ent->add_option("file", path, "css or crss code file")->required();
    ent->add_option("--method", method, "which formula to run")
        ->check(CLI::IsMember({"G", "H", "both"}));
    ent->add_option("--repeats", repeats, "timing repetitions (median is reported)")
        ->check(CLI::PositiveNumber);
    ent->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "Run the brute-force oracle suite on a "
                                                    "file or on random inputs");
    verify->add_option("file", path, "code description file");
    verify->add_option("--random", random_args,
                       "run random trials: max qubits, trial count, seed")
        ->expected(3);
    verify->add_option("--seed", seed_override, "override the random seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(path, format);
        if (sgsop_cmd->parsed()) return cmd_sgsop(path, format, reverse);
        if (ent->parsed()) return cmd_entanglement(path, method, format, repeats);
        if (verify->parsed()) {
            if (!random_args.empty()) {
                const std::uint64_t n = std::max<std::uint64_t>(1, random_args[0]);
                const std::uint64_t trials = random_args[1];
                const std::uint64_t seed = seed_given ? seed_override : random_args[2];
                return emit_verification(verify_random(n, trials, seed), format);
            }
            if (path.empty()) {
                std::cerr << "verify: provide a file or --random\n";
                return kExitValidationError;
            }
            return emit_verification(verify_file(load_code_file(path)), format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const ShapeError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    }
    return kExitOk;
}
