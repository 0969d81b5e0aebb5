/*
   Copyright 2026 The capelli Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <capelli/capelli.hpp>

namespace {

using capelli::ordered_json;
using capelli::Polynomial;
using capelli::PrimeField;

constexpr int kIrreducible = 0;
constexpr int kReducible = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

Polynomial<PrimeField> read_poly(const std::shared_ptr<const PrimeField>& field, const std::string& text,
                                 const std::string& coeffs_json) {
    if (!coeffs_json.empty()) {
        const auto doc = nlohmann::json::parse(coeffs_json, nullptr, false);
        if (doc.is_discarded() || !doc.is_array()) throw UsageError("--coeffs must be a JSON array of integers");
        std::vector<std::uint64_t> coeffs;
        for (const auto& c : doc) {
            if (!c.is_number_unsigned()) throw UsageError("--coeffs entries must be non-negative integers");
            const auto v = c.get<std::uint64_t>();
            if (v >= field->characteristic()) {
                throw UsageError("coefficient " + std::to_string(v) + " is not reduced mod " +
                                 std::to_string(field->characteristic()));
            }
            coeffs.push_back(v);
        }
        return Polynomial<PrimeField>(field, std::move(coeffs));
    }
    return capelli::parse_poly(field, text);
}

ordered_json residue_tests_json(const std::vector<capelli::ResidueTest>& tests) {
    ordered_json out = ordered_json::array();
    for (const auto& t : tests) {
        out.push_back({{"kind", t.kind == capelli::ResidueTest::Kind::nth_power ? "nth-power" : "minus4-fourth-power"},
                       {"n", std::to_string(t.n)},
                       {"exponent", capelli::to_decimal(t.exponent)},
                       {"result", capelli::detail::render_fp_coeffs(t.value)},
                       {"is_power", t.is_power}});
    }
    return out;
}

ordered_json evidence_json(const capelli::Verdict& v) {
    ordered_json e;
    e["dprime"] = v.dprime ? ordered_json(std::to_string(*v.dprime)) : ordered_json(nullptr);
    e["tests"] = residue_tests_json(v.tests);
    return e;
}

void print_tests_text(const std::vector<capelli::ResidueTest>& tests, const std::string& indent) {
    for (const auto& t : tests) {
        const bool nth = t.kind == capelli::ResidueTest::Kind::nth_power;
        std::cout << indent << (nth ? "d'=" + std::to_string(t.n) + ": alpha^" : "-4*alpha: (-4*alpha)^")
                  << capelli::to_decimal(t.exponent) << " = " << capelli::detail::render_fp_coeffs(t.value) << " -> "
                  << (t.is_power ? "" : "not ") << (nth ? "a d'-th power" : "a fourth power") << "\n";
    }
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("bad schedule entry '" + item + "'");
        }
        const std::uint64_t d = std::stoull(item);
        if (d == 0) throw UsageError("schedule entries must be at least 1");
        out.push_back(d);
    }
    if (out.empty()) throw UsageError("schedule is empty");
    return out;
}

Polynomial<PrimeField> default_start(capelli::PrimeModulus p) {
    capelli::IrreducibleStream stream(p, 2);
    return *stream.begin();
}

// ---------------------------------------------------------------- test

struct TestArgs {
    std::uint64_t p = 0;
    std::string poly;
    std::string coeffs;
    std::uint64_t d = 0;
    bool oracle = false;
    bool json = false;
    bool timings = false;
};

int run_test(const TestArgs& args) {
    const capelli::PrimeModulus p(args.p);
    auto field = std::make_shared<const PrimeField>(p);
    const auto b = read_poly(field, args.poly, args.coeffs);
    if (args.d == 0) throw UsageError("-d must be at least 1");
    if (b.is_zero() || b.degree() < 1) throw UsageError("the polynomial must have degree at least 1");
    if (!b.is_monic()) throw UsageError("the polynomial " + capelli::render(b) + " is not monic");
    if (!capelli::rabin_test(b).irreducible) {
        throw UsageError("the base polynomial " + capelli::render(b) + " is itself reducible over F_" +
                         std::to_string(args.p) + "; b(x^d) is trivially reducible");
    }

    auto t0 = std::chrono::steady_clock::now();
    capelli::ScopedWorkCount criterion_work;
    const capelli::Verdict v = capelli::decide_b_xd(b, args.d, true);
    const std::uint64_t criterion_mults = criterion_work.elapsed();
    const double criterion_seconds = seconds_since(t0);

    std::optional<bool> oracle;
    std::uint64_t oracle_mults = 0;
    double oracle_seconds = 0.0;
    if (args.oracle) {
        const auto composed = capelli::compose_power(b, args.d);
        t0 = std::chrono::steady_clock::now();
        capelli::ScopedWorkCount work;
        oracle = capelli::rabin_test(composed).irreducible;
        oracle_mults = work.elapsed();
        oracle_seconds = seconds_since(t0);
    }

    if (args.json) {
        ordered_json r;
        r["p"] = std::to_string(args.p);
        r["input"] = capelli::render(b);
        r["d"] = std::to_string(args.d);
        r["verdict"] = v.irreducible ? "irreducible" : "reducible";
        r["reason"] = std::string(capelli::to_string(v.reason));
        r["evidence"] = evidence_json(v);
        r["work"] = {{"criterion_mults", std::to_string(criterion_mults)}};
        if (oracle) {
            r["work"]["oracle_mults"] = std::to_string(oracle_mults);
            r["oracle"] = {{"verdict", *oracle ? "irreducible" : "reducible"}, {"agrees", *oracle == v.irreducible}};
        }
        if (args.timings) {
            r["timings"] = {{"criterion_seconds", criterion_seconds}};
            if (oracle) r["timings"]["oracle_seconds"] = oracle_seconds;
        }
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "b(x) = " << capelli::render(b) << " over F_" << args.p << ", d = " << args.d << "\n"
                  << "b(x^d) is " << (v.irreducible ? "irreducible" : "reducible") << " ("
                  << capelli::to_string(v.reason) << ")\n";
        if (v.dprime) std::cout << "  deciding prime: " << *v.dprime << "\n";
        print_tests_text(v.tests, "  ");
        std::cout << "  criterion work: " << criterion_mults << " F_p multiplications\n";
        if (oracle) {
            std::cout << "oracle (Rabin on b(x^d)): " << (*oracle ? "irreducible" : "reducible") << ", "
                      << (*oracle == v.irreducible ? "agrees" : "DISAGREES") << "\n"
                      << "  oracle work: " << oracle_mults << " F_p multiplications\n";
        }
        if (args.timings) {
            std::cout << "  criterion time: " << fixed(criterion_seconds) << " s\n";
            if (oracle) std::cout << "  oracle time: " << fixed(oracle_seconds) << " s\n";
        }
    }
    if (oracle && *oracle != v.irreducible) {
        std::cerr << "error: criterion and oracle disagree\n";
        return kUsageError;
    }
    return v.irreducible ? kIrreducible : kReducible;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::uint64_t p = 0;
    std::uint64_t target = 0;
    std::string schedule;
    std::string start;
    std::string cert_path;
    std::uint64_t max_d = 1000;
    bool paranoid = false;
    bool json = false;
};

void write_certificate(const std::string& path, const capelli::TowerCertificate& cert) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write certificate to " + path);
    out << capelli::certificate_to_json(cert).dump(2) << "\n";
}

int run_generate(const GenerateArgs& args) {
    const capelli::PrimeModulus p(args.p);
    auto field = std::make_shared<const PrimeField>(p);
    const auto b0 = args.start.empty() ? default_start(p) : capelli::parse_poly(field, args.start);
    if ((args.target == 0) == args.schedule.empty()) {
        throw UsageError("give exactly one of --target-degree and --schedule");
    }
    capelli::TowerOptions options;
    options.paranoid = args.paranoid;
    options.max_candidate_d = args.max_d;
    try {
        const auto cert = args.schedule.empty() ? capelli::grow_tower_to_degree(b0, args.target, options)
                                                : capelli::grow_tower(b0, parse_schedule(args.schedule), options);
        if (!args.cert_path.empty()) write_certificate(args.cert_path, cert);
        const auto final_poly = cert.final_polynomial();
        if (args.json) {
            ordered_json r;
            r["p"] = std::to_string(args.p);
            r["input"] = capelli::render(b0);
            r["verdict"] = "irreducible";
            r["final"] = capelli::render(final_poly);
            r["final_degree"] = std::to_string(cert.final_degree);
            r["certificate"] = capelli::certificate_to_json(cert);
            std::cout << r.dump(2) << "\n";
        } else {
            std::cout << "start: " << capelli::render(b0) << " over F_" << args.p << "\n";
            std::uint64_t degree = static_cast<std::uint64_t>(b0.degree());
            for (const auto& step : cert.steps) {
                degree *= step.d;
                std::cout << "  d = " << step.d << " -> degree " << degree << " (" << capelli::to_string(step.reason)
                          << ")\n";
            }
            std::cout << "final: " << capelli::render(final_poly) << "\n"
                      << "degree: " << cert.final_degree << ", terms: " << final_poly.term_count() << "\n";
            if (!args.cert_path.empty()) std::cout << "certificate: " << args.cert_path << "\n";
        }
        return 0;
    } catch (const capelli::TowerError& e) {
        if (args.json) {
            ordered_json r;
            r["p"] = std::to_string(args.p);
            r["input"] = capelli::render(b0);
            r["verdict"] = "rejected";
            r["error"] = e.what();
            if (e.rejected_d()) r["d"] = std::to_string(*e.rejected_d());
            if (e.verdict()) {
                r["reason"] = std::string(capelli::to_string(e.verdict()->reason));
                r["evidence"] = evidence_json(*e.verdict());
            }
            r["certificate"] = capelli::certificate_to_json(e.partial());
            std::cout << r.dump(2) << "\n";
        } else {
            std::cout << "tower stopped: " << e.what() << "\n";
            if (e.verdict()) {
                if (e.verdict()->dprime) std::cout << "  deciding prime: " << *e.verdict()->dprime << "\n";
                print_tests_text(e.verdict()->tests, "  ");
            }
            std::cout << "reached: " << capelli::render(e.partial().final_polynomial()) << " (degree "
                      << e.partial().final_degree << ")\n";
        }
        return kReducible;
    }
}

// ---------------------------------------------------------------- replay

int run_replay(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read certificate " + path);
    const auto doc = ordered_json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw UsageError("certificate " + path + " is not valid JSON");
    const auto cert = capelli::certificate_from_json(doc);
    const auto report = capelli::replay_certificate(cert);
    if (json) {
        ordered_json r;
        r["certificate"] = path;
        r["replay"] = report.ok ? "ok" : "failed";
        r["message"] = report.message;
        r["final_degree"] = std::to_string(cert.final_degree);
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "replay " << (report.ok ? "ok" : "FAILED") << ": " << report.message << "\n";
    }
    return report.ok ? 0 : kReducible;
}

// ---------------------------------------------------------------- prob

struct ProbArgs {
    std::uint64_t p = 0;
    std::uint64_t k = 1;
    std::uint64_t d = 0;
    bool exact = false;
    bool bound = false;
    bool census = false;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    bool include_zero = false;
    bool json = false;
};

int run_prob(const ProbArgs& args) {
    const int modes = int(args.exact) + int(args.bound) + int(args.census) + int(args.sample > 0);
    if (modes != 1) throw UsageError("choose exactly one of --exact, --bound, --census, --sample N");
    if (args.d == 0) throw UsageError("-d must be at least 1");
    if (args.k == 0) throw UsageError("-k must be at least 1");
    const auto convention =
        args.include_zero ? capelli::Convention::include_zero : capelli::Convention::units_only;

    ordered_json r;
    std::ostringstream text;
    if (args.bound) {
        const auto b = capelli::union_lower_bound(args.d);
        r["d"] = std::to_string(args.d);
        r["quantity"] = "union-lower-bound";
        r["value"] = capelli::rational_to_string(b);
        r["decimal"] = fixed(capelli::rational_to_double(b));
        text << "union lower bound for d = " << args.d << ": " << capelli::rational_to_string(b) << " ~ "
             << fixed(capelli::rational_to_double(b)) << "\n";
    } else {
        if (args.p == 0) throw UsageError("-p is required");
        const capelli::PrimeModulus p(args.p);
        r["p"] = std::to_string(args.p);
        r["k"] = std::to_string(args.k);
        r["d"] = std::to_string(args.d);
        r["convention"] = capelli::to_string(convention);
        const std::string where = "x^" + std::to_string(args.d) + " - a over F_" + std::to_string(args.p) + "^" +
                                  std::to_string(args.k);
        if (args.exact) {
            const auto e = capelli::exact_probability(p, args.k, args.d, convention);
            r["quantity"] = "exact-probability";
            r["star_condition"] = capelli::star_condition(p, args.k, args.d);
            r["value"] = capelli::rational_to_string(e);
            r["decimal"] = fixed(capelli::rational_to_double(e));
            text << "P(" << where << " irreducible) = " << capelli::rational_to_string(e) << " ~ "
                 << fixed(capelli::rational_to_double(e)) << "  [" << capelli::to_string(convention) << "]\n";
        } else if (args.census) {
            capelli::CensusOptions options;
            options.seed = args.seed;
            const auto c = capelli::exhaustive_census(p, args.k, args.d, convention, options);
            r["quantity"] = "census";
            r["q"] = capelli::to_decimal(c.q);
            r["irreducible_count"] = std::to_string(c.irreducible_count);
            r["total"] = std::to_string(c.total);
            r["value"] = std::to_string(c.irreducible_count) + "/" + std::to_string(c.total);
            r["cross_checked"] = std::to_string(c.cross_checked);
            text << where << ": " << c.irreducible_count << "/" << c.total << " irreducible  ["
                 << capelli::to_string(convention) << ", " << c.cross_checked << " cross-checked by Rabin]\n";
        } else {
            if (args.include_zero) throw UsageError("--include-zero does not apply to --sample");
            const auto mc = capelli::monte_carlo_estimate(p, args.k, args.d, args.sample, args.seed);
            r["quantity"] = "monte-carlo";
            r["trials"] = std::to_string(mc.trials);
            r["seed"] = std::to_string(args.seed);
            r["successes"] = std::to_string(mc.successes);
            r["value"] = capelli::rational_to_string(mc.estimate);
            r["decimal"] = fixed(capelli::rational_to_double(mc.estimate));
            r["stderr"] = fixed(mc.stderr_estimate);
            text << where << ": " << mc.successes << "/" << mc.trials << " = "
                 << fixed(capelli::rational_to_double(mc.estimate)) << " +- " << fixed(mc.stderr_estimate)
                 << "  [seed " << args.seed << "]\n";
        }
    }
    std::cout << (args.json ? r.dump(2) + "\n" : text.str());
    return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::uint64_t p = 0;
    std::string start;
    std::string schedule;
    bool json = false;
    bool timings = false;
};

int run_bench(const BenchArgs& args) {
    const capelli::PrimeModulus p(args.p);
    auto field = std::make_shared<const PrimeField>(p);
    const auto b0 = args.start.empty() ? default_start(p) : capelli::parse_poly(field, args.start);
    if (!b0.is_monic() || b0.degree() < 1 || !capelli::rabin_test(b0).irreducible) {
        throw UsageError("start polynomial must be monic irreducible of degree >= 1");
    }
    const auto rows = capelli::bench_tower(b0, parse_schedule(args.schedule));
    const bool rejected = !rows.empty() && !rows.back().accepted;

    if (args.json) {
        ordered_json r;
        r["p"] = std::to_string(args.p);
        r["input"] = capelli::render(b0);
        ordered_json table = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["d"] = std::to_string(row.d);
            j["degree"] = std::to_string(row.degree_after);
            j["verdict"] = row.accepted ? "irreducible" : "reducible";
            j["reason"] = std::string(capelli::to_string(row.reason));
            j["criterion_mults"] = std::to_string(row.criterion_mults);
            j["oracle_mults"] = row.accepted ? ordered_json(std::to_string(row.oracle_mults)) : ordered_json(nullptr);
            j["work_ratio"] = row.accepted ? ordered_json(fixed(row.work_ratio(), 3)) : ordered_json(nullptr);
            if (args.timings) {
                j["timings"] = {{"criterion_seconds", row.criterion_seconds}, {"oracle_seconds", row.oracle_seconds}};
            }
            table.push_back(std::move(j));
        }
        r["steps"] = std::move(table);
        r["completed"] = !rejected;
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "start " << capelli::render(b0) << " over F_" << args.p << "\n";
        std::cout << std::left << std::setw(6) << "d" << std::setw(10) << "degree" << std::setw(14) << "verdict"
                  << std::setw(16) << "criterion_mul" << std::setw(16) << "oracle_mul" << std::setw(10) << "ratio"
                  << std::setw(14) << "criterion_s" << "oracle_s\n";
        for (const auto& row : rows) {
            std::cout << std::left << std::setw(6) << row.d << std::setw(10) << row.degree_after << std::setw(14)
                      << (row.accepted ? "irreducible" : "reducible") << std::setw(16) << row.criterion_mults
                      << std::setw(16) << (row.accepted ? std::to_string(row.oracle_mults) : "-") << std::setw(10)
                      << (row.accepted ? fixed(row.work_ratio(), 2) : "-") << std::setw(14)
                      << fixed(row.criterion_seconds) << (row.accepted ? fixed(row.oracle_seconds) : "-") << "\n";
        }
        if (rejected) {
            std::cout << "stopped: d = " << rows.back().d << " rejected (" << capelli::to_string(rows.back().reason)
                      << ")\n";
        }
    }
    return rejected ? kReducible : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducibility of b(x^d) over prime fields via power-residue tests"};
    app.require_subcommand(1);

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "Decide whether b(x^d) is irreducible over F_p");
    test->add_option("-p", test_args.p, "Prime characteristic")->required();
    auto* poly_opt = test->add_option("--poly", test_args.poly, "b(x) as text, e.g. \"x^2+x+1\"");
    auto* coeffs_opt = test->add_option("--coeffs", test_args.coeffs, "b(x) as a JSON array, index = power");
    poly_opt->excludes(coeffs_opt);
    test->add_option("-d", test_args.d, "Exponent d >= 1")->required();
    test->add_flag("--oracle", test_args.oracle, "Also run Rabin's test on b(x^d)");
    test->add_flag("--json", test_args.json, "Machine-readable output");
    test->add_flag("--timings", test_args.timings, "Report wall-clock timings");

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "Grow a certified sparse irreducible by repeated b <- b(x^d)");
    gen->add_option("-p", gen_args.p, "Prime characteristic")->required();
    auto* target_opt = gen->add_option("--target-degree", gen_args.target, "Grow until the degree reaches this");
    auto* sched_opt = gen->add_option("--schedule", gen_args.schedule, "Comma-separated exponents, e.g. 3,3");
    target_opt->excludes(sched_opt);
    gen->add_option("--start", gen_args.start, "Starting irreducible b0 (default: first monic quadratic)");
    gen->add_option("--cert", gen_args.cert_path, "Write the certificate JSON to this file");
    gen->add_option("--max-d", gen_args.max_d, "Largest prime d tried by --target-degree")->capture_default_str();
    gen->add_flag("--paranoid", gen_args.paranoid, "Re-check every step with Rabin's test");
    gen->add_flag("--json", gen_args.json, "Machine-readable output");

    std::string replay_path;
    bool replay_json = false;
    auto* replay = app.add_subcommand("replay", "Re-verify a tower certificate");
    replay->add_option("--cert", replay_path, "Certificate JSON file")->required();
    replay->add_flag("--json", replay_json, "Machine-readable output");

    ProbArgs prob_args;
    auto* prob = app.add_subcommand("prob", "Probability that x^d - a is irreducible over F_{p^k}");
    prob->add_option("-p", prob_args.p, "Prime characteristic");
    prob->add_option("-k", prob_args.k, "Extension degree")->capture_default_str();
    prob->add_option("-d", prob_args.d, "Exponent d")->required();
    prob->add_flag("--exact", prob_args.exact, "Exact probability");
    prob->add_flag("--bound", prob_args.bound, "Union lower bound 1 - sum 1/d'");
    prob->add_flag("--census", prob_args.census, "Count over every a in the field");
    prob->add_option("--sample", prob_args.sample, "Monte Carlo with N trials");
    prob->add_option("--seed", prob_args.seed, "Seed for all randomness")->capture_default_str();
    prob->add_flag("--include-zero", prob_args.include_zero, "Draw a from all of F_q instead of F_q^*");
    prob->add_flag("--json", prob_args.json, "Machine-readable output");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Criterion cost versus Rabin's test, per tower step");
    bench->add_option("-p", bench_args.p, "Prime characteristic")->required();
    bench->add_option("--start", bench_args.start, "Starting irreducible b0");
    bench->add_option("--schedule", bench_args.schedule, "Comma-separated exponents")->required();
    bench->add_flag("--json", bench_args.json, "Machine-readable output");
    bench->add_flag("--timings", bench_args.timings, "Include wall-clock timings in JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*test) {
            if (test_args.poly.empty() && test_args.coeffs.empty()) throw UsageError("give --poly or --coeffs");
            return run_test(test_args);
        }
        if (*gen) return run_generate(gen_args);
        if (*replay) return run_replay(replay_path, replay_json);
        if (*prob) return run_prob(prob_args);
        if (*bench) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
