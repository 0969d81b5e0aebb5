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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <capelli/capelli.hpp>
#include <json.hpp>

namespace {

using namespace capelli;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

CensusOptions wide(double cross_check = 0.1) {
    CensusOptions o;
    o.enumeration_bound = 2000;
    o.cross_check_fraction = cross_check;
    return o;
}

std::uint64_t census(std::uint64_t p, std::uint64_t k, std::uint64_t d, double cross_check = 0.1) {
    return exhaustive_census(PrimeModulus(p), k, d, Convention::units_only, wide(cross_check)).irreducible_count;
}

std::uint64_t ipow(std::uint64_t p, std::uint64_t k) {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < k; ++i) q *= p;
    return q;
}

Outcome criterion_oracle_equivalence() {
    Outcome o;
    std::uint64_t checked = 0;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t m = 1; m <= 3 && ipow(p, m) <= 343; ++m) {
            for (const auto& b : enumerate_irreducibles(PrimeModulus(p), m)) {
                for (std::uint64_t d = 2; d <= 12; ++d) {
                    const bool criterion = decide_b_xd(b, d).irreducible;
                    const bool oracle = rabin_test(compose_power(b, d)).irreducible;
                    ++checked;
                    if (criterion != oracle) {
                        o.pass = false;
                        o.detail = "mismatch p=" + std::to_string(p) + " b=" + render(b) + " d=" + std::to_string(d);
                        return o;
                    }
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " (b, d) pairs agree";
    return o;
}

Outcome quadratic_half() {
    Outcome o;
    const std::pair<std::uint64_t, std::uint64_t> fields[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}};
    for (auto [p, k] : fields) {
        const std::uint64_t q = ipow(p, k);
        if (census(p, k, 2) != (q - 1) / 2) {
            o.pass = false;
            o.detail += "q=" + std::to_string(q) + " ";
        }
    }
    if (o.pass) o.detail = "7 fields";
    return o;
}

Outcome prime_d_fraction() {
    Outcome o;
    const std::pair<std::uint64_t, std::uint64_t> cases[] = {{7, 3}, {13, 3}, {11, 5}, {31, 5}};
    for (auto [q, d] : cases) {
        const std::uint64_t expected = (q - 1) / d * (d - 1);
        const std::uint64_t got = census(q, 1, d);
        if (got != expected) {
            o.pass = false;
            o.detail += "(q=" + std::to_string(q) + ",d=" + std::to_string(d) + "): " + std::to_string(got) + " vs " +
                        std::to_string(expected) + " ";
        }
    }
    if (o.pass) o.detail = "4 cases";
    return o;
}

Outcome four_divides_zero() {
    Outcome o;
    std::uint64_t cases = 0;
    for (std::uint64_t p : {3, 7, 11}) {
        for (std::uint64_t k : {1, 3}) {
            if (ipow(p, k) > 2000) continue;
            for (std::uint64_t d : {4, 8, 12}) {
                ++cases;
                if (census(p, k, d) != 0) {
                    o.pass = false;
                    o.detail += "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(d) + ") ";
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome coprime_prime_zero() {
    Outcome o;
    std::uint64_t cases = 0;
    for (std::uint64_t p : {3, 7, 11}) {
        for (std::uint64_t k : {1, 3}) {
            const std::uint64_t q = ipow(p, k);
            if (q > 2000) continue;
            for (std::uint64_t d = 2; d <= 12; ++d) {
                bool some_fails = false;
                for (std::uint64_t r : distinct_prime_divisors(d)) some_fails = some_fails || (q - 1) % r != 0;
                if (!some_fails) continue;
                ++cases;
                if (census(p, k, d) != 0) {
                    o.pass = false;
                    o.detail += "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(d) + ") ";
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome closing_facts() {
    Outcome o;
    const std::pair<std::uint64_t, std::uint64_t> quartic[] = {{5, 1}, {13, 1}, {3, 2}};
    for (auto [p, k] : quartic) {
        const std::uint64_t q = ipow(p, k);
        if (2 * census(p, k, 4) != q - 1) {
            o.pass = false;
            o.detail += "d=4 q=" + std::to_string(q) + " ";
        }
    }
    const Rational floor = union_lower_bound(6);
    for (std::uint64_t q : {7, 13}) {
        const Rational fraction(census(q, 1, 6), q - 1);
        if (fraction != Rational(1, 3) || fraction < floor) {
            o.pass = false;
            o.detail += "d=6 q=" + std::to_string(q) + " ";
        }
    }
    if (o.pass) o.detail = "d=4 -> 1/2 (3 fields), d=6 -> 1/3 >= " + rational_to_string(floor) + " (2 fields)";
    return o;
}

Outcome exact_formula() {
    Outcome o;
    std::uint64_t cases = 0;
    for (std::uint64_t p : primes_up_to(2000)) {
        for (std::uint64_t k = 1; ipow(p, k) <= 2000; ++k) {
            const std::uint64_t q = ipow(p, k);
            for (std::uint64_t d = 1; d <= 12; ++d) {
                ++cases;
                const Rational expected = exact_probability(PrimeModulus(p), k, d) * Rational(q - 1);
                if (expected != Rational(census(p, k, d, 0.01))) {
                    o.pass = false;
                    o.detail += "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(d) + ") ";
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " (p, k, d) triples";
    return o;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CAPELLI_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome tower_generation() {
    Outcome o;
    const auto cert_path = std::filesystem::temp_directory_path() / "capelli_acceptance_cert.json";
    const auto start = std::chrono::steady_clock::now();
    const int generate_code = run_cli("generate -p 2 --target-degree 1024 --cert " + cert_path.string());
    const int replay_code = generate_code == 0 ? run_cli("replay --cert " + cert_path.string()) : -1;
    if (generate_code != 0 || replay_code != 0) {
        o.pass = false;
        o.detail = "generate exit " + std::to_string(generate_code) + ", replay exit " + std::to_string(replay_code);
        return o;
    }
    std::ifstream in(cert_path);
    const auto cert = certificate_from_json(nlohmann::ordered_json::parse(in));
    const auto f = cert.final_polynomial();
    const bool oracle = rabin_test(f).irreducible;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::filesystem::remove(cert_path);
    o.pass = oracle && f.degree() >= 1024 && seconds < 60.0;
    std::ostringstream ss;
    ss << "degree " << f.degree() << ", " << f.term_count() << " terms, rabin " << (oracle ? "irreducible" : "REDUCIBLE")
       << ", " << seconds << " s";
    o.detail = ss.str();
    return o;
}

Outcome criterion_cheaper_than_rabin() {
    Outcome o;
    const auto rows = bench_tower(parse_poly(std::make_shared<const PrimeField>(PrimeModulus(2)), "x^2+x+1"), {3, 3, 3});
    if (rows.size() != 3 || !rows.back().accepted || rows.back().degree_after != 54) {
        o.pass = false;
        o.detail = "tower did not reach degree 54";
        return o;
    }
    const auto& last = rows.back();
    o.pass = last.criterion_mults < last.oracle_mults;
    o.detail = "criterion " + std::to_string(last.criterion_mults) + " vs rabin " + std::to_string(last.oracle_mults) +
               " field mults";
    return o;
}

Outcome monte_carlo_calibration() {
    Outcome o;
    const double truth = 2.0 / 3.0;
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto r = monte_carlo_estimate(PrimeModulus(7), 1, 3, 10'000, seed);
        within += std::abs(rational_to_double(r.estimate) - truth) <= 3.0 * r.stderr_estimate ? 1 : 0;
    }
    o.pass = within >= 99;
    o.detail = std::to_string(within) + "/100 within 3 stderr";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"criterion-oracle equivalence", criterion_oracle_equivalence},
        {"d=2 census is (q-1)/2", quadratic_half},
        {"prime d census is (1-1/d)(q-1)", prime_d_fraction},
        {"4|d, p=3 mod 4, k odd gives zero", four_divides_zero},
        {"prime d' not dividing q-1 gives zero", coprime_prime_zero},
        {"closing facts d=4 and d=6", closing_facts},
        {"exact formula matches census", exact_formula},
        {"tower generation to degree 1024", tower_generation},
        {"criterion cheaper than rabin", criterion_cheaper_than_rabin},
        {"monte carlo calibration", monte_carlo_calibration},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
