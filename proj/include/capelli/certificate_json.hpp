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

#ifndef CAPELLI_CERTIFICATE_JSON_HPP
#define CAPELLI_CERTIFICATE_JSON_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bignat.hpp"
#include "polytext.hpp"
#include "tower.hpp"

// Certificate document:
//   {p, base, steps: [{d, prime_tests: [{dprime, exponent, result}],
//                      fourth_power_test?: {exponent, result}}],
//    final_degree, final}
// Every number is a decimal string; results are residues written as PolyText.
namespace capelli {

using ordered_json = nlohmann::ordered_json;

inline ordered_json certificate_to_json(const TowerCertificate& cert) {
    ordered_json doc;
    doc["p"] = std::to_string(cert.p.value());
    doc["base"] = render(cert.base);
    ordered_json steps = ordered_json::array();
    for (const auto& step : cert.steps) {
        ordered_json s;
        s["d"] = std::to_string(step.d);
        ordered_json prime_tests = ordered_json::array();
        for (const auto& t : step.tests) {
            if (t.kind != ResidueTest::Kind::nth_power) continue;
            prime_tests.push_back({{"dprime", std::to_string(t.n)},
                                   {"exponent", to_decimal(t.exponent)},
                                   {"result", detail::render_fp_coeffs(t.value)}});
        }
        s["prime_tests"] = std::move(prime_tests);
        for (const auto& t : step.tests) {
            if (t.kind != ResidueTest::Kind::minus4_fourth_power) continue;
            s["fourth_power_test"] = {{"exponent", to_decimal(t.exponent)},
                                      {"result", detail::render_fp_coeffs(t.value)}};
        }
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    doc["final_degree"] = std::to_string(cert.final_degree);
    doc["final"] = render(cert.final_polynomial());
    return doc;
}

class CertificateFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses a certificate document. Structural problems raise
/// CertificateFormatError; whether the evidence is right is replay's job.
inline TowerCertificate certificate_from_json(const ordered_json& doc) {
    auto number = [](const ordered_json& node, const char* key) -> std::uint64_t {
        if (!node.contains(key) || !node.at(key).is_string()) {
            throw CertificateFormatError(std::string("certificate field '") + key + "' must be a decimal string");
        }
        const BigNat v = parse_decimal(node.at(key).get<std::string>());
        if (v > BigNat(UINT64_MAX)) throw CertificateFormatError(std::string("certificate field '") + key + "' too large");
        return static_cast<std::uint64_t>(v);
    };
    auto text = [](const ordered_json& node, const char* key) -> std::string {
        if (!node.contains(key) || !node.at(key).is_string()) {
            throw CertificateFormatError(std::string("certificate field '") + key + "' must be a string");
        }
        return node.at(key).get<std::string>();
    };
    try {
        const PrimeModulus p(number(doc, "p"));
        auto fp = std::make_shared<const PrimeField>(p);
        TowerCertificate cert{p, parse_poly(fp, text(doc, "base")), {}, number(doc, "final_degree")};
        if (!doc.contains("steps") || !doc.at("steps").is_array()) {
            throw CertificateFormatError("certificate field 'steps' must be an array");
        }
        for (const auto& s : doc.at("steps")) {
            TowerStep step;
            step.d = number(s, "d");
            step.reason = step.d == 1 ? Reason::degree_one : Reason::passes_all_residue_tests;
            if (!s.contains("prime_tests") || !s.at("prime_tests").is_array()) {
                throw CertificateFormatError("step field 'prime_tests' must be an array");
            }
            auto residue = [&](const ordered_json& node, ResidueTest::Kind kind, std::uint64_t n) {
                ResidueTest t;
                t.kind = kind;
                t.n = n;
                t.exponent = parse_decimal(text(node, "exponent"));
                t.value = parse_poly(fp, text(node, "result")).coeffs();
                t.is_power = t.value == std::vector<std::uint64_t>{1};
                return t;
            };
            for (const auto& t : s.at("prime_tests")) {
                step.tests.push_back(residue(t, ResidueTest::Kind::nth_power, number(t, "dprime")));
            }
            if (s.contains("fourth_power_test")) {
                step.tests.push_back(residue(s.at("fourth_power_test"), ResidueTest::Kind::minus4_fourth_power, 4));
            }
            cert.steps.push_back(std::move(step));
        }
        return cert;
    } catch (const CertificateFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace capelli

#endif
