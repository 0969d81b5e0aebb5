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

#ifndef CAPELLI_POLYTEXT_HPP
#define CAPELLI_POLYTEXT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"
#include "prime_field.hpp"

// Human-readable polynomial text over F_p: descending powers, "*" between a
// coefficient and x optional on input, constant term last, e.g. "x^6+2*x^3+1".
namespace capelli {

class PolyParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string render_fp_coeffs(const std::vector<std::uint64_t>& coeffs, char var = 'x') {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::uint64_t c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string render(const Polynomial<PrimeField>& f) { return detail::render_fp_coeffs(f.coeffs()); }

/// Parses PolyText over F_p. Coefficients must already lie in [0, p); a
/// leading '-' on a term negates it mod p.
inline Polynomial<PrimeField> parse_poly(std::shared_ptr<const PrimeField> field, std::string_view text) {
    const std::uint64_t p = field->characteristic();
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw PolyParseError("empty polynomial text");

    auto fail = [&](const std::string& why) -> PolyParseError {
        return PolyParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    auto read_number = [&](std::size_t& pos) -> std::uint64_t {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw fail("expected a number at offset " + std::to_string(start));
        const std::string digits = s.substr(start, pos - start);
        if (digits.size() > 19) throw fail("number '" + digits + "' is too large");
        return std::stoull(digits);
    };

    std::map<std::uint64_t, std::uint64_t> terms;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        std::uint64_t coeff = 1;
        bool has_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = read_number(pos);
            has_coeff = true;
            if (coeff >= p) {
                throw fail("coefficient " + std::to_string(coeff) + " is not reduced mod " + std::to_string(p));
            }
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        std::uint64_t power = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = read_number(pos);
            }
        } else if (!has_coeff) {
            throw fail("expected a term at offset " + std::to_string(pos));
        } else if (pos > 0 && s[pos - 1] == '*') {
            throw fail("dangling '*'");
        }
        const std::uint64_t value = negative ? field->neg(coeff) : coeff;
        auto& slot = terms[power];
        slot = field->add(slot, value);
    }

    std::uint64_t top = terms.empty() ? 0 : terms.rbegin()->first;
    if (top > (1ULL << 28)) throw fail("degree " + std::to_string(top) + " is too large");
    std::vector<std::uint64_t> coeffs(top + 1, 0);
    for (const auto& [power, c] : terms) coeffs[power] = c;
    return Polynomial<PrimeField>(std::move(field), std::move(coeffs));
}

}  // namespace capelli

#endif
