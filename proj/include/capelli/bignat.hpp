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

#ifndef CAPELLI_BIGNAT_HPP
#define CAPELLI_BIGNAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace capelli {

// Arbitrary-precision naturals. Group orders p^m - 1 outgrow every fixed-width
// integer long before the polynomials get large.
using BigNat = boost::multiprecision::cpp_int;

inline BigNat big_pow(std::uint64_t base, std::uint64_t exponent) {
    return boost::multiprecision::pow(BigNat(base), static_cast<unsigned>(exponent));
}

inline std::string to_decimal(const BigNat& n) { return n.str(); }

inline BigNat parse_decimal(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a decimal natural number: '" + text + "'");
    }
    return BigNat(text);
}

// Residue of a big number modulo a machine word.
inline std::uint64_t mod_word(const BigNat& n, std::uint64_t m) {
    return static_cast<std::uint64_t>(n % m);
}

inline std::size_t bit_length(const BigNat& n) {
    return n.is_zero() ? 0 : boost::multiprecision::msb(n) + 1;
}

inline bool bit_at(const BigNat& n, std::size_t i) {
    return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
}

}  // namespace capelli

#endif
