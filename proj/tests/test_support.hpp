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

#ifndef CAPELLI_TESTS_TEST_SUPPORT_HPP
#define CAPELLI_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <capelli/capelli.hpp>

namespace capelli::testing {

inline std::shared_ptr<const PrimeField> fp(std::uint64_t p) {
    return std::make_shared<const PrimeField>(PrimeModulus(p));
}

inline Polynomial<PrimeField> poly(std::uint64_t p, const std::string& text) { return parse_poly(fp(p), text); }

inline std::shared_ptr<const ExtensionField> ext(std::uint64_t p, const std::string& modulus) {
    return ExtensionField::create(poly(p, modulus));
}

inline Polynomial<PrimeField> random_poly(std::mt19937_64& rng, const std::shared_ptr<const PrimeField>& field,
                                          std::size_t max_len) {
    std::vector<std::uint64_t> c(rng() % (max_len + 1));
    for (auto& v : c) v = rng() % field->characteristic();
    return Polynomial<PrimeField>(field, std::move(c));
}

/// Every field of order <= bound: F_p as F_p[x]/(x), and one F_{p^k} per
/// prime power, built from the first irreducible found by brute force.
struct SmallField {
    std::uint64_t p;
    std::uint64_t k;
    std::shared_ptr<const ExtensionField> field;
};

inline std::vector<SmallField> small_fields(std::uint64_t bound) {
    std::vector<SmallField> out;
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (std::uint64_t k = 1; q <= bound; ++k, q *= p) {
            out.push_back({p, k, k == 1 ? ExtensionField::prime_field(PrimeModulus(p))
                                        : ExtensionField::create(enumerate_irreducibles(PrimeModulus(p), k).front())});
        }
    }
    return out;
}

inline std::uint64_t field_size(const ExtensionField& f) { return static_cast<std::uint64_t>(f.order()); }

/// {c^n : c != 0} built by repeated multiplication only.
inline std::set<ExtensionField::Element> nth_powers_by_enumeration(const ExtensionField& f, std::uint64_t n) {
    std::set<ExtensionField::Element> out;
    const std::uint64_t q = field_size(f);
    for (std::uint64_t i = 1; i < q; ++i) {
        const auto c = f.element_at(i);
        auto acc = f.one();
        for (std::uint64_t j = 0; j < n; ++j) acc = f.mul(acc, c);
        out.insert(acc);
    }
    return out;
}

}  // namespace capelli::testing

#endif
