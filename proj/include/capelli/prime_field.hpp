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

#ifndef CAPELLI_PRIME_FIELD_HPP
#define CAPELLI_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignat.hpp"
#include "detail/fp_kernels.hpp"
#include "primes.hpp"
#include "work_counter.hpp"

namespace capelli {

/// A prime that fits in a machine word. Construction rejects composites.
class PrimeModulus {
   public:
    explicit PrimeModulus(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
    std::uint64_t value() const noexcept { return p_; }
    friend bool operator==(PrimeModulus, PrimeModulus) = default;

   private:
    std::uint64_t p_;
};

/// F_p with elements stored as reduced residues.
class PrimeField {
   public:
    using Element = std::uint64_t;

    explicit PrimeField(PrimeModulus p) : p_(p.value()) {}

    std::uint64_t characteristic() const noexcept { return p_; }
    PrimeModulus modulus() const { return PrimeModulus(p_); }
    std::size_t degree() const noexcept { return 1; }
    BigNat order() const { return BigNat(p_); }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1 % p_; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    bool equal(Element a, Element b) const noexcept { return a == b; }

    Element from_integer(std::int64_t v) const noexcept {
        if (v >= 0) return static_cast<Element>(v) % p_;
        const std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
        return r == 0 ? 0 : p_ - r;
    }

    Element add(Element a, Element b) const noexcept { return a >= p_ - b ? a - (p_ - b) : a + b; }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept {
        count_mults(1);
        return detail::mulmod64(a, b, p_);
    }
    Element square(Element a) const noexcept { return mul(a, a); }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        return detail::powmod64(a, p_ - 2, p_);
    }

    /// Bijection [0, p) -> F_p used for exhaustive enumeration.
    Element element_at(std::uint64_t index) const noexcept { return index % p_; }

    std::string render(Element a) const { return std::to_string(a); }

    // Fast paths picked up by Polynomial<PrimeField>.
    std::vector<Element> convolve(const std::vector<Element>& a, const std::vector<Element>& b) const {
        return detail::fp_convolve(p_, a, b);
    }
    std::vector<Element> square_poly(const std::vector<Element>& a) const { return detail::fp_square(p_, a); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint64_t p_;
};

}  // namespace capelli

#endif
