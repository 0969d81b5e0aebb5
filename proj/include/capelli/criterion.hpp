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

#ifndef CAPELLI_CRITERION_HPP
#define CAPELLI_CRITERION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>


#include "bignat.hpp"
#include "extension_field.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "polytext.hpp"
#include "prime_field.hpp"
#include "primes.hpp"

// Deciding irreducibility of x^d - a over F_q by power-residue tests, and of
// b(x^d) over F_p by moving to x^d - alpha over F_p[x]/(b).
namespace capelli {

enum class Reason {
    degree_one,
    prime_divisor_coprime,
    char_divides_d,
    four_divides_d_p3mod4_k_odd,
    alpha_is_dprime_power,
    minus4alpha_is_fourth_power,
    passes_all_residue_tests,
};

inline std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::degree_one: return "degree-one";
        case Reason::prime_divisor_coprime: return "prime-divisor-coprime";
        case Reason::char_divides_d: return "char-divides-d";
        case Reason::four_divides_d_p3mod4_k_odd: return "four-divides-d-p3mod4-k-odd";
        case Reason::alpha_is_dprime_power: return "alpha-is-dprime-power";
        case Reason::minus4alpha_is_fourth_power: return "minus4alpha-is-fourth-power";
        case Reason::passes_all_residue_tests: return "passes-all-residue-tests";
    }
    return "unknown";
}

inline bool implies_irreducible(Reason r) {
    return r == Reason::degree_one || r == Reason::passes_all_residue_tests;
}

/// One exponentiation: value = a^exponent with exponent = (q-1)/gcd(n, q-1).
/// The tested element is an n-th power iff value == 1.
struct ResidueTest {
    enum class Kind { nth_power, minus4_fourth_power };
    Kind kind = Kind::nth_power;
    std::uint64_t n = 0;
    BigNat exponent;
    ExtensionField::Element value;
    bool is_power = false;

    friend bool operator==(const ResidueTest&, const ResidueTest&) = default;
};

struct Verdict {
    bool irreducible = false;
    Reason reason = Reason::passes_all_residue_tests;
    /// The prime d' that decided a reducible outcome, if any.
    std::optional<std::uint64_t> dprime;
    /// Every residue test evaluated, in evaluation order; the last one decided.
    std::vector<ResidueTest> tests;
};

class ZeroElementError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// a^((q-1)/gcd(n,q-1)) together with its verdict.
inline ResidueTest nth_power_test(const ExtElement& a, std::uint64_t n) {
    if (a.is_zero()) throw ZeroElementError("power-residue test of zero");
    if (n == 0) throw std::invalid_argument("power-residue test needs n >= 1");
    const BigNat& group_order = a.field().order_minus_one();
    const BigNat g = boost::multiprecision::gcd(BigNat(n), group_order);
    ResidueTest t;
    t.kind = ResidueTest::Kind::nth_power;
    t.n = n;
    t.exponent = group_order / g;
    t.value = a.field().pow(a.value(), t.exponent);
    t.is_power = t.value == a.field().one();
    return t;
}

/// True iff a = c^n for some c in the field. The multiplicative group is
/// cyclic of order q-1, so this is a^((q-1)/gcd(n,q-1)) == 1.
inline bool is_nth_power(const ExtElement& a, std::uint64_t n) { return nth_power_test(a, n).is_power; }

inline ResidueTest minus4_fourth_power_test(const ExtElement& a) {
    if (a.field().characteristic() == 2) {
        throw std::logic_error("the -4a fourth-power condition is undefined in characteristic 2");
    }
    if (a.is_zero()) throw ZeroElementError("fourth-power condition of zero");
    ExtElement minus4a = ExtElement::from_integer(a.field_ptr(), -4) * a;
    ResidueTest t = nth_power_test(minus4a, 4);
    t.kind = ResidueTest::Kind::minus4_fourth_power;
    return t;
}

/// True iff -4a is a fourth power. Odd characteristic only.
inline bool minus4_fourth_power_condition(const ExtElement& a) { return minus4_fourth_power_test(a).is_power; }

struct Shortcut {
    Reason reason;
    /// The offending prime (p itself, the coprime d', or 2).
    std::uint64_t dprime;
};

/// Structural reasons that make x^d - a reducible over F_{p^k} for every
/// nonzero a, checked in order: p | d; a prime d' | d with d' not dividing
/// p^k - 1; 4 | d with p = 3 mod 4 and k odd.
inline std::optional<Shortcut> reducibility_shortcuts(PrimeModulus p, std::uint64_t k, std::uint64_t d) {
    if (k == 0 || d == 0) throw std::invalid_argument("reducibility_shortcuts: k and d must be at least 1");
    const std::uint64_t pv = p.value();
    if (d % pv == 0) return Shortcut{Reason::char_divides_d, pv};
    for (std::uint64_t r : distinct_prime_divisors(d)) {
        if (detail::powmod64(pv, k, r) != 1) return Shortcut{Reason::prime_divisor_coprime, r};
    }
    if (d % 4 == 0 && pv % 4 == 3 && k % 2 == 1) return Shortcut{Reason::four_divides_d_p3mod4_k_odd, 2};
    return std::nullopt;
}

/// Every prime d' | d divides p^k - 1, and 4 | d only when p = 1 mod 4 or
/// k is even.
inline bool star_condition(PrimeModulus p, std::uint64_t k, std::uint64_t d) {
    if (k == 0 || d == 0) throw std::invalid_argument("star_condition: k and d must be at least 1");
    const std::uint64_t pv = p.value();
    for (std::uint64_t r : distinct_prime_divisors(d)) {
        if (detail::powmod64(pv, k, r) != 1) return false;
    }
    return d % 4 != 0 || pv % 4 == 1 || k % 2 == 0;
}

/// Vahlen-Capelli over a finite field: x^d - a is reducible iff a is a d'-th
/// power for a prime d' | d, or 4 | d and -4a is a fourth power. Primes are
/// tried in increasing order and the fourth-power test runs last.
inline Verdict decide_xd_minus_alpha(const ExtElement& a, std::uint64_t d) {
    if (a.is_zero()) throw ZeroElementError("decide_xd_minus_alpha: alpha must be nonzero");
    if (d == 0) throw std::invalid_argument("decide_xd_minus_alpha: d must be at least 1");
    Verdict v;
    if (d == 1) {
        v.irreducible = true;
        v.reason = Reason::degree_one;
        return v;
    }
    for (std::uint64_t r : distinct_prime_divisors(d)) {
        v.tests.push_back(nth_power_test(a, r));
        if (v.tests.back().is_power) {
            v.reason = Reason::alpha_is_dprime_power;
            v.dprime = r;
            return v;
        }
    }
    if (d % 4 == 0) {
        // In characteristic 2 every element is a square, so d' = 2 above has
        // already decided.
        if (a.field().characteristic() == 2) throw std::logic_error("fourth-power branch reached in characteristic 2");
        v.tests.push_back(minus4_fourth_power_test(a));
        if (v.tests.back().is_power) {
            v.reason = Reason::minus4alpha_is_fourth_power;
            v.dprime = 2;
            return v;
        }
    }
    v.irreducible = true;
    v.reason = Reason::passes_all_residue_tests;
    return v;
}

class NotMonicError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Decides irreducibility of b(x^d) over F_p for monic irreducible b of
/// degree m: it holds iff x^d - alpha is irreducible over F_p[x]/(b), with
/// alpha the class of x. Unless trusted, b itself is checked first and a
/// reducible b raises ReducibleModulus.
inline Verdict decide_b_xd(const Polynomial<PrimeField>& b, std::uint64_t d, bool trusted = false) {
    if (b.is_zero() || b.degree() < 1) throw std::invalid_argument("decide_b_xd: b must have degree at least 1");
    if (!b.is_monic()) throw NotMonicError("decide_b_xd: b must be monic");
    if (d == 0) throw std::invalid_argument("decide_b_xd: d must be at least 1");
    auto field = ExtensionField::create(b, trusted);
    Verdict v;
    if (d == 1) {
        v.irreducible = true;
        v.reason = Reason::degree_one;
        return v;
    }
    if (auto shortcut = reducibility_shortcuts(b.field().modulus(), field->degree(), d)) {
        v.reason = shortcut->reason;
        v.dprime = shortcut->dprime;
        return v;
    }
    const ExtElement alpha = ExtElement::root_of(field);
    if (alpha.is_zero()) {
        // b = x: alpha = 0 = 0^{d'} for every prime d' | d.
        v.reason = Reason::alpha_is_dprime_power;
        v.dprime = distinct_prime_divisors(d).front();
        return v;
    }
    return decide_xd_minus_alpha(alpha, d);
}

}  // namespace capelli

#endif
