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

#ifndef CAPELLI_PROBABILITY_HPP
#define CAPELLI_PROBABILITY_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bignat.hpp"
#include "criterion.hpp"
#include "extension_field.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "primes.hpp"

// How often x^d - a is irreducible over F_{p^k} for uniformly random a.
namespace capelli {

using Rational = boost::multiprecision::cpp_rational;

/// units-only: a uniform on F_q^*. include-zero: a uniform on F_q, where
/// a = 0 gives x^d, irreducible only for d = 1.
enum class Convention { units_only, include_zero };

inline const char* to_string(Convention c) { return c == Convention::units_only ? "units-only" : "include-zero"; }

inline std::string rational_to_string(const Rational& r) {
    const BigNat num = boost::multiprecision::numerator(r);
    const BigNat den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact fraction of irreducible x^d - a. Zero when the star condition fails;
/// otherwise prod over distinct primes r | d of (1 - 1/r), the
/// inclusion-exclusion count of units outside every index-r subgroup.
inline Rational exact_probability(PrimeModulus p, std::uint64_t k, std::uint64_t d,
                                  Convention convention = Convention::units_only) {
    Rational units = 0;
    if (star_condition(p, k, d)) {
        units = 1;
        for (std::uint64_t r : distinct_prime_divisors(d)) units *= Rational(r - 1, r);
    }
    if (convention == Convention::units_only) return units;
    const BigNat q = big_pow(p.value(), k);
    return (units * Rational(q - 1) + Rational(d == 1 ? 1 : 0)) / Rational(q);
}

/// 1 - sum over distinct primes r | d of 1/r. May be negative.
inline Rational union_lower_bound(std::uint64_t d) {
    if (d < 2) throw std::invalid_argument("union_lower_bound: d must be at least 2");
    Rational bound = 1;
    for (std::uint64_t r : distinct_prime_divisors(d)) bound -= Rational(1, r);
    return bound;
}

struct CensusResult {
    BigNat q;
    std::uint64_t irreducible_count = 0;
    std::uint64_t total = 0;
    Convention convention = Convention::units_only;
    /// How many a were re-checked with Rabin's test on x^d - a.
    std::uint64_t cross_checked = 0;
};

struct CensusOptions {
    std::uint64_t enumeration_bound = 10'000;
    double cross_check_fraction = 0.1;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Unbiased draw from [0, n). std::uniform_int_distribution is not pinned
// down by the standard, so reports would differ across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % n;
    }
}

inline Polynomial<ExtensionField> x_power_minus(const ExtElement& a, std::uint64_t d) {
    const ExtensionField& f = a.field();
    std::vector<ExtensionField::Element> coeffs(d + 1, f.zero());
    coeffs[0] = f.neg(a.value());
    coeffs[d] = f.one();
    return Polynomial<ExtensionField>(a.field_ptr(), std::move(coeffs));
}

inline std::shared_ptr<const ExtensionField> first_field_of_order(PrimeModulus p, std::uint64_t k,
                                                                  std::uint64_t bound) {
    if (k == 1) return ExtensionField::prime_field(p);
    OracleLimits limits;
    limits.enumeration_bound = bound;
    IrreducibleStream stream(p, k, limits);
    auto it = stream.begin();
    if (it == stream.end()) throw std::logic_error("no irreducible polynomial of the requested degree");
    return ExtensionField::create(*it, true);
}

}  // namespace detail

/// Applies the criterion to every a in F_{p^k} and counts irreducible
/// x^d - a. A seeded random subset of a is re-decided by Rabin's test on
/// x^d - a over F_{p^k}; any disagreement throws std::logic_error.
inline CensusResult exhaustive_census(PrimeModulus p, std::uint64_t k, std::uint64_t d,
                                      Convention convention = Convention::units_only,
                                      const CensusOptions& options = {}) {
    if (k == 0 || d == 0) throw std::invalid_argument("exhaustive_census: k and d must be at least 1");
    const auto q = detail::checked_pow(p.value(), k, options.enumeration_bound);
    if (!q) throw WorkBoundExceeded("exhaustive_census: p^k exceeds the enumeration bound");
    auto field = detail::first_field_of_order(p, k, options.enumeration_bound);

    std::mt19937_64 rng(detail::derive_seed(options.seed, 0));
    const auto sample_per_million = static_cast<std::uint64_t>(std::llround(options.cross_check_fraction * 1e6));

    CensusResult result;
    result.q = *q;
    result.convention = convention;
    for (std::uint64_t i = 1; i < *q; ++i) {
        const ExtElement a(field, field->element_at(i));
        const bool irreducible = decide_xd_minus_alpha(a, d).irreducible;
        result.irreducible_count += irreducible ? 1 : 0;
        if (detail::uniform_below(rng, 1'000'000) < sample_per_million) {
            ++result.cross_checked;
            if (rabin_test(detail::x_power_minus(a, d)).irreducible != irreducible) {
                throw std::logic_error("criterion and Rabin's test disagree on x^" + std::to_string(d) + " - (" +
                                       a.to_string() + ")");
            }
        }
    }
    result.total = *q - 1;
    if (convention == Convention::include_zero) {
        result.total += 1;
        result.irreducible_count += d == 1 ? 1 : 0;
    }
    return result;
}

struct MonteCarloResult {
    Rational estimate;
    double stderr_estimate = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

class FieldSearchFailed : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Random monic irreducible of degree k via rejection, at most 50*k draws.
inline Polynomial<PrimeField> random_irreducible(PrimeModulus p, std::uint64_t k, std::mt19937_64& rng) {
    auto fp = std::make_shared<const PrimeField>(p);
    for (std::uint64_t attempt = 0; attempt < 50 * k; ++attempt) {
        std::vector<std::uint64_t> coeffs(k + 1, 1);
        for (std::uint64_t j = 0; j < k; ++j) coeffs[j] = detail::uniform_below(rng, p.value());
        Polynomial<PrimeField> candidate(fp, std::move(coeffs));
        if (rabin_test(candidate).irreducible) return candidate;
    }
    throw FieldSearchFailed("no irreducible of degree " + std::to_string(k) + " over F_" + std::to_string(p.value()) +
                            " found in " + std::to_string(50 * k) + " attempts");
}

/// Trials run in fixed-size batches, each with its own seed derived from
/// (seed, batch index), so the outcome does not depend on how batches are
/// scheduled.
inline MonteCarloResult monte_carlo_estimate(PrimeModulus p, std::uint64_t k, std::uint64_t d, std::uint64_t trials,
                                             std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("monte_carlo_estimate: trials must be at least 1");
    if (k == 0 || d == 0) throw std::invalid_argument("monte_carlo_estimate: k and d must be at least 1");
    std::shared_ptr<const ExtensionField> field;
    if (k == 1) {
        field = ExtensionField::prime_field(p);
    } else {
        std::mt19937_64 rng(detail::derive_seed(seed, 0));
        field = ExtensionField::create(random_irreducible(p, k, rng), true);
    }

    constexpr std::uint64_t batch_size = 4096;
    MonteCarloResult out;
    out.trials = trials;
    for (std::uint64_t batch = 0; batch * batch_size < trials; ++batch) {
        std::mt19937_64 rng(detail::derive_seed(seed, batch + 1));
        const std::uint64_t n = std::min(batch_size, trials - batch * batch_size);
        for (std::uint64_t t = 0; t < n; ++t) {
            ExtensionField::Element value;
            do {
                value.assign(k, 0);
                for (auto& c : value) c = detail::uniform_below(rng, p.value());
                detail::trim(value);
            } while (value.empty());
            out.successes += decide_xd_minus_alpha(ExtElement(field, std::move(value)), d).irreducible ? 1 : 0;
        }
    }
    out.estimate = Rational(out.successes, trials);
    const double phat = static_cast<double>(out.successes) / static_cast<double>(trials);
    out.stderr_estimate = std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
    return out;
}

}  // namespace capelli

#endif
