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

#ifndef CAPELLI_ORACLE_HPP
#define CAPELLI_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignat.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "primes.hpp"

// Generic irreducibility oracles. These are the ground truth the power-residue
// criterion is checked against, so nothing here uses the criterion.
namespace capelli {

enum class OracleMethod { rabin, trial_division };

inline const char* to_string(OracleMethod m) { return m == OracleMethod::rabin ? "rabin" : "trial-division"; }

template <CoefficientField F>
struct OracleVerdict {
    bool irreducible = false;
    OracleMethod method = OracleMethod::rabin;
    /// A factor with 1 <= deg < deg(input), when the method produced one.
    std::optional<Polynomial<F>> witness;
};

/// Raised when an exhaustive oracle would exceed its configured work.
class WorkBoundExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    /// Field multiplications allowed for one trial-division call.
    std::uint64_t work_bound = 10'000'000;
    /// Largest p^m that enumerate_irreducibles will walk.
    std::uint64_t enumeration_bound = 1'000'000;
};

namespace detail {

template <CoefficientField F>
void require_monic_nonconstant(const Polynomial<F>& f, const char* who) {
    if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
    if (f.degree() < 1) throw std::invalid_argument(std::string(who) + ": degree must be at least 1");
    if (!f.is_monic()) throw std::invalid_argument(std::string(who) + ": polynomial must be monic");
}

// Monic polynomial of the given degree whose low coefficients are the base-q
// digits of index, least significant first.
template <CoefficientField F>
Polynomial<F> monic_from_index(const std::shared_ptr<const F>& field, std::uint64_t q, std::size_t degree,
                               std::uint64_t index) {
    std::vector<typename F::Element> coeffs;
    coeffs.reserve(degree + 1);
    for (std::size_t j = 0; j < degree; ++j) {
        coeffs.push_back(field->element_at(index % q));
        index /= q;
    }
    coeffs.push_back(field->one());
    return Polynomial<F>(field, std::move(coeffs));
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace detail

/// x^{q^i} mod f for i = 0..count, the Frobenius images of x.
template <CoefficientField F>
std::vector<Polynomial<F>> frobenius_powers_of_x(const Polynomial<F>& f, std::size_t count) {
    const BigNat q = f.field().order();
    std::vector<Polynomial<F>> out;
    out.reserve(count + 1);
    out.push_back(Polynomial<F>::x(f.field_ptr()) % f);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(powmod(out.back(), q, f));
    return out;
}

/// Rabin's test over F_q: f of degree n is irreducible iff x^{q^n} = x mod f
/// and gcd(x^{q^{n/r}} - x, f) = 1 for every prime r | n.
template <CoefficientField F>
OracleVerdict<F> rabin_test(const Polynomial<F>& f) {
    detail::require_monic_nonconstant(f, "rabin_test");
    OracleVerdict<F> verdict;
    verdict.method = OracleMethod::rabin;
    const auto n = static_cast<std::uint64_t>(f.degree());
    if (n == 1) {
        verdict.irreducible = true;
        return verdict;
    }
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t r : distinct_prime_divisors(n)) checkpoints.push_back(n / r);

    const BigNat q = f.field().order();
    const Polynomial<F> x = Polynomial<F>::x(f.field_ptr()) % f;
    Polynomial<F> h = x;
    for (std::uint64_t i = 1; i <= n; ++i) {
        h = powmod(h, q, f);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) == checkpoints.end()) continue;
        Polynomial<F> g = gcd(h - x, f);
        if (g.degree() != 0) {
            if (g.degree() < f.degree()) verdict.witness = std::move(g);
            return verdict;
        }
    }
    verdict.irreducible = (h == x);
    return verdict;
}

/// Tries every monic divisor of degree <= deg(f)/2. Slow and obviously
/// correct; refuses inputs whose estimated work exceeds limits.work_bound.
template <CoefficientField F>
OracleVerdict<F> trial_division_test(const Polynomial<F>& f, const OracleLimits& limits = {}) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("trial_division_test: degree must be at least 1");
    OracleVerdict<F> verdict;
    verdict.method = OracleMethod::trial_division;
    const auto n = static_cast<std::uint64_t>(f.degree());
    const BigNat big_q = f.field().order();
    if (big_q > BigNat(limits.work_bound)) throw WorkBoundExceeded("trial_division_test: field too large");
    const auto q = static_cast<std::uint64_t>(big_q);

    std::uint64_t estimated = 0;
    for (std::uint64_t e = 1; e <= n / 2; ++e) {
        const auto count = detail::checked_pow(q, e, limits.work_bound);
        if (!count) throw WorkBoundExceeded("trial_division_test: work bound exceeded");
        estimated += *count * (n - e + 1) * e;
        if (estimated > limits.work_bound) throw WorkBoundExceeded("trial_division_test: work bound exceeded");
    }

    for (std::uint64_t e = 1; e <= n / 2; ++e) {
        const std::uint64_t count = *detail::checked_pow(q, e, limits.work_bound);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto candidate = detail::monic_from_index(f.field_ptr(), q, e, idx);
            if ((f % candidate).is_zero()) {
                verdict.witness = std::move(candidate);
                return verdict;
            }
        }
    }
    verdict.irreducible = true;
    return verdict;
}

/// Number of monic irreducibles of degree m over F_p: (1/m) sum_{e|m} mu(e) p^{m/e}.
inline BigNat necklace_count(std::uint64_t p, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("necklace_count: m must be at least 1");
    BigNat plus = 0, minus = 0;
    for (std::uint64_t e = 1; e <= m; ++e) {
        if (m % e != 0) continue;
        const auto primes = factor_integer(e);
        bool squarefree = true;
        for (std::size_t i = 1; i < primes.size(); ++i) squarefree &= primes[i] != primes[i - 1];
        if (!squarefree) continue;
        (primes.size() % 2 == 0 ? plus : minus) += big_pow(p, m / e);
    }
    return (plus - minus) / m;
}

/// Restartable stream of the monic irreducible polynomials of degree m over
/// F_p, in increasing base-p index order of their low coefficients.
class IrreducibleStream {
   public:
    IrreducibleStream(PrimeModulus p, std::uint64_t m, const OracleLimits& limits = {})
        : field_(std::make_shared<const PrimeField>(p)), degree_(m) {
        if (m == 0) throw std::invalid_argument("enumerate_irreducibles: degree must be at least 1");
        const auto count = detail::checked_pow(p.value(), m, limits.enumeration_bound);
        if (!count) throw WorkBoundExceeded("enumerate_irreducibles: p^m exceeds the enumeration bound");
        total_ = *count;
    }

    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Polynomial<PrimeField>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;
        iterator(const IrreducibleStream* owner, std::uint64_t index) : owner_(owner), index_(index) { advance(); }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++() {
            ++index_;
            advance();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

       private:
        void advance() {
            current_.reset();
            for (; index_ < owner_->total_; ++index_) {
                auto candidate = detail::monic_from_index(owner_->field_, owner_->field_->characteristic(),
                                                          owner_->degree_, index_);
                if (rabin_test(candidate).irreducible) {
                    current_ = std::move(candidate);
                    return;
                }
            }
        }

        const IrreducibleStream* owner_ = nullptr;
        std::uint64_t index_ = 0;
        std::optional<Polynomial<PrimeField>> current_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, total_); }

   private:
    std::shared_ptr<const PrimeField> field_;
    std::uint64_t degree_;
    std::uint64_t total_ = 0;
};

inline std::vector<Polynomial<PrimeField>> enumerate_irreducibles(PrimeModulus p, std::uint64_t m,
                                                                  const OracleLimits& limits = {}) {
    std::vector<Polynomial<PrimeField>> out;
    for (const auto& f : IrreducibleStream(p, m, limits)) out.push_back(f);
    return out;
}

}  // namespace capelli

#endif
