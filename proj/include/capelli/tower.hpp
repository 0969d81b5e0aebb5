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

#ifndef CAPELLI_TOWER_HPP
#define CAPELLI_TOWER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "polytext.hpp"
#include "prime_field.hpp"

// Sparse irreducibles of growing degree: b <- b(x^d), each step certified by
// the power-residue criterion in the field built from the previous b.
namespace capelli {

struct TowerStep {
    std::uint64_t d = 1;
    Reason reason = Reason::passes_all_residue_tests;
    std::vector<ResidueTest> tests;

    friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

/// Enough to re-derive every step: replaying the residue tests from base
/// reproduces each recorded value.
struct TowerCertificate {
    PrimeModulus p;
    Polynomial<PrimeField> base;
    std::vector<TowerStep> steps;
    std::uint64_t final_degree = 0;

    Polynomial<PrimeField> final_polynomial() const {
        Polynomial<PrimeField> f = base;
        for (const auto& s : steps) f = compose_power(f, s.d);
        return f;
    }
};

struct TowerOptions {
    /// Re-run Rabin's test on every composition and fail on disagreement.
    bool paranoid = false;
    /// Largest prime d proposed by the automatic policy.
    std::uint64_t max_candidate_d = 1000;
};

class TowerError : public std::runtime_error {
   public:
    TowerError(const std::string& what, TowerCertificate partial, std::optional<std::uint64_t> d = std::nullopt,
               std::optional<Verdict> verdict = std::nullopt)
        : std::runtime_error(what), partial_(std::move(partial)), d_(d), verdict_(std::move(verdict)) {}

    const TowerCertificate& partial() const noexcept { return partial_; }
    const std::optional<std::uint64_t>& rejected_d() const noexcept { return d_; }
    const std::optional<Verdict>& verdict() const noexcept { return verdict_; }

   private:
    TowerCertificate partial_;
    std::optional<std::uint64_t> d_;
    std::optional<Verdict> verdict_;
};

namespace detail {

inline TowerCertificate start_tower(const Polynomial<PrimeField>& b0) {
    if (b0.is_zero() || b0.degree() < 1) throw std::invalid_argument("tower base must have degree at least 1");
    if (!b0.is_monic()) throw NotMonicError("tower base must be monic");
    if (!rabin_test(b0).irreducible) throw ReducibleModulus("tower base " + render(b0) + " is reducible");
    return TowerCertificate{b0.field().modulus(), b0, {}, static_cast<std::uint64_t>(b0.degree())};
}

inline void accept_step(TowerCertificate& cert, Polynomial<PrimeField>& current, std::uint64_t d, Verdict verdict,
                        const TowerOptions& options) {
    Polynomial<PrimeField> next = compose_power(current, d);
    if (options.paranoid && !rabin_test(next).irreducible) {
        throw std::logic_error("criterion accepted " + render(next) + " but Rabin's test rejects it");
    }
    cert.steps.push_back(TowerStep{d, verdict.reason, std::move(verdict.tests)});
    cert.final_degree = static_cast<std::uint64_t>(next.degree());
    current = std::move(next);
}

}  // namespace detail

/// Applies a fixed schedule of exponents. A step the criterion rejects
/// raises TowerError carrying the verdict and the certificate so far.
inline TowerCertificate grow_tower(const Polynomial<PrimeField>& b0, const std::vector<std::uint64_t>& schedule,
                                   const TowerOptions& options = {}) {
    if (schedule.empty()) throw std::invalid_argument("tower schedule is empty");
    TowerCertificate cert = detail::start_tower(b0);
    Polynomial<PrimeField> current = b0;
    for (std::uint64_t d : schedule) {
        if (d == 0) throw std::invalid_argument("tower schedule contains d = 0");
        Verdict v = decide_b_xd(current, d, true);
        if (!v.irreducible) {
            throw TowerError("step d=" + std::to_string(d) + " rejected: " + std::string(to_string(v.reason)), cert, d,
                             v);
        }
        detail::accept_step(cert, current, d, std::move(v), options);
    }
    return cert;
}

/// Grows until the degree reaches target. Each step tries the primes
/// r <= max_candidate_d dividing p^m - 1 in increasing order and keeps the
/// first one the criterion accepts.
inline TowerCertificate grow_tower_to_degree(const Polynomial<PrimeField>& b0, std::uint64_t target,
                                             const TowerOptions& options = {}) {
    TowerCertificate cert = detail::start_tower(b0);
    if (target <= cert.final_degree) {
        throw std::invalid_argument("target degree " + std::to_string(target) + " does not exceed deg(b0) = " +
                                    std::to_string(cert.final_degree));
    }
    const std::uint64_t p = cert.p.value();
    Polynomial<PrimeField> current = b0;
    while (cert.final_degree < target) {
        const std::uint64_t m = cert.final_degree;
        bool grown = false;
        for (std::uint64_t r = 2; r <= options.max_candidate_d && !grown; ++r) {
            if (!is_prime(r) || detail::powmod64(p, m, r) != 1) continue;
            Verdict v = decide_b_xd(current, r, true);
            if (v.irreducible) {
                detail::accept_step(cert, current, r, std::move(v), options);
                grown = true;
            }
        }
        if (!grown) {
            throw TowerError("no prime d <= " + std::to_string(options.max_candidate_d) + " extends degree " +
                                 std::to_string(m),
                             cert);
        }
    }
    return cert;
}

struct ReplayReport {
    bool ok = false;
    std::string message;
};

/// Re-runs every recorded residue test from the base and compares.
inline ReplayReport replay_certificate(const TowerCertificate& cert) {
    if (!(cert.base.field().modulus() == cert.p)) return {false, "base polynomial is over the wrong prime field"};
    if (!cert.base.is_monic() || !rabin_test(cert.base).irreducible) return {false, "base is not monic irreducible"};
    Polynomial<PrimeField> current = cert.base;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const TowerStep& recorded = cert.steps[i];
        if (recorded.d == 0) return {false, "step " + std::to_string(i) + " has d = 0"};
        const Verdict v = decide_b_xd(current, recorded.d, true);
        if (!v.irreducible) {
            return {false, "step " + std::to_string(i) + " (d=" + std::to_string(recorded.d) +
                               ") is rejected on replay: " + std::string(to_string(v.reason))};
        }
        if (!(TowerStep{recorded.d, v.reason, v.tests} == recorded)) {
            return {false, "step " + std::to_string(i) + " evidence differs from the recorded values"};
        }
        current = compose_power(current, recorded.d);
    }
    if (static_cast<std::uint64_t>(current.degree()) != cert.final_degree) {
        return {false, "final degree " + std::to_string(current.degree()) + " does not match recorded " +
                           std::to_string(cert.final_degree)};
    }
    return {true, "ok"};
}

}  // namespace capelli

#endif
