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

#ifndef CAPELLI_PRIMES_HPP
#define CAPELLI_PRIMES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace capelli {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1U) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        e >>= 1U;
    }
    return result;
}

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd
// composite n.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t batch = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace detail

// Deterministic for every 64-bit input: these seven bases have no strong
// pseudoprime below 2^64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (!detail::miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

/// Prime factorization with multiplicity, ascending. Trial division up to
/// 10^6, Pollard rho for whatever composite cofactor is left.
inline std::vector<std::uint64_t> factor_integer(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
    std::vector<std::uint64_t> factors;
    constexpr std::uint64_t trial_limit = 1'000'000;
    for (std::uint64_t f = 2; f <= trial_limit && f * f <= n; f += (f == 2 ? 1 : 2)) {
        while (n % f == 0) {
            factors.push_back(f);
            n /= f;
        }
    }
    std::vector<std::uint64_t> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        std::uint64_t m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            factors.push_back(m);
            continue;
        }
        std::uint64_t g = detail::pollard_rho(m);
        pending.push_back(g);
        pending.push_back(m / g);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

inline std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
    auto factors = factor_integer(n);
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return factors;
}

}  // namespace capelli

#endif
