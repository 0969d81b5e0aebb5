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

#ifndef CAPELLI_DETAIL_FP_KERNELS_HPP
#define CAPELLI_DETAIL_FP_KERNELS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "../primes.hpp"
#include "../work_counter.hpp"

// Dense coefficient kernels over F_p. Inputs are fully reduced residues.
namespace capelli::detail {

inline void trim(std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<std::uint64_t> fp_convolve(std::uint64_t p, const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    std::uint64_t mults = 0;
    if (p < (1ULL << 32)) {
        // Products fit in 64 bits; 128-bit accumulators absorb every sum.
        std::vector<unsigned __int128> acc(out.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::uint64_t ai = a[i];
            if (ai == 0) continue;
            mults += b.size();
            unsigned __int128* row = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
        }
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            mults += b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t t = mulmod64(a[i], b[j], p);
                out[i + j] = out[i + j] >= p - t ? out[i + j] - (p - t) : out[i + j] + t;
            }
        }
    }
    count_mults(mults);
    trim(out);
    return out;
}

inline std::vector<std::uint64_t> fp_square(std::uint64_t p, const std::vector<std::uint64_t>& a) {
    if (a.empty()) return {};
    if (p >= (1ULL << 31)) return fp_convolve(p, a, a);
    // Doubled cross terms stay below 2^64 when p < 2^31.
    std::vector<unsigned __int128> acc(2 * a.size() - 1, 0);
    std::uint64_t mults = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        acc[2 * i] += ai * ai;
        const std::uint64_t twice = 2 * ai;
        mults += a.size() - i;
        for (std::size_t j = i + 1; j < a.size(); ++j) acc[i + j] += twice * a[j];
    }
    count_mults(mults);
    std::vector<std::uint64_t> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
    trim(out);
    return out;
}

// Nonzero low-order terms of a monic modulus, stored negated so that
// x^m == sum(neg_coeff * x^power).
struct SparseTail {
    std::size_t degree = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> terms;
};

inline SparseTail make_sparse_tail(std::uint64_t p, const std::vector<std::uint64_t>& monic) {
    SparseTail tail;
    tail.degree = monic.size() - 1;
    for (std::size_t j = 0; j + 1 < monic.size(); ++j) {
        if (monic[j] != 0) tail.terms.emplace_back(j, (p - monic[j]) % p);
    }
    return tail;
}

inline void fp_reduce(std::uint64_t p, std::vector<std::uint64_t>& r, const SparseTail& tail) {
    const std::size_t m = tail.degree;
    if (r.size() <= m) return;
    std::uint64_t mults = 0;
    for (std::size_t i = r.size() - 1; i >= m; --i) {
        const std::uint64_t t = r[i];
        r[i] = 0;
        if (t != 0) {
            mults += tail.terms.size();
            for (const auto& [j, c] : tail.terms) {
                std::uint64_t& slot = r[i - m + j];
                slot = static_cast<std::uint64_t>((static_cast<unsigned __int128>(t) * c + slot) % p);
            }
        }
        if (i == m) break;
    }
    count_mults(mults);
    r.resize(m);
    trim(r);
}

}  // namespace capelli::detail

#endif
