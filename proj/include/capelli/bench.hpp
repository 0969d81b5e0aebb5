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

#ifndef CAPELLI_BENCH_HPP
#define CAPELLI_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "criterion.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "work_counter.hpp"

namespace capelli {

/// Cost of certifying one tower step with the criterion versus running
/// Rabin's test on the composed polynomial. Work is counted in F_p
/// multiplications; wall time is reported separately.
struct BenchRow {
    std::uint64_t d = 1;
    std::uint64_t degree_before = 0;
    std::uint64_t degree_after = 0;
    bool accepted = false;
    Reason reason = Reason::degree_one;
    std::uint64_t criterion_mults = 0;
    std::uint64_t oracle_mults = 0;
    double criterion_seconds = 0.0;
    double oracle_seconds = 0.0;
    bool oracle_agrees = true;

    /// oracle work / criterion work; 1 when both are zero.
    double work_ratio() const {
        if (criterion_mults == 0) return oracle_mults == 0 ? 1.0 : static_cast<double>(oracle_mults);
        return static_cast<double>(oracle_mults) / static_cast<double>(criterion_mults);
    }
};

inline BenchRow bench_step(const Polynomial<PrimeField>& b, std::uint64_t d) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.d = d;
    row.degree_before = static_cast<std::uint64_t>(b.degree());
    row.degree_after = row.degree_before * d;

    auto t0 = clock::now();
    ScopedWorkCount criterion_work;
    const Verdict v = decide_b_xd(b, d, true);
    row.criterion_mults = criterion_work.elapsed();
    row.criterion_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    row.accepted = v.irreducible;
    row.reason = v.reason;
    if (!row.accepted) return row;

    const Polynomial<PrimeField> composed = compose_power(b, d);
    t0 = clock::now();
    ScopedWorkCount oracle_work;
    const bool oracle = d == 1 || rabin_test(composed).irreducible;
    row.oracle_mults = oracle_work.elapsed();
    row.oracle_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    row.oracle_agrees = oracle == v.irreducible;
    return row;
}

/// Benchmarks each step of a schedule, stopping after the first rejected step.
inline std::vector<BenchRow> bench_tower(const Polynomial<PrimeField>& b0, const std::vector<std::uint64_t>& schedule) {
    std::vector<BenchRow> rows;
    Polynomial<PrimeField> current = b0;
    for (std::uint64_t d : schedule) {
        rows.push_back(bench_step(current, d));
        if (!rows.back().accepted) break;
        current = compose_power(current, d);
    }
    return rows;
}

}  // namespace capelli

#endif
