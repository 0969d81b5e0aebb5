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

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace capelli {
namespace {

PrimeModulus P(std::uint64_t p) { return PrimeModulus(p); }

TEST(ExactProbability, Examples) {
    EXPECT_EQ(exact_probability(P(7), 1, 3), Rational(2, 3));
    for (std::uint64_t p : {3, 5, 7, 11, 101}) {
        for (std::uint64_t k = 1; k <= 4; ++k) EXPECT_EQ(exact_probability(P(p), k, 2), Rational(1, 2));
    }
    EXPECT_EQ(exact_probability(P(7), 1, 6), Rational(1, 3));
    EXPECT_EQ(exact_probability(P(3), 1, 4), 0);
    EXPECT_EQ(exact_probability(P(31), 1, 30), Rational(4, 15));
    EXPECT_EQ(exact_probability(P(5), 3, 1), 1);
}

TEST(ExactProbability, IncludeZeroConvention) {
    // q = 7: 4 of 6 units, and a = 0 gives x^3.
    EXPECT_EQ(exact_probability(P(7), 1, 3, Convention::include_zero), Rational(4, 7));
    EXPECT_EQ(exact_probability(P(7), 1, 1, Convention::include_zero), 1);
}

TEST(UnionLowerBound, Examples) {
    EXPECT_EQ(union_lower_bound(12), Rational(1, 6));
    EXPECT_EQ(union_lower_bound(2), Rational(1, 2));
    EXPECT_EQ(union_lower_bound(30), Rational(-1, 30));
    EXPECT_EQ(union_lower_bound(8), Rational(1, 2));
    EXPECT_THROW(union_lower_bound(1), std::invalid_argument);
    EXPECT_THROW(union_lower_bound(0), std::invalid_argument);
}

TEST(UnionLowerBound, NeverExceedsExactWhenStarHolds) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 61}) {
        for (std::uint64_t k = 1; k <= 4; ++k) {
            for (std::uint64_t d = 2; d <= 120; ++d) {
                if (!star_condition(P(p), k, d)) continue;
                EXPECT_LE(union_lower_bound(d), exact_probability(P(p), k, d)) << p << " " << k << " " << d;
            }
        }
    }
}

TEST(Census, Examples) {
    const auto a = exhaustive_census(P(7), 1, 3);
    EXPECT_EQ(a.irreducible_count, 4U);
    EXPECT_EQ(a.total, 6U);
    EXPECT_EQ(a.convention, Convention::units_only);
    const auto b = exhaustive_census(P(5), 1, 2);
    EXPECT_EQ(b.irreducible_count, 2U);
    EXPECT_EQ(b.total, 4U);
    const auto c = exhaustive_census(P(3), 1, 4);
    EXPECT_EQ(c.irreducible_count, 0U);
    EXPECT_EQ(c.total, 2U);
}

TEST(Census, FullCrossCheckAgainstRabin) {
    CensusOptions all;
    all.cross_check_fraction = 1.0;
    for (const auto& sf : testing::small_fields(125)) {
        for (std::uint64_t d = 1; d <= 12; ++d) {
            if (sf.p == 2 && d > 8) continue;
            const auto c = exhaustive_census(P(sf.p), sf.k, d, Convention::units_only, all);
            EXPECT_EQ(c.cross_checked, c.total);
            EXPECT_EQ(c.q, testing::field_size(*sf.field));
        }
    }
}

TEST(Census, MatchesExactProbabilityOnSmallFields) {
    for (const auto& sf : testing::small_fields(300)) {
        for (std::uint64_t d = 1; d <= 12; ++d) {
            const auto c = exhaustive_census(P(sf.p), sf.k, d);
            EXPECT_EQ(Rational(c.irreducible_count), exact_probability(P(sf.p), sf.k, d) * Rational(c.total))
                << "p=" << sf.p << " k=" << sf.k << " d=" << d;
        }
    }
}

TEST(Census, ConventionConsistency) {
    for (std::uint64_t d = 1; d <= 8; ++d) {
        const auto units = exhaustive_census(P(13), 1, d);
        const auto all = exhaustive_census(P(13), 1, d, Convention::include_zero);
        EXPECT_EQ(all.total, units.total + 1);
        EXPECT_EQ(all.irreducible_count, units.irreducible_count + (d == 1 ? 1 : 0));
        EXPECT_EQ(Rational(all.irreducible_count),
                  exact_probability(P(13), 1, d, Convention::include_zero) * Rational(all.total));
    }
}

TEST(Census, Bound) {
    EXPECT_THROW(exhaustive_census(P(101), 2, 2), WorkBoundExceeded);
    CensusOptions wide;
    wide.enumeration_bound = 20'000;
    wide.cross_check_fraction = 0.0;
    EXPECT_EQ(exhaustive_census(P(101), 2, 2, Convention::units_only, wide).irreducible_count, 5100U);
}

TEST(MonteCarlo, WithinThreeStandardErrors) {
    const auto mc = monte_carlo_estimate(P(7), 1, 3, 6000, 1);
    EXPECT_EQ(mc.trials, 6000U);
    EXPECT_LE(std::abs(rational_to_double(mc.estimate) - 2.0 / 3.0), 3 * mc.stderr_estimate);
}

TEST(MonteCarlo, DegenerateCases) {
    const auto zero = monte_carlo_estimate(P(3), 1, 4, 500, 9);
    EXPECT_EQ(zero.estimate, 0);
    EXPECT_EQ(zero.stderr_estimate, 0.0);
    EXPECT_EQ(monte_carlo_estimate(P(11), 3, 1, 200, 2).estimate, 1);
    EXPECT_THROW(monte_carlo_estimate(P(7), 1, 3, 0, 1), std::invalid_argument);
}

TEST(MonteCarlo, DeterministicForFixedSeed) {
    const auto a = monte_carlo_estimate(P(5), 3, 2, 10'000, 42);
    const auto b = monte_carlo_estimate(P(5), 3, 2, 10'000, 42);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.stderr_estimate, b.stderr_estimate);
    EXPECT_LE(std::abs(rational_to_double(a.estimate) - 0.5), 4 * a.stderr_estimate);
    const auto c = monte_carlo_estimate(P(5), 3, 2, 10'000, 43);
    EXPECT_NE(a.estimate, c.estimate);
}

TEST(MonteCarlo, BatchesArePrefixStable) {
    // The first batch of a longer run is the same draw as a short run.
    const auto shortrun = monte_carlo_estimate(P(13), 1, 3, 4096, 5);
    const auto longrun = monte_carlo_estimate(P(13), 1, 3, 8192, 5);
    const auto second = longrun.successes - shortrun.successes;
    EXPECT_LE(second, 4096U);
    EXPECT_GE(longrun.successes, shortrun.successes);
}

TEST(RationalFormatting, Text) {
    EXPECT_EQ(rational_to_string(Rational(4, 6)), "2/3");
    EXPECT_EQ(rational_to_string(Rational(-1, 30)), "-1/30");
    EXPECT_EQ(rational_to_string(Rational(0)), "0");
}

}  // namespace
}  // namespace capelli
