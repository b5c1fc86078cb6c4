// Copyright 2026 The QFIAE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfiae/iqae.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace qfiae;

namespace {

constexpr double kPi = std::numbers::pi;

/// Oracle whose amplitude is exactly `a` on every grid point.
SineSquaredOracle constant_oracle(double a) {
    return SineSquaredOracle::over_interval(0.0, std::asin(std::sqrt(a)), 1, 0.0, 1.0);
}

/// Same half-plane test, written with integer floor of the scaled endpoints.
int half_plane_of(std::int64_t big_k, const ThetaInterval& iv) {
    const double lo = big_k * iv.lo / kPi;
    const double hi = big_k * iv.hi / kPi;
    const double cell = std::floor(lo);
    if (hi > cell + 1.0) return -1;
    return static_cast<std::int64_t>(cell) % 2 == 0 ? 0 : 1;  // 0 upper, 1 lower
}

NextK brute_force_next_k(int k_current, const ThetaInterval& iv, bool up_current) {
    const auto k_max = static_cast<std::int64_t>(std::floor((kPi / iv.width() - 2.0) / 4.0));
    for (std::int64_t k = k_max; k >= 2 * k_current; --k) {
        const int plane = half_plane_of(4 * k + 2, iv);
        if (plane >= 0) return {static_cast<int>(k), plane == 0};
    }
    return {k_current, up_current};
}

}  // namespace

TEST(IqaeConfig, derived_quantities) {
    IqaeConfig c;
    ASSERT_NO_THROW(c.validate());
    ASSERT_EQ(c.planned_rounds(), 6);  // ceil(log2(pi / 0.08)) = ceil(5.29)
    ASSERT_EQ(c.round_limit(), 60);
    ASSERT_DOUBLE_EQ(c.alpha_round(), 0.05 / 6);
    c.max_rounds = 7;
    ASSERT_EQ(c.round_limit(), 7);
    c.epsilon = 0.4;
    ASSERT_EQ(c.planned_rounds(), 1);
}

TEST(IqaeConfig, rejects_bad_values) {
    for (double eps : {0.0, 0.5, -0.1}) {
        IqaeConfig c;
        c.epsilon = eps;
        ASSERT_THROW(c.validate(), std::invalid_argument);
    }
    for (double alpha : {0.0, 1.0}) {
        IqaeConfig c;
        c.alpha = alpha;
        ASSERT_THROW(c.validate(), std::invalid_argument);
    }
    IqaeConfig c;
    c.shots_per_round = 0;
    ASSERT_THROW(c.validate(), std::invalid_argument);
}

TEST(ConfidenceUpdate, examples) {
    ASSERT_EQ(confidence_update(0, 100, 0.05).lo, 0.0);
    const auto mid = confidence_update(50, 100, 0.05);
    const double delta = std::sqrt(std::log(40.0) / 200.0);
    ASSERT_NEAR(delta, 0.1358, 1e-4);
    ASSERT_NEAR(mid.lo, 0.5 - delta, 1e-15);
    ASSERT_NEAR(mid.hi, 0.5 + delta, 1e-15);
    ASSERT_EQ(confidence_update(100, 100, 0.05).hi, 1.0);
    ASSERT_THROW(confidence_update(101, 100, 0.05), std::invalid_argument);
    ASSERT_THROW(confidence_update(-1, 100, 0.05), std::invalid_argument);
    ASSERT_THROW(confidence_update(1, 100, 0.0), std::invalid_argument);
}

TEST(FindNextK, no_information) {
    ASSERT_EQ(find_next_k(0, {0.0, kPi / 2}, true), (NextK{0, true}));
}

TEST(FindNextK, degenerate_interval_unchanged) {
    ASSERT_EQ(find_next_k(3, {0.4, 0.4}, false), (NextK{3, false}));
}

TEST(FindNextK, matches_exhaustive_scan) {
    const ThetaInterval iv{0.1, 0.12};
    const NextK got = find_next_k(0, iv, true);
    ASSERT_EQ(got, brute_force_next_k(0, iv, true));
    ASSERT_TRUE(half_plane_contains(got.k, iv, got.up));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> lo(0, kPi / 2), w(1e-4, 0.3);
    for (int trial = 0; trial < 2000; ++trial) {
        const double a = lo(rng);
        const ThetaInterval t{a, a + w(rng)};
        if (t.hi >= kPi / 2) continue;
        const int k_current = trial % 4;
        const NextK expect = brute_force_next_k(k_current, t, trial % 2 == 0);
        ASSERT_EQ(find_next_k(k_current, t, trial % 2 == 0), expect)
            << t.lo << " " << t.hi << " k " << k_current;
    }
}

TEST(FindNextK, respects_growth_floor) {
    // Width small enough that k = 1 fits, but the floor 2 * 3 = 6 is out of reach.
    const ThetaInterval iv{0.30, 0.45};
    ASSERT_EQ(find_next_k(3, iv, true), (NextK{3, true}));
}

TEST(RunIqae, zero_integrand) {
    const auto o = SineSquaredOracle::over_interval(0.0, 0.0, 2, 0.0, 1.0);
    const auto r = run_iqae(o, IqaeConfig{}, 1);
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.a_lo, 0.0);
    ASSERT_GE(r.a_estimate, 0.0);
    ASSERT_LE(r.a_estimate, 0.01);
    ASSERT_LE(r.half_width, 0.01);
}

TEST(RunIqae, deterministic_given_seed) {
    const auto o = constant_oracle(0.3);
    IqaeConfig c;
    const auto a = run_iqae(o, c, 17);
    const auto b = run_iqae(o, c, 17);
    ASSERT_EQ(a.a_estimate, b.a_estimate);
    ASSERT_EQ(a.k_schedule, b.k_schedule);
    ASSERT_EQ(a.oracle_calls, b.oracle_calls);
}

TEST(RunIqae, trace_invariants) {
    IqaeConfig c;
    c.shots_per_round = 100;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto r = run_iqae(constant_oracle(0.3), c, seed);
        ASSERT_TRUE(r.converged);
        ASSERT_LE(r.a_hi - r.a_lo, 2 * c.epsilon + 1e-15);
        ASSERT_EQ(static_cast<int>(r.k_schedule.size()), r.rounds);
        std::int64_t calls = 0;
        double width = kPi / 2;
        int prev_distinct = 0;
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            const IqaeRound& round = r.trace[i];
            calls += c.shots_per_round * (1 + 2 * round.k);
            if (i > 0) {
                ASSERT_GE(round.k, r.trace[i - 1].k);
                if (round.k != r.trace[i - 1].k) {
                    ASSERT_GE(round.k, 2 * prev_distinct);
                    prev_distinct = round.k;
                }
            }
            ASSERT_LE(round.theta.width(), width + 1e-15);
            width = round.theta.width();
            ASSERT_GE(round.theta.lo, 0.0);
            ASSERT_LE(round.theta.hi, kPi / 2);
        }
        ASSERT_EQ(calls, r.oracle_calls);
        ASSERT_GE(r.a_estimate - r.half_width, -1e-15);
        ASSERT_LE(r.a_estimate + r.half_width, 1.0 + 1e-15);
    }
}

TEST(RunIqae, round_limit_reports_unconverged) {
    IqaeConfig c;
    c.epsilon = 1e-4;
    c.max_rounds = 1;
    const auto r = run_iqae(constant_oracle(0.4), c, 3);
    ASSERT_FALSE(r.converged);
    ASSERT_EQ(r.rounds, 1);
    ASSERT_LE(r.a_lo, r.a_hi);
}

TEST(RunIqae, half_amplitude_accuracy) {
    IqaeConfig c;
    c.shots_per_round = 1000;
    int good = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto r = run_iqae(constant_oracle(0.5), c, seed);
        if (std::abs(r.a_estimate - 0.5) <= 0.01) ++good;
    }
    ASSERT_GE(good, 190);
}

TEST(RunIqae, coverage) {
    IqaeConfig c;
    const int trials = 200;
    const double sigma = std::sqrt(c.alpha * (1 - c.alpha) / trials);
    for (double a : {0.1, 0.25, 0.5, 0.7}) {
        int covered = 0;
        for (int seed = 0; seed < trials; ++seed) {
            const auto r = run_iqae(constant_oracle(a), c, 1000 + seed);
            if (r.a_lo <= a + 1e-12 && a - 1e-12 <= r.a_hi) ++covered;
        }
        ASSERT_GE(static_cast<double>(covered) / trials, 1 - c.alpha - 3 * sigma) << "a = " << a;
    }
}

TEST(RunIqae, query_scaling) {
    double coarse = 0, fine = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        IqaeConfig c;
        c.epsilon = 0.02;
        coarse += run_iqae(constant_oracle(0.3), c, seed).oracle_calls;
        c.epsilon = 0.002;
        fine += run_iqae(constant_oracle(0.3), c, seed).oracle_calls;
    }
    ASSERT_LE(fine, 25 * coarse);
}
