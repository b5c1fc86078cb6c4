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

/**
 * @file
 * Iterative amplitude estimation: Grover powers chosen from the current
 * confidence interval on theta (a = sin^2 theta), no phase estimation.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qfiae/grover.hpp"

namespace qfiae {

struct IqaeConfig {
    double epsilon = 0.01;  // target half-width on a
    double alpha = 0.05;    // total failure probability
    std::int64_t shots_per_round = 100;
    int max_rounds = 0;     // 0 selects 10 * planned_rounds()

    /// Throws std::invalid_argument unless 0 < epsilon < 0.5, 0 < alpha < 1, shots >= 1.
    void validate() const;
    /// T = ceil(log2(pi / (8 epsilon))), at least 1.
    int planned_rounds() const;
    int round_limit() const;
    /// Per-round failure budget alpha / T.
    double alpha_round() const;
};

/// Confidence interval on theta, 0 <= lo <= hi <= pi/2.
struct ThetaInterval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
};

struct NextK {
    int k = 0;
    bool up = true;

    bool operator==(const NextK&) const = default;
};

/// True when [(4k+2) lo, (4k+2) hi] mod 2 pi lies in [0, pi] (up) or [pi, 2 pi] (down).
bool half_plane_contains(int k, const ThetaInterval& interval, bool up);

/**
 * Largest k >= 2 k_current for which (4k+2) maps the interval into a single
 * half-plane, searching downward from K_max = floor(pi / width). Returns the
 * inputs unchanged when no such k exists or the interval is degenerate.
 */
NextK find_next_k(int k_current, const ThetaInterval& interval, bool up_current);

struct ProbabilityInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Two-sided Chernoff-Hoeffding interval p_hat +- sqrt(ln(2/alpha) / (2 N)), clamped to [0, 1].
ProbabilityInterval confidence_update(std::int64_t hits, std::int64_t total_shots,
                                      double alpha_round);

struct IqaeRound {
    int k = 0;
    bool up = true;
    std::int64_t hits = 0;         // accumulated at this k
    std::int64_t shots = 0;        // accumulated at this k
    ThetaInterval theta;           // running interval after the round
    bool empty_intersection = false;
};

struct IqaeResult {
    double a_estimate = 0.0;
    double half_width = 0.0;
    double a_lo = 0.0;
    double a_hi = 1.0;
    std::int64_t oracle_calls = 0;  // A costs 1, Q costs 2, per shot
    int rounds = 0;
    std::vector<int> k_schedule;
    bool converged = false;
    int flagged_rounds = 0;         // rounds whose interval intersection was empty
    std::vector<IqaeRound> trace;

    double mean_k() const;
    int max_k() const;
};

/// Runs the estimator on the circuits built from `oracle`. Deterministic in `seed`.
IqaeResult run_iqae(const SineSquaredOracle& oracle, const IqaeConfig& config,
                    std::uint64_t seed);

/// Same loop over prebuilt circuits; the good state is `ancilla` = 1.
IqaeResult run_iqae(const GroverPair& pair, int ancilla, const IqaeConfig& config,
                    std::uint64_t seed);

}  // namespace qfiae
