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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qfiae/rng.hpp"
#include "qfiae/state_vector.hpp"

namespace qfiae {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kMaxScaling = 40'000'000;

/// K * theta split into a whole number of turns and the remainder in [0, 2 pi).
struct Wrapped {
    double turns;
    double lo;
    double hi;
};

Wrapped wrap(std::int64_t big_k, const ThetaInterval& interval) {
    const double kd = static_cast<double>(big_k);
    const double scaled = kd * interval.lo;
    const double turns = std::floor(scaled / kTwoPi);
    const double lo = scaled - turns * kTwoPi;
    return {turns, lo, lo + kd * interval.width()};
}

double sin_squared(double theta) {
    const double s = std::sin(theta);
    return s * s;
}

}  // namespace

void IqaeConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw std::invalid_argument("epsilon must lie in (0, 0.5)");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (shots_per_round < 1) {
        throw std::invalid_argument("shots_per_round must be >= 1");
    }
    if (max_rounds < 0) {
        throw std::invalid_argument("max_rounds must be >= 0");
    }
}

int IqaeConfig::planned_rounds() const {
    const double t = std::ceil(std::log2(kPi / (8.0 * epsilon)));
    return std::max(1, static_cast<int>(t));
}

int IqaeConfig::round_limit() const {
    return max_rounds > 0 ? max_rounds : 10 * planned_rounds();
}

double IqaeConfig::alpha_round() const { return alpha / planned_rounds(); }

double IqaeResult::mean_k() const {
    if (k_schedule.empty()) {
        return 0.0;
    }
    const double total = std::accumulate(k_schedule.begin(), k_schedule.end(), 0.0);
    return total / static_cast<double>(k_schedule.size());
}

int IqaeResult::max_k() const {
    return k_schedule.empty() ? 0 : *std::max_element(k_schedule.begin(), k_schedule.end());
}

bool half_plane_contains(int k, const ThetaInterval& interval, bool up) {
    const Wrapped w = wrap(4 * static_cast<std::int64_t>(k) + 2, interval);
    if (up) {
        return w.hi <= kPi;
    }
    return w.lo >= kPi && w.hi <= kTwoPi;
}

NextK find_next_k(int k_current, const ThetaInterval& interval, bool up_current) {
    const double width = interval.width();
    if (!(width > 0.0)) {
        return {k_current, up_current};
    }
    const double bound = std::floor(kPi / width);
    std::int64_t big_k =
        bound >= static_cast<double>(kMaxScaling) ? kMaxScaling : static_cast<std::int64_t>(bound);
    // Largest K <= K_max with K = 2 (mod 4).
    big_k -= ((big_k - 2) % 4 + 4) % 4;
    const std::int64_t k_floor = 2 * static_cast<std::int64_t>(k_current);
    for (; big_k >= 2; big_k -= 4) {
        const std::int64_t k = (big_k - 2) / 4;
        if (k < k_floor) {
            break;
        }
        const int ki = static_cast<int>(k);
        if (half_plane_contains(ki, interval, true)) {
            return {ki, true};
        }
        if (half_plane_contains(ki, interval, false)) {
            return {ki, false};
        }
    }
    return {k_current, up_current};
}

ProbabilityInterval confidence_update(std::int64_t hits, std::int64_t total_shots,
                                      double alpha_round) {
    if (total_shots < 1 || hits < 0 || hits > total_shots) {
        throw std::invalid_argument("confidence_update needs 0 <= hits <= total_shots, shots >= 1");
    }
    if (!(alpha_round > 0.0 && alpha_round < 1.0)) {
        throw std::invalid_argument("alpha_round must lie in (0, 1)");
    }
    const double p_hat = static_cast<double>(hits) / static_cast<double>(total_shots);
    const double delta =
        std::sqrt(std::log(2.0 / alpha_round) / (2.0 * static_cast<double>(total_shots)));
    return {std::max(0.0, p_hat - delta), std::min(1.0, p_hat + delta)};
}

IqaeResult run_iqae(const SineSquaredOracle& oracle, const IqaeConfig& config,
                    std::uint64_t seed) {
    return run_iqae(build_grover_pair(oracle), oracle.ancilla(), config, seed);
}

IqaeResult run_iqae(const GroverPair& pair, int ancilla, const IqaeConfig& config,
                    std::uint64_t seed) {
    config.validate();
    const double alpha_round = config.alpha_round();
    const int limit = config.round_limit();

    IqaeResult result;
    ThetaInterval theta{0.0, kPi / 2.0};
    int k = 0;
    bool up = true;
    std::int64_t hits_at_k = 0;
    std::int64_t shots_at_k = 0;

    while (true) {
        const double a_lo = sin_squared(theta.lo);
        const double a_hi = sin_squared(theta.hi);
        if (a_hi - a_lo <= 2.0 * config.epsilon) {
            result.converged = true;
            break;
        }
        if (result.rounds >= limit) {
            break;
        }

        const NextK next = find_next_k(k, theta, up);
        if (next.k != k) {
            hits_at_k = 0;
            shots_at_k = 0;
        }
        k = next.k;
        up = next.up;
        if (!half_plane_contains(k, theta, up)) {
            throw std::logic_error("Grover power violates half-plane containment");
        }

        StateVector state(pair.circuit_A.num_qubits());
        state.apply(pair.circuit_A);
        for (int i = 0; i < k; ++i) {
            state.apply(pair.circuit_Q);
        }
        const std::int64_t shots = config.shots_per_round;
        hits_at_k += sample_ancilla(state, ancilla, shots,
                                    derive_seed(seed, static_cast<std::uint64_t>(result.rounds)));
        shots_at_k += shots;
        result.oracle_calls += shots * (1 + 2 * static_cast<std::int64_t>(k));

        const ProbabilityInterval p = confidence_update(hits_at_k, shots_at_k, alpha_round);
        const std::int64_t big_k = 4 * static_cast<std::int64_t>(k) + 2;
        // cos(K theta) = 1 - 2 p; arccos is increasing in p on [0, pi].
        double ang_lo = std::acos(std::clamp(1.0 - 2.0 * p.lo, -1.0, 1.0));
        double ang_hi = std::acos(std::clamp(1.0 - 2.0 * p.hi, -1.0, 1.0));
        if (!up) {
            const double lo = kTwoPi - ang_hi;
            ang_hi = kTwoPi - ang_lo;
            ang_lo = lo;
        }
        const Wrapped w = wrap(big_k, theta);
        const double kd = static_cast<double>(big_k);
        const ThetaInterval candidate{(w.turns * kTwoPi + ang_lo) / kd,
                                      (w.turns * kTwoPi + ang_hi) / kd};
        const ThetaInterval merged{std::max(theta.lo, candidate.lo),
                                   std::min(theta.hi, candidate.hi)};

        IqaeRound round;
        round.k = k;
        round.up = up;
        round.hits = hits_at_k;
        round.shots = shots_at_k;
        if (merged.lo > merged.hi) {
            round.empty_intersection = true;
            ++result.flagged_rounds;
        } else {
            theta = merged;
        }
        round.theta = theta;
        result.trace.push_back(round);
        result.k_schedule.push_back(k);
        ++result.rounds;
    }

    result.a_lo = sin_squared(theta.lo);
    result.a_hi = sin_squared(theta.hi);
    result.a_estimate = 0.5 * (result.a_lo + result.a_hi);
    result.half_width = 0.5 * (result.a_hi - result.a_lo);
    return result;
}

}  // namespace qfiae
