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

#include "qfiae/grover.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "qfiae/state_vector.hpp"
#include "reference_sim.hpp"

using namespace qfiae;

namespace {

constexpr double kPi = std::numbers::pi;

/// 2^-n sum_j sin^2(m x_j + c) over the midpoint grid of [lo, hi].
double brute_force_amplitude(double m, double c, int n, double lo, double hi) {
    const std::size_t size = std::size_t{1} << n;
    const double dx = (hi - lo) / static_cast<double>(size);
    double sum = 0;
    for (std::size_t j = 0; j < size; ++j) {
        const double x = lo + (static_cast<double>(j) + 0.5) * dx;
        sum += std::pow(std::sin(m * x + c), 2);
    }
    return sum / static_cast<double>(size);
}

double prob_after(const SineSquaredOracle& oracle, int k) {
    auto s = apply_circuit(new_zero_state(oracle.total_qubits()),
                           build_amplified(build_grover_pair(oracle), k));
    return ancilla_one_probability(s, oracle.ancilla());
}

}  // namespace

TEST(Oracle, midpoint_grid) {
    const auto o = SineSquaredOracle::over_interval(0.5, 0.3, 4, 0.0, 1.0);
    ASSERT_EQ(o.grid_size(), 16u);
    ASSERT_DOUBLE_EQ(o.delta_x, 1.0 / 16);
    ASSERT_DOUBLE_EQ(o.grid_point(0), 1.0 / 32);
    ASSERT_DOUBLE_EQ(o.grid_point(15), 31.0 / 32);
    for (std::size_t j = 0; j < 16; ++j) {
        ASSERT_NEAR(o.value_at(j), std::pow(std::sin(0.5 * (j + 0.5) / 16 + 0.3), 2), 1e-10);
    }
    ASSERT_EQ(o.ancilla(), 4);
    ASSERT_EQ(o.total_qubits(), 5);
}

TEST(Oracle, rejects_bad_fields) {
    ASSERT_THROW(SineSquaredOracle::over_interval(1, 0, 2, 1.0, 1.0), std::invalid_argument);
    SineSquaredOracle o;
    o.num_qubits = 0;
    ASSERT_THROW(o.validate(), std::invalid_argument);
    o.num_qubits = 2;
    o.delta_x = 0;
    ASSERT_THROW(o.validate(), std::invalid_argument);
    o.delta_x = 0.1;
    o.slope = std::nan("");
    ASSERT_THROW(o.validate(), std::invalid_argument);
}

TEST(Loader, uniform_amplitudes) {
    auto s1 = apply_circuit(new_zero_state(1), build_uniform_loader(1));
    ASSERT_NEAR(s1[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(s1[1].real(), 1 / std::sqrt(2.0), 1e-15);

    auto s4 = apply_circuit(new_zero_state(4), build_uniform_loader(4));
    for (std::size_t j = 0; j < 16; ++j) ASSERT_NEAR(std::norm(s4[j]), 1.0 / 16, 1e-15);
    ASSERT_EQ(measure_depth(build_uniform_loader(4)).depth, 1u);
}

TEST(PayoffRotation, structure) {
    const auto o = SineSquaredOracle::over_interval(0.5, 0.3, 3, -1.0, 1.0);
    const Circuit r = build_payoff_rotation(o);
    ASSERT_EQ(r.num_qubits(), 4);
    ASSERT_EQ(r.size(), 4u);
    ASSERT_EQ(r.gates()[0], Gate::ry(3, 2 * (0.5 * (-1.0 + 0.125) + 0.3)));
    for (int i = 0; i < 3; ++i) {
        ASSERT_EQ(r.gates()[1 + i].kind, GateKind::RY);
        ASSERT_EQ(r.gates()[1 + i].target, 3);
        ASSERT_EQ(r.gates()[1 + i].controls(), std::vector<int>{i});
        ASSERT_NEAR(r.gates()[1 + i].angle, 2 * 0.5 * 0.25 * (1 << i), 1e-15);
    }
}

TEST(PayoffRotation, constant_payoffs) {
    for (double c : {kPi / 2, 0.0}) {
        const auto o = SineSquaredOracle::over_interval(0.0, c, 3, 0.0, 1.0);
        for (std::size_t j = 0; j < 8; ++j) {
            refsim::Vec v(16, 0.0);
            v[j] = 1.0;
            v = refsim::run_reference(build_payoff_rotation(o), v);
            ASSERT_NEAR(refsim::prob_one(v, 3), c == 0.0 ? 0.0 : 1.0, 1e-12);
        }
    }
}

TEST(PayoffRotation, per_basis_state_amplitudes) {
    const double m = 0.5, c = 0.3;
    SineSquaredOracle o{m, c, 4, 0.0, 1.0 / 16};
    const Circuit r = build_payoff_rotation(o);
    for (std::size_t j = 0; j < 16; ++j) {
        auto s = new_zero_state(5);
        for (int q = 0; q < 4; ++q) {
            if ((j >> q) & 1u) s.apply(Gate::x(q));
        }
        s.apply(r);
        const double xj = (j + 0.5) / 16;
        ASSERT_NEAR(ancilla_one_probability(s, 4), std::pow(std::sin(m * xj + c), 2), 1e-12);
        ASSERT_NEAR(s[j | 16].real(), std::sin(m * xj + c), 1e-12);
    }
}

TEST(BuildA, amplitude_matches_brute_force) {
    const auto half = SineSquaredOracle::over_interval(0.0, kPi / 4, 4, 0.0, 1.0);
    auto s = apply_circuit(new_zero_state(5), build_A(half));
    ASSERT_NEAR(ancilla_one_probability(s, 4), 0.5, 1e-12);

    // First cosine harmonic of a unit-frequency series: slope 1/2, offset 0.
    const auto first = SineSquaredOracle::over_interval(0.5, 0.0, 4, 0.0, 1.0);
    auto t = apply_circuit(new_zero_state(5), build_A(first));
    const double a = ancilla_one_probability(t, 4);
    ASSERT_NEAR(a, brute_force_amplitude(0.5, 0.0, 4, 0.0, 1.0), 1e-12);
    const double theta = std::asin(std::sqrt(a));
    ASSERT_GE(theta, 0.0);
    ASSERT_LE(theta, kPi / 2);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> slope(0, 3), offset(0, kPi), end(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const double lo = end(rng);
        const double hi = lo + 0.1 + std::abs(end(rng));
        const double m = slope(rng), c = offset(rng);
        const int n = 1 + trial % 5;
        const auto o = SineSquaredOracle::over_interval(m, c, n, lo, hi);
        auto u = apply_circuit(new_zero_state(n + 1), build_A(o));
        ASSERT_NEAR(ancilla_one_probability(u, n), brute_force_amplitude(m, c, n, lo, hi), 1e-10);
    }
}

TEST(Reflections, zero_reflection) {
    const Circuit s0 = build_zero_reflection(3);
    for (std::size_t j = 0; j < 8; ++j) {
        refsim::Vec v(8, 0.0);
        v[j] = 1.0;
        auto out = refsim::run_reference(s0, v);
        for (std::size_t i = 0; i < 8; ++i) {
            const double expect = i == j ? (j == 0 ? -1.0 : 1.0) : 0.0;
            ASSERT_NEAR(std::abs(out[i] - expect), 0.0, 1e-12);
        }
    }
}

TEST(Reflections, good_state_reflection) {
    const Circuit sx = build_good_state_reflection(2);
    for (std::size_t j = 0; j < 8; ++j) {
        refsim::Vec v(8, 0.0);
        v[j] = 1.0;
        auto out = refsim::run_reference(sx, v);
        ASSERT_NEAR(out[j].real(), (j & 4u) ? -1.0 : 1.0, 1e-12);
    }
}

TEST(BuildQ, angle_law_small_k) {
    const auto o = SineSquaredOracle::over_interval(1.3, 0.4, 4, 0.0, 1.0);
    const double theta = std::asin(std::sqrt(brute_force_amplitude(1.3, 0.4, 4, 0.0, 1.0)));
    for (int k = 0; k <= 3; ++k) {
        ASSERT_NEAR(prob_after(o, k), std::pow(std::sin((2 * k + 1) * theta), 2), 1e-9);
    }
}

TEST(BuildQ, pi_over_six_reaches_one) {
    const auto o = SineSquaredOracle::over_interval(0.0, kPi / 6, 3, 0.0, 1.0);
    ASSERT_NEAR(prob_after(o, 1), 1.0, 1e-9);
}

TEST(BuildQ, matches_reflection_product) {
    const auto o = SineSquaredOracle::over_interval(0.9, 0.2, 2, 0.0, 1.0);
    const Circuit a = build_A(o);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    refsim::Vec v(8);
    double norm = 0;
    for (auto& x : v) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(norm);

    // -A S0 A^dagger S_chi, with S0 = I - 2|0><0| and S_chi = I - 2 P_good.
    refsim::Vec w = v;
    for (std::size_t j = 0; j < 8; ++j) {
        if (j & 4u) w[j] = -w[j];
    }
    w = refsim::run_reference(a.inverse(), w);
    w[0] = -w[0];
    w = refsim::run_reference(a, w);
    for (auto& x : w) x = -x;

    auto q = refsim::run_reference(build_Q(o), v);
    // Circuit drops the global -1.
    for (std::size_t j = 0; j < 8; ++j) ASSERT_NEAR(std::abs(q[j] + w[j]), 0.0, 1e-12);
}

TEST(BuildQ, inverse_restores) {
    const auto o = SineSquaredOracle::over_interval(0.7, 1.1, 3, 0.0, 1.0);
    const Circuit q = build_Q(o);
    auto start = apply_circuit(new_zero_state(4), build_A(o));
    auto s = start;
    s.apply(q);
    s.apply(q);
    s.apply(q.inverse());
    s.apply(q.inverse());
    for (std::size_t j = 0; j < 16; ++j) ASSERT_NEAR(std::abs(s[j] - start[j]), 0.0, 1e-9);
}

TEST(BuildQ, angle_law_random_oracles) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> slope(0, 3), offset(0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        const double m = slope(rng), c = offset(rng);
        const auto o = SineSquaredOracle::over_interval(m, c, n, 0.0, 1.0);
        const double theta = std::asin(std::sqrt(brute_force_amplitude(m, c, n, 0.0, 1.0)));
        for (int k = 0; k <= 5; ++k) {
            ASSERT_NEAR(prob_after(o, k), std::pow(std::sin((2 * k + 1) * theta), 2), 1e-8)
                << "trial " << trial << " k " << k;
        }
    }
}

TEST(BuildAmplified, sizes) {
    const auto pair = build_grover_pair(SineSquaredOracle::over_interval(1, 0, 2, 0, 1));
    ASSERT_EQ(build_amplified(pair, 0).size(), pair.circuit_A.size());
    ASSERT_EQ(build_amplified(pair, 3).size(), pair.circuit_A.size() + 3 * pair.circuit_Q.size());
    ASSERT_THROW(build_amplified(pair, -1), std::invalid_argument);
}
