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
 * Circuit builders for Monte Carlo integration by amplitude estimation of
 * E[sin^2(m x + c)] under a uniform distribution on a 2^n-point grid.
 *
 * Layout: register qubits 0..n-1 hold the grid index j (qubit 0 is its least
 * significant bit), qubit n is the ancilla whose |1> branch is the good state.
 */
#pragma once

#include <cstddef>

#include "qfiae/circuit.hpp"

namespace qfiae {

/**
 * sin^2(slope * x + offset) sampled on the midpoint grid
 * x_j = x_min + (j + 1/2) * delta_x, j = 0..2^n - 1.
 */
struct SineSquaredOracle {
    double slope = 0.0;   // radians per unit of x
    double offset = 0.0;  // radians
    int num_qubits = 1;   // register size n (the ancilla is extra)
    double x_min = 0.0;
    double delta_x = 1.0;

    /// Grid of 2^n cells covering [x_lo, x_hi].
    static SineSquaredOracle over_interval(double slope, double offset, int num_qubits,
                                           double x_lo, double x_hi);

    std::size_t grid_size() const { return std::size_t{1} << num_qubits; }
    double grid_point(std::size_t j) const;
    /// sin^2(slope * x_j + offset).
    double value_at(std::size_t j) const;
    int ancilla() const { return num_qubits; }
    int total_qubits() const { return num_qubits + 1; }

    /// Throws std::invalid_argument on a bad register size or non-finite fields.
    void validate() const;
};

/// Hadamard on each of `num_qubits` register qubits.
Circuit build_uniform_loader(int num_qubits);

/**
 * RY(2 (m (x_min + dx/2) + c)) on the ancilla, then for every register bit i
 * an RY(2 m dx 2^i) on the ancilla controlled by bit i. For basis state |j>
 * the ancilla ends up in cos(m x_j + c)|0> + sin(m x_j + c)|1>.
 */
Circuit build_payoff_rotation(const SineSquaredOracle& oracle);

/// A = R (P (x) I): A|0> has ancilla-1 probability 2^-n sum_j sin^2(m x_j + c).
Circuit build_A(const SineSquaredOracle& oracle);

/// S_chi: Z on the ancilla.
Circuit build_good_state_reflection(int num_register_qubits);

/// S_0 = I - 2|0><0| on all qubits as an X-conjugated multi-controlled Z.
Circuit build_zero_reflection(int total_qubits);

/// Q = A S_0 A^-1 S_chi (global phase -1 dropped).
Circuit build_Q(const SineSquaredOracle& oracle);

struct GroverPair {
    Circuit circuit_A;
    Circuit circuit_Q;
};

GroverPair build_grover_pair(const SineSquaredOracle& oracle);

/// A followed by `k` copies of Q.
Circuit build_amplified(const GroverPair& pair, int k);

}  // namespace qfiae
