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
 * Dense state-vector simulator.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qfiae/circuit.hpp"

namespace qfiae {

using Complex = std::complex<double>;

/**
 * 2^n complex amplitudes, normalized. Qubit q is bit q of the basis index.
 */
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits; throws std::invalid_argument outside [1, 24].
    explicit StateVector(int num_qubits);

    /// Validates a power-of-two length and unit norm (within 1e-10).
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

    void apply(const Gate& gate);
    void apply(const Circuit& circuit);

    /// Sum of squared magnitudes.
    double norm() const;

  private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

StateVector new_zero_state(int num_qubits);

StateVector apply_gate(StateVector state, const Gate& gate);
StateVector apply_circuit(StateVector state, const Circuit& circuit);

/// <Z> on one qubit: P(bit = 0) - P(bit = 1).
double expectation_z(const StateVector& state, int qubit);

/// Exact marginal probability of reading 1 on `qubit`.
double ancilla_one_probability(const StateVector& state, int qubit);

/**
 * Number of 1-outcomes over `shots` measurements of `qubit`. The exact
 * marginal is computed first and a binomial count is drawn from it, which has
 * the same distribution as per-shot collapse. Deterministic in `seed`.
 */
std::int64_t sample_ancilla(const StateVector& state, int qubit, std::int64_t shots,
                            std::uint64_t seed);

}  // namespace qfiae
