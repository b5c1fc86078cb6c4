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

#include "qfiae/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qfiae/rng.hpp"

namespace qfiae {

namespace {

void check_qubit(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside " +
                                std::to_string(state.num_qubits()) + "-qubit state");
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("num_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(num_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    const int n = std::countr_zero(dim);
    if (n > kMaxQubits) {
        throw std::invalid_argument("state too large");
    }
    StateVector s(n, std::move(amplitudes));
    if (std::abs(s.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

void StateVector::apply(const Gate& gate) {
    validate_gate(gate, num_qubits_);
    const auto m = gate.matrix();
    const std::size_t tbit = std::size_t{1} << gate.target;
    const std::size_t cmask = gate.control_mask;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) != 0 || (i & cmask) != cmask) {
            continue;
        }
        const Complex a0 = amplitudes_[i];
        const Complex a1 = amplitudes_[i | tbit];
        amplitudes_[i] = m[0] * a0 + m[1] * a1;
        amplitudes_[i | tbit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.num_qubits() > num_qubits_) {
        throw std::out_of_range("circuit is wider than the state");
    }
    for (const Gate& g : circuit.gates()) {
        apply(g);
    }
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Complex& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector new_zero_state(int num_qubits) { return StateVector(num_qubits); }

StateVector apply_gate(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    state.apply(circuit);
    return state;
}

double ancilla_one_probability(const StateVector& state, int qubit) {
    check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p1 = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            p1 += std::norm(amps[i]);
        }
    }
    return std::clamp(p1, 0.0, 1.0);
}

double expectation_z(const StateVector& state, int qubit) {
    check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double ez = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        ez += (i & bit) ? -std::norm(amps[i]) : std::norm(amps[i]);
    }
    return std::clamp(ez, -1.0, 1.0);
}

std::int64_t sample_ancilla(const StateVector& state, int qubit, std::int64_t shots,
                            std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const double p = ancilla_one_probability(state, qubit);
    if (p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return shots;
    }
    Rng rng = make_rng(seed);
    std::binomial_distribution<std::int64_t> dist(shots, p);
    return dist(rng);
}

}  // namespace qfiae
