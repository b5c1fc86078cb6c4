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
#include <stdexcept>
#include <vector>

namespace qfiae {

SineSquaredOracle SineSquaredOracle::over_interval(double slope, double offset, int num_qubits,
                                                   double x_lo, double x_hi) {
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("interval must satisfy x_lo < x_hi");
    }
    SineSquaredOracle o;
    o.slope = slope;
    o.offset = offset;
    o.num_qubits = num_qubits;
    o.x_min = x_lo;
    o.delta_x = (x_hi - x_lo) / std::ldexp(1.0, num_qubits);
    o.validate();
    return o;
}

double SineSquaredOracle::grid_point(std::size_t j) const {
    return x_min + (static_cast<double>(j) + 0.5) * delta_x;
}

double SineSquaredOracle::value_at(std::size_t j) const {
    const double s = std::sin(slope * grid_point(j) + offset);
    return s * s;
}

void SineSquaredOracle::validate() const {
    if (num_qubits < 1 || num_qubits + 1 > kMaxQubits) {
        throw std::invalid_argument("oracle register size must be in [1, " +
                                    std::to_string(kMaxQubits - 1) + "]");
    }
    if (!std::isfinite(slope) || !std::isfinite(offset) || !std::isfinite(x_min) ||
        !std::isfinite(delta_x) || delta_x <= 0.0) {
        throw std::invalid_argument("oracle fields must be finite with delta_x > 0");
    }
}

Circuit build_uniform_loader(int num_qubits) {
    Circuit c(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        c.add(Gate::h(q));
    }
    return c;
}

Circuit build_payoff_rotation(const SineSquaredOracle& oracle) {
    oracle.validate();
    const int n = oracle.num_qubits;
    const int anc = oracle.ancilla();
    Circuit c(n + 1);
    const double base = oracle.slope * (oracle.x_min + 0.5 * oracle.delta_x) + oracle.offset;
    c.add(Gate::ry(anc, 2.0 * base));
    for (int i = 0; i < n; ++i) {
        const double step = 2.0 * oracle.slope * oracle.delta_x * std::ldexp(1.0, i);
        c.add(Gate::ry(anc, step).controlled_by({i}));
    }
    return c;
}

Circuit build_A(const SineSquaredOracle& oracle) {
    Circuit c(oracle.total_qubits());
    c.append(build_uniform_loader(oracle.num_qubits));
    c.append(build_payoff_rotation(oracle));
    return c;
}

Circuit build_good_state_reflection(int num_register_qubits) {
    Circuit c(num_register_qubits + 1);
    c.add(Gate::z(num_register_qubits));
    return c;
}

Circuit build_zero_reflection(int total_qubits) {
    Circuit c(total_qubits);
    for (int q = 0; q < total_qubits; ++q) {
        c.add(Gate::x(q));
    }
    std::vector<int> controls;
    for (int q = 0; q + 1 < total_qubits; ++q) {
        controls.push_back(q);
    }
    c.add(Gate::z(total_qubits - 1).controlled_by(controls));
    for (int q = 0; q < total_qubits; ++q) {
        c.add(Gate::x(q));
    }
    return c;
}

Circuit build_Q(const SineSquaredOracle& oracle) {
    const Circuit a = build_A(oracle);
    Circuit q(oracle.total_qubits());
    q.append(build_good_state_reflection(oracle.num_qubits));
    q.append(a.inverse());
    q.append(build_zero_reflection(oracle.total_qubits()));
    q.append(a);
    return q;
}

GroverPair build_grover_pair(const SineSquaredOracle& oracle) {
    return {build_A(oracle), build_Q(oracle)};
}

Circuit build_amplified(const GroverPair& pair, int k) {
    if (k < 0) {
        throw std::invalid_argument("Grover power must be >= 0");
    }
    Circuit c(pair.circuit_A.num_qubits());
    c.append(pair.circuit_A);
    for (int i = 0; i < k; ++i) {
        c.append(pair.circuit_Q);
    }
    return c;
}

}  // namespace qfiae
