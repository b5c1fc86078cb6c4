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

#include "qfiae/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfiae {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::Phase: return "PHASE";
    }
    return "?";
}

Gate Gate::controlled_by(std::initializer_list<int> controls) const {
    return controlled_by(std::vector<int>(controls));
}

Gate Gate::controlled_by(const std::vector<int>& controls) const {
    Gate g = *this;
    for (int c : controls) {
        if (c < 0 || c >= kMaxQubits) {
            throw std::out_of_range("control qubit " + std::to_string(c) + " out of range");
        }
        g.control_mask |= std::uint32_t{1} << c;
    }
    return g;
}

std::vector<int> Gate::controls() const {
    std::vector<int> out;
    for (int q = 0; q < kMaxQubits; ++q) {
        if (control_mask & (std::uint32_t{1} << q)) {
            out.push_back(q);
        }
    }
    return out;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::Phase: g.angle = -angle; break;
        default: break;
    }
    return g;
}

std::array<std::complex<double>, 4> Gate::matrix() const {
    using C = std::complex<double>;
    switch (kind) {
        case GateKind::H: {
            const double s = std::numbers::sqrt2 / 2.0;
            return {C{s}, C{s}, C{s}, C{-s}};
        }
        case GateKind::X: return {C{0.0}, C{1.0}, C{1.0}, C{0.0}};
        case GateKind::Z: return {C{1.0}, C{0.0}, C{0.0}, C{-1.0}};
        case GateKind::RY: {
            const double c = std::cos(angle / 2.0);
            const double s = std::sin(angle / 2.0);
            return {C{c}, C{-s}, C{s}, C{c}};
        }
        case GateKind::RZ:
            return {std::polar(1.0, -angle / 2.0), C{0.0}, C{0.0}, std::polar(1.0, angle / 2.0)};
        case GateKind::Phase: return {C{1.0}, C{0.0}, C{0.0}, std::polar(1.0, angle)};
    }
    throw std::logic_error("unknown gate kind");
}

void validate_gate(const Gate& gate, int num_qubits) {
    if (gate.target < 0 || gate.target >= num_qubits) {
        throw std::out_of_range("gate target " + std::to_string(gate.target) + " outside " +
                                std::to_string(num_qubits) + "-qubit register");
    }
    if (num_qubits < 32 && (gate.control_mask >> num_qubits) != 0) {
        throw std::out_of_range("gate control outside " + std::to_string(num_qubits) +
                                "-qubit register");
    }
    if (gate.control_mask & (std::uint32_t{1} << gate.target)) {
        throw std::out_of_range("gate control coincides with its target");
    }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit register size must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

Circuit& Circuit::add(const Gate& gate) {
    validate_gate(gate, num_qubits_);
    gates_.push_back(gate);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::out_of_range("cannot append a wider circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(num_qubits_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        inv.gates_.push_back(it->inverse());
    }
    return inv;
}

DepthMetrics measure_depth(const Circuit& circuit) {
    std::vector<std::size_t> level(static_cast<std::size_t>(circuit.num_qubits()), 0);
    std::size_t depth = 0;
    for (const Gate& g : circuit.gates()) {
        const std::uint32_t support = g.support_mask();
        std::size_t start = 0;
        for (int q = 0; q < circuit.num_qubits(); ++q) {
            if (support & (std::uint32_t{1} << q)) {
                start = std::max(start, level[q]);
            }
        }
        for (int q = 0; q < circuit.num_qubits(); ++q) {
            if (support & (std::uint32_t{1} << q)) {
                level[q] = start + 1;
            }
        }
        depth = std::max(depth, start + 1);
    }
    return {circuit.size(), depth};
}

}  // namespace qfiae
