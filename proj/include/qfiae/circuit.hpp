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
 * Gate set and ordered gate lists used by the dense simulator.
 *
 * Qubit ordering: qubit q is bit q of the basis-state index, i.e. qubit 0 is
 * the least-significant bit. Every builder in this project follows it.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qfiae {

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

enum class GateKind : std::uint8_t { H, X, Z, RY, RZ, Phase };

std::string to_string(GateKind kind);

/**
 * A single-target gate with an arbitrary set of control qubits.
 *
 * Controls are stored as a bit mask over qubit indices; the gate acts on the
 * target only for basis states whose control bits are all 1.
 */
struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    std::uint32_t control_mask = 0;
    double angle = 0.0;

    static Gate h(int target) { return {GateKind::H, target, 0, 0.0}; }
    static Gate x(int target) { return {GateKind::X, target, 0, 0.0}; }
    static Gate z(int target) { return {GateKind::Z, target, 0, 0.0}; }
    static Gate ry(int target, double angle) { return {GateKind::RY, target, 0, angle}; }
    static Gate rz(int target, double angle) { return {GateKind::RZ, target, 0, angle}; }
    static Gate phase(int target, double angle) { return {GateKind::Phase, target, 0, angle}; }

    /// Returns a copy controlled on the given qubits (in addition to existing controls).
    Gate controlled_by(std::initializer_list<int> controls) const;
    Gate controlled_by(const std::vector<int>& controls) const;

    std::vector<int> controls() const;
    std::uint32_t support_mask() const { return control_mask | (std::uint32_t{1} << target); }

    /// Exact inverse: rotation angles negated, self-inverse gates unchanged.
    Gate inverse() const;

    /// Row-major 2x2 matrix applied to the target.
    std::array<std::complex<double>, 4> matrix() const;

    bool operator==(const Gate&) const = default;
};

struct DepthMetrics {
    std::size_t gate_count = 0;
    std::size_t depth = 0;
};

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws std::out_of_range when the gate does not fit this register.
    Circuit& add(const Gate& gate);
    /// Appends every gate of `other`, which may act on a smaller register.
    Circuit& append(const Circuit& other);

    /// Reversed gate order with each gate inverted.
    Circuit inverse() const;

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Throws std::out_of_range if the gate references qubits outside `num_qubits`
/// or a control coincides with the target.
void validate_gate(const Gate& gate, int num_qubits);

/**
 * Circuit depth as the longest chain of gates: every gate, including
 * multi-controlled ones, occupies one time step on each qubit it touches and
 * is scheduled as early as possible. Gates on disjoint qubits share a step.
 */
DepthMetrics measure_depth(const Circuit& circuit);

}  // namespace qfiae
