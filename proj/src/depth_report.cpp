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

#include "qfiae/depth_report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qfiae/circuit.hpp"
#include "qfiae/grover.hpp"
#include "qfiae/qnn.hpp"

namespace qfiae {

DepthConstants reference_constants() { return {3, 1, 4, 12}; }

long qf_depth_formula(const DepthConstants& c, int layers) {
    return c.block + static_cast<long>(layers) * (c.block + c.encoding);
}

long iqae_depth_formula(const DepthConstants& c, int k) {
    return c.a + static_cast<long>(k) * c.q;
}

DepthTable depth_report(int layers, int k, int n_qubits) {
    if (layers < 1) {
        throw std::invalid_argument("layers must be >= 1");
    }
    if (k < 0) {
        throw std::invalid_argument("k must be >= 0");
    }
    if (n_qubits < 1 || n_qubits + 1 > kMaxQubits) {
        throw std::invalid_argument("n_qubits out of range");
    }
    DepthTable table;
    table.layers = layers;
    table.k = k;
    table.n_qubits = n_qubits;

    table.reference.constants = reference_constants();
    table.reference.qf_formula = qf_depth_formula(table.reference.constants, layers);
    table.reference.iqae_formula = iqae_depth_formula(table.reference.constants, k);

    Circuit block(1);
    block.add(Gate::rz(0, 0.1));
    block.add(Gate::ry(0, 0.2));
    block.add(Gate::rz(0, 0.3));
    Circuit encoding(1);
    encoding.add(Gate::rz(0, 0.5));

    // Representative oracle: slope and offset do not change the gate structure.
    const auto oracle = SineSquaredOracle::over_interval(0.5, 0.3, n_qubits, 0.0, 1.0);
    const GroverPair pair = build_grover_pair(oracle);

    DepthConstants& m = table.measured.constants;
    m.block = static_cast<int>(measure_depth(block).depth);
    m.encoding = static_cast<int>(measure_depth(encoding).depth);
    m.a = static_cast<int>(measure_depth(pair.circuit_A).depth);
    m.q = static_cast<int>(measure_depth(pair.circuit_Q).depth);
    table.measured.qf_formula = qf_depth_formula(m, layers);
    table.measured.iqae_formula = iqae_depth_formula(m, k);

    table.qf_circuit = static_cast<long>(
        measure_depth(build_qnn_circuit(QnnModel(layers), 0.0)).depth);
    table.iqae_circuit = static_cast<long>(measure_depth(build_amplified(pair, k)).depth);
    return table;
}

std::string format_depth_table(const DepthTable& table) {
    std::ostringstream out;
    out << "layers=" << table.layers << " k=" << table.k << " n_qubits=" << table.n_qubits
        << "\n";
    out << std::left << std::setw(20) << "source" << std::right << std::setw(8) << "A_qf"
        << std::setw(8) << "S" << std::setw(10) << "QF" << std::setw(8) << "A_iqae"
        << std::setw(8) << "Q" << std::setw(10) << "IQAE" << "\n";
    auto row = [&](const char* label, const DepthRow& r) {
        out << std::left << std::setw(20) << label << std::right << std::setw(8)
            << r.constants.block << std::setw(8) << r.constants.encoding << std::setw(10)
            << r.qf_formula << std::setw(8) << r.constants.a << std::setw(8) << r.constants.q
            << std::setw(10) << r.iqae_formula << "\n";
    };
    row("published constants", table.reference);
    row("measured", table.measured);
    out << std::left << std::setw(20) << "measured circuit" << std::right << std::setw(8) << "-"
        << std::setw(8) << "-" << std::setw(10) << table.qf_circuit << std::setw(8) << "-"
        << std::setw(8) << "-" << std::setw(10) << table.iqae_circuit << "\n";
    return out.str();
}

}  // namespace qfiae
