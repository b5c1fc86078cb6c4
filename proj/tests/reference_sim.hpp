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

// Naive full-matrix simulator used as an independent oracle in tests.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qfiae/circuit.hpp"

namespace qfiae::refsim {

using Cx = std::complex<double>;
using Vec = std::vector<Cx>;

inline void single_qubit_matrix(const Gate& g, Cx m[2][2]) {
    const double h = g.angle / 2;
    const Cx i(0, 1);
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1 / std::sqrt(2.0);
            m[0][0] = r, m[0][1] = r, m[1][0] = r, m[1][1] = -r;
            return;
        }
        case GateKind::X: m[0][0] = 0, m[0][1] = 1, m[1][0] = 1, m[1][1] = 0; return;
        case GateKind::Z: m[0][0] = 1, m[0][1] = 0, m[1][0] = 0, m[1][1] = -1; return;
        case GateKind::RY:
            m[0][0] = std::cos(h), m[0][1] = -std::sin(h), m[1][0] = std::sin(h),
            m[1][1] = std::cos(h);
            return;
        case GateKind::RZ:
            m[0][0] = std::exp(-i * h), m[0][1] = 0, m[1][0] = 0, m[1][1] = std::exp(i * h);
            return;
        case GateKind::Phase:
            m[0][0] = 1, m[0][1] = 0, m[1][0] = 0, m[1][1] = std::exp(i * g.angle);
            return;
    }
}

/// Dense 2^n x 2^n unitary of one gate, built column by column.
inline std::vector<Vec> full_matrix(const Gate& g, int n) {
    const std::size_t dim = std::size_t{1} << n;
    Cx m[2][2];
    single_qubit_matrix(g, m);
    std::vector<Vec> u(dim, Vec(dim, 0.0));
    for (std::size_t col = 0; col < dim; ++col) {
        bool active = true;
        for (int q = 0; q < n; ++q) {
            if ((g.control_mask >> q) & 1u) active = active && ((col >> q) & 1u);
        }
        if (!active) {
            u[col][col] = 1.0;
            continue;
        }
        const std::size_t bit = (col >> g.target) & 1u;
        const std::size_t base = col & ~(std::size_t{1} << g.target);
        u[base][col] += m[0][bit];
        u[base | (std::size_t{1} << g.target)][col] += m[1][bit];
    }
    return u;
}

inline Vec mat_vec(const std::vector<Vec>& u, const Vec& v) {
    Vec out(v.size(), 0.0);
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += u[r][c] * v[c];
    }
    return out;
}

inline Vec run_reference(const Circuit& circuit, Vec state) {
    for (const Gate& g : circuit.gates()) {
        state = mat_vec(full_matrix(g, circuit.num_qubits()), state);
    }
    return state;
}

inline Vec zero_vec(int n) {
    Vec v(std::size_t{1} << n, 0.0);
    v[0] = 1.0;
    return v;
}

inline double prob_one(const Vec& v, int qubit) {
    double p = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if ((j >> qubit) & 1u) p += std::norm(v[j]);
    }
    return p;
}

}  // namespace qfiae::refsim
