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
 * Depth accounting for the model circuit and the amplified estimation circuit:
 *
 *   QF_depth   = block + layers * (block + encoding)
 *   IQAE_depth = A + k * Q
 *
 * evaluated once with the published reference constants (block 3, encoding 1,
 * A 4, Q 12) and once with depths measured on circuits built here.
 */
#pragma once

#include <string>

namespace qfiae {

struct DepthConstants {
    int block = 0;     // trainable RZ RY RZ block
    int encoding = 0;  // data-encoding gate
    int a = 0;         // state preparation A
    int q = 0;         // Grover operator Q
};

struct DepthRow {
    DepthConstants constants;
    long qf_formula = 0;
    long iqae_formula = 0;
};

struct DepthTable {
    int layers = 0;
    int k = 0;
    int n_qubits = 0;
    DepthRow reference;  // published constants
    DepthRow measured;   // constituent depths measured on our circuits
    long qf_circuit = 0;    // depth of the full model circuit
    long iqae_circuit = 0;  // depth of the full A Q^k circuit
};

DepthConstants reference_constants();

long qf_depth_formula(const DepthConstants& c, int layers);
long iqae_depth_formula(const DepthConstants& c, int k);

/// Throws std::invalid_argument for layers < 1, k < 0 or a bad register size.
DepthTable depth_report(int layers, int k, int n_qubits);

std::string format_depth_table(const DepthTable& table);

}  // namespace qfiae
