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
 * Command-line front end.
 *
 *   qfiae fit|integrate|compare|depth [--config FILE] [--key value ...]
 *
 * The config file is flat TOML/INI (key = value). Every key is also a flag of
 * the same name and the flag wins. Output files go to --output_dir, else to
 * $QFIAE_OUTPUT_DIR, else to the working directory.
 *
 * Exit status: 0 success, 1 run failure, 2 configuration error.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qfiae/integrator.hpp"

namespace qfiae::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRunFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kOutputDirEnv = "QFIAE_OUTPUT_DIR";

struct RunConfig {
    std::string command;
    std::string target = "one_plus_x_squared";
    double x_lo = 0.0;
    double x_hi = 1.0;
    int n_fourier = 10;
    int n_qubits_iqae = 4;
    double epsilon = 0.01;
    double alpha = 0.05;
    std::int64_t shots = 100;
    int max_rounds = 0;
    std::string method = "QFIAE";
    double learning_rate = 0.05;
    int epochs = 100;
    int num_points = 200;
    double fit_lo = -1.0;
    double fit_hi = 1.0;
    double init_stddev = 0.1;
    std::uint64_t seed = 0;
    double loss_ceiling = 0.05;
    bool exact_amplitudes = false;
    int repeat = 1;
    std::int64_t mc_samples = 1'000'000;
    std::vector<std::string> methods = {"QFIAE", "FQMCI"};
    std::vector<int> n_fourier_list = {5, 10};
    std::vector<std::int64_t> shots_list = {100, 1000};
    int layers = 10;
    int k = 9;
    std::string output_dir;

    /// Throws std::invalid_argument on inconsistent values.
    void validate() const;
    /// Request for one run with the given method, degree, shots and master seed.
    IntegralRequest request(Method method, int n_fourier, std::int64_t shots,
                            std::uint64_t seed) const;
    TrainingConfig training() const;
};

/// Effective configuration as flat `key = value` text accepted by --config.
std::string to_config_text(const RunConfig& config);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfiae::cli
