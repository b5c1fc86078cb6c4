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
 * Single-qubit data re-uploading model.
 *
 * The circuit prepares |0>, applies the trainable block W(theta_0), then for
 * each layer l = 1..L the encoding RZ(x) followed by W(theta_l). Every block
 * W is RZ(t0), RY(t1), RZ(t2) in application order. The output is <Z>, a
 * real trigonometric polynomial in x with integer frequencies -L..L.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qfiae/circuit.hpp"
#include "qfiae/fourier.hpp"

namespace qfiae {

class QnnModel {
  public:
    /// All-zero angles (identity blocks).
    explicit QnnModel(int num_layers);
    QnnModel(int num_layers, std::vector<double> params);

    /// Angles drawn uniformly from [0, 2 pi) with the given seed.
    static QnnModel random(int num_layers, std::uint64_t seed);
    /// Angles drawn from N(0, stddev^2): every block starts close to the identity.
    static QnnModel near_identity(int num_layers, std::uint64_t seed, double stddev);

    int num_layers() const { return num_layers_; }
    std::size_t num_params() const { return params_.size(); }
    std::span<const double> params() const { return params_; }
    std::span<double> params() { return params_; }

  private:
    int num_layers_;
    std::vector<double> params_;  // 3 (L + 1) angles, block-major
};

/// The model as an explicit one-qubit circuit at input x.
Circuit build_qnn_circuit(const QnnModel& model, double x);

/// <Z> of the model circuit at x, simulated on the state-vector backend.
double model_forward(const QnnModel& model, double x);

/// Mean squared error over the points.
double loss(const QnnModel& model, std::span<const double> xs, std::span<const double> targets);

/**
 * d(loss)/d(theta) by the parameter-shift rule: each angle's derivative of
 * <Z> is (f(theta + pi/2) - f(theta - pi/2)) / 2, chained through the squared
 * error. Shifted circuits share their unshifted prefix and suffix products.
 */
std::vector<double> gradient(const QnnModel& model, std::span<const double> xs,
                             std::span<const double> targets);

struct TrainingConfig {
    double learning_rate = 0.05;
    int epochs = 100;
    int num_points = 200;
    double x_lo = -1.0;
    double x_hi = 1.0;
    std::uint64_t seed = 0;
    double init_stddev = 0.1;  // spread of the initial angles around 0

    void validate() const;
    /// Equispaced training grid including both endpoints.
    std::vector<double> training_grid() const;
    /// Held-out grid, offset by half a training step.
    std::vector<double> heldout_grid() const;
};

struct TrainingResult {
    QnnModel model;
    std::vector<double> loss_history;  // loss after each epoch's update

    double final_loss() const { return loss_history.empty() ? 0.0 : loss_history.back(); }
};

/// Standard Adam with bias correction.
class AdamOptimizer {
  public:
    explicit AdamOptimizer(double learning_rate, double beta1 = 0.9, double beta2 = 0.999,
                           double eps = 1e-8);

    void step(std::span<double> params, std::span<const double> grad);

  private:
    double lr_, beta1_, beta2_, eps_;
    long step_count_ = 0;
    std::vector<double> m_, v_;
};

/**
 * Full-batch Adam on `num_points` samples of `target`. Throws
 * std::invalid_argument if any sample leaves [-1, 1] by more than 1e-9.
 */
TrainingResult train(const std::function<double(double)>& target, const TrainingConfig& config,
                     int num_layers);

/// Coefficient of determination of the model against `target` on the held-out grid.
double r_squared(const QnnModel& model, const std::function<double(double)>& target,
                 const TrainingConfig& config);

/**
 * Exact Fourier series of the model: DFT of 2L + 1 samples over [0, 2 pi).
 * Throws std::runtime_error if the coefficients are not conjugate symmetric
 * within 1e-9.
 */
FourierSeries extract_fourier(const QnnModel& model);

}  // namespace qfiae
