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
 * Integration pipelines.
 *
 * A Fourier series c0 + sum a_n cos(n w x) + b_n sin(n w x) is integrated
 * over [x_lo, x_hi] by writing every harmonic as an affine function of a
 * sin^2 term,
 *
 *   cos(u) = 1 - 2 sin^2(u / 2),   sin(u) = 2 sin^2(u / 2 + pi / 4) - 1,
 *
 * and estimating E[sin^2(m x + c)] over the 2^n-point midpoint grid with
 * iterative amplitude estimation. The series comes either from a trained
 * re-uploading model (QFIAE) or from classical quadrature (FQMCI).
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfiae/circuit.hpp"
#include "qfiae/fourier.hpp"
#include "qfiae/iqae.hpp"
#include "qfiae/qnn.hpp"

namespace qfiae {

enum class Method { QFIAE, FQMCI, ClassicalMc, Exact };

std::string to_string(Method method);
/// Accepts QFIAE, FQMCI, CLASSICAL_MC, EXACT (case-insensitive).
Method parse_method(std::string_view text);

struct IntegralRequest {
    /// Built-in target id or an explicit series.
    std::variant<std::string, FourierSeries> target = std::string("one_plus_x_squared");
    double x_lo = 0.0;
    double x_hi = 1.0;
    int n_fourier = 10;
    int n_qubits_iqae = 4;
    IqaeConfig iqae;
    Method method = Method::QFIAE;
    TrainingConfig train;  // fit domain lives here; seed is derived from master_seed
    std::uint64_t master_seed = 0;
    /// Replace sampling by the exact ancilla probability of A|0> ("infinite shots").
    bool exact_amplitudes = false;
    double loss_ceiling = 0.05;
    bool parallel = true;

    void validate() const;
    std::string target_name() const;
};

struct NormalizedTarget {
    std::function<double(double)> fn;
    double scale_factor = 1.0;
};

/**
 * Divides `target` by its largest magnitude over `grid` equispaced points of
 * [x_lo, x_hi]. An identically zero target keeps scale 1.
 */
NormalizedTarget normalize_target(const std::function<double(double)>& target, double x_lo,
                                  double x_hi, int grid);

/// One amplitude-estimation job: weight * E[sin^2(slope x + offset)] + affine_bias.
struct SineSquaredTerm {
    double weight = 0.0;
    double slope = 0.0;   // radians per unit of x
    double offset = 0.0;  // radians
    double affine_bias = 0.0;
    int harmonic = 0;
    bool cosine = true;
};

struct TermDecomposition {
    double constant_contribution = 0.0;
    std::vector<SineSquaredTerm> terms;  // cosine then sine term per harmonic
};

/// Integral weights include the interval length; the constant is integrated analytically.
TermDecomposition decompose_terms(const FourierSeries& series, double x_lo, double x_hi);

struct TermEstimate {
    SineSquaredTerm term;
    double contribution = 0.0;
    IqaeResult result;
    bool skipped = false;  // |weight| < 1e-12, no circuit run
};

TermEstimate integrate_term(const SineSquaredTerm& term, double x_lo, double x_hi, int n_qubits,
                            const IqaeConfig& config, std::uint64_t seed,
                            bool exact_amplitudes = false);

/// Raised when the fitted model misses the loss ceiling.
class TrainingFailure : public std::runtime_error {
  public:
    TrainingFailure(const std::string& what, std::vector<double> loss_history)
        : std::runtime_error(what), loss_history_(std::move(loss_history)) {}

    const std::vector<double>& loss_history() const { return loss_history_; }

  private:
    std::vector<double> loss_history_;
};

struct IntegralReport {
    Method method = Method::QFIAE;
    double i_estimate = 0.0;
    double error_bar = 0.0;
    std::vector<TermEstimate> per_term;
    std::int64_t total_oracle_calls = 0;
    double scale_factor = 1.0;
    double constant_contribution = 0.0;
    FourierSeries series;                // normalized series that was integrated
    std::vector<double> loss_history;    // QFIAE only
    double fit_r_squared = 0.0;          // QFIAE only
    DepthMetrics qf_depth;               // model circuit; zero when no model is trained
    DepthMetrics iqae_depth;             // deepest A Q^k circuit that was run
    int max_k = 0;
    double mean_k = 0.0;                 // over every round of every term
    bool converged = true;               // every term's estimator converged
    std::optional<double> i_exact;
    std::optional<double> ratio;         // i_estimate / i_exact
};

/// Closed-form value for the request's target over its interval, when known.
std::optional<double> exact_for(const IntegralRequest& request);

IntegralReport run_qfiae(const IntegralRequest& request);
IntegralReport run_fqmci(const IntegralRequest& request);
IntegralReport run_classical_mc(const IntegralRequest& request, std::int64_t n_samples);
IntegralReport run_exact(const IntegralRequest& request);

/// Dispatches on request.method; `mc_samples` is used by the classical baseline.
IntegralReport run_integral(const IntegralRequest& request, std::int64_t mc_samples = 1'000'000);

/**
 * Integrates a series already on the normalized scale: decomposition,
 * per-term estimation and recombination. Shared by QFIAE and FQMCI.
 */
IntegralReport integrate_series_terms(const FourierSeries& series, const IntegralRequest& request,
                                      double scale_factor);

}  // namespace qfiae
