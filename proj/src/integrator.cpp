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

#include "qfiae/integrator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "qfiae/grover.hpp"
#include "qfiae/rng.hpp"
#include "qfiae/state_vector.hpp"
#include "qfiae/targets.hpp"

namespace qfiae {

namespace {

constexpr double kSkipWeight = 1e-12;
constexpr int kQuadratureIntervals = 4096;

Target resolve_target(const IntegralRequest& request) {
    if (const auto* id = std::get_if<std::string>(&request.target)) {
        return builtin_target(*id);
    }
    return series_target(std::get<FourierSeries>(request.target));
}

void attach_exact(IntegralReport& report, const IntegralRequest& request) {
    report.i_exact = exact_for(request);
    if (report.i_exact && *report.i_exact != 0.0) {
        report.ratio = report.i_estimate / *report.i_exact;
    }
}

}  // namespace

std::string to_string(Method method) {
    switch (method) {
        case Method::QFIAE: return "QFIAE";
        case Method::FQMCI: return "FQMCI";
        case Method::ClassicalMc: return "CLASSICAL_MC";
        case Method::Exact: return "EXACT";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "QFIAE") return Method::QFIAE;
    if (upper == "FQMCI") return Method::FQMCI;
    if (upper == "CLASSICAL_MC") return Method::ClassicalMc;
    if (upper == "EXACT") return Method::Exact;
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

void IntegralRequest::validate() const {
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("integration interval must satisfy x_lo < x_hi");
    }
    if (n_fourier < 1) {
        throw std::invalid_argument("n_fourier must be >= 1");
    }
    if (n_qubits_iqae < 1 || n_qubits_iqae + 1 > kMaxQubits) {
        throw std::invalid_argument("n_qubits_iqae must be in [1, " +
                                    std::to_string(kMaxQubits - 1) + "]");
    }
    if (const auto* series = std::get_if<FourierSeries>(&target)) {
        series->validate();
    } else {
        (void)builtin_target(std::get<std::string>(target));
    }
    if (method == Method::QFIAE || method == Method::FQMCI) {
        iqae.validate();
        train.validate();
    }
    if (method == Method::QFIAE) {
        if (x_lo < train.x_lo || x_hi > train.x_hi) {
            throw std::invalid_argument("integration interval must lie inside the fit domain");
        }
        if (!(loss_ceiling > 0.0)) {
            throw std::invalid_argument("loss_ceiling must be > 0");
        }
    }
}

std::string IntegralRequest::target_name() const {
    if (const auto* id = std::get_if<std::string>(&target)) {
        return *id;
    }
    return "fourier_series";
}

NormalizedTarget normalize_target(const std::function<double(double)>& target, double x_lo,
                                  double x_hi, int grid) {
    if (grid < 2 || !(x_lo < x_hi)) {
        throw std::invalid_argument("normalization needs grid >= 2 and x_lo < x_hi");
    }
    double scale = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (grid - 1);
        const double v = target(x);
        if (!std::isfinite(v)) {
            throw std::invalid_argument("target is not finite at x = " + std::to_string(x));
        }
        scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) {
        return {[](double) { return 0.0; }, 1.0};
    }
    return {[target, scale](double x) { return target(x) / scale; }, scale};
}

TermDecomposition decompose_terms(const FourierSeries& series, double x_lo, double x_hi) {
    series.validate();
    const double length = x_hi - x_lo;
    TermDecomposition out;
    out.constant_contribution = series.c0 * length;
    for (int n = 1; n <= series.degree(); ++n) {
        const double a = series.cos_coeffs[n - 1];
        const double b = series.sin_coeffs[n - 1];
        const double slope = 0.5 * n * series.omega;
        out.terms.push_back({-2.0 * a * length, slope, 0.0, a * length, n, true});
        out.terms.push_back(
            {2.0 * b * length, slope, std::numbers::pi / 4.0, -b * length, n, false});
    }
    return out;
}

TermEstimate integrate_term(const SineSquaredTerm& term, double x_lo, double x_hi, int n_qubits,
                            const IqaeConfig& config, std::uint64_t seed, bool exact_amplitudes) {
    TermEstimate est;
    est.term = term;
    if (std::abs(term.weight) < kSkipWeight) {
        est.skipped = true;
        est.contribution = term.affine_bias;
        est.result.converged = true;
        est.result.a_lo = 0.0;
        est.result.a_hi = 0.0;
        return est;
    }
    const auto oracle =
        SineSquaredOracle::over_interval(term.slope, term.offset, n_qubits, x_lo, x_hi);
    if (exact_amplitudes) {
        StateVector state(oracle.total_qubits());
        state.apply(build_A(oracle));
        const double a = ancilla_one_probability(state, oracle.ancilla());
        est.result.a_estimate = a;
        est.result.a_lo = a;
        est.result.a_hi = a;
        est.result.half_width = 0.0;
        est.result.oracle_calls = 1;
        est.result.converged = true;
    } else {
        est.result = run_iqae(oracle, config, seed);
    }
    est.contribution = term.weight * est.result.a_estimate + term.affine_bias;
    return est;
}

std::optional<double> exact_for(const IntegralRequest& request) {
    const Target t = resolve_target(request);
    if (!t.has_exact()) {
        return std::nullopt;
    }
    return t.exact_integral(request.x_lo, request.x_hi);
}

IntegralReport integrate_series_terms(const FourierSeries& series, const IntegralRequest& request,
                                      double scale_factor) {
    const TermDecomposition parts = decompose_terms(series, request.x_lo, request.x_hi);

    auto job = [&](std::size_t t) {
        return integrate_term(parts.terms[t], request.x_lo, request.x_hi, request.n_qubits_iqae,
                              request.iqae, derive_seed(request.master_seed, t + 1),
                              request.exact_amplitudes);
    };
    std::vector<TermEstimate> estimates;
    estimates.reserve(parts.terms.size());
    if (request.parallel && parts.terms.size() > 1) {
        std::vector<std::future<TermEstimate>> pending;
        pending.reserve(parts.terms.size());
        for (std::size_t t = 0; t < parts.terms.size(); ++t) {
            pending.push_back(std::async(std::launch::async, job, t));
        }
        for (auto& f : pending) {
            estimates.push_back(f.get());
        }
    } else {
        for (std::size_t t = 0; t < parts.terms.size(); ++t) {
            estimates.push_back(job(t));
        }
    }

    IntegralReport report;
    report.series = series;
    report.scale_factor = scale_factor;
    report.constant_contribution = parts.constant_contribution;
    double total = parts.constant_contribution;
    double var = 0.0;
    double k_sum = 0.0;
    std::size_t k_count = 0;
    const TermEstimate* deepest = nullptr;
    for (const TermEstimate& e : estimates) {
        total += e.contribution;
        const double err = e.term.weight * e.result.half_width;
        var += err * err;
        report.total_oracle_calls += e.result.oracle_calls;
        report.converged = report.converged && e.result.converged;
        for (int k : e.result.k_schedule) {
            k_sum += k;
            ++k_count;
        }
        if (!e.skipped && (deepest == nullptr || e.result.max_k() > deepest->result.max_k())) {
            deepest = &e;
        }
    }
    report.i_estimate = total * scale_factor;
    report.error_bar = std::sqrt(var) * std::abs(scale_factor);
    report.mean_k = k_count ? k_sum / static_cast<double>(k_count) : 0.0;
    if (deepest != nullptr) {
        report.max_k = deepest->result.max_k();
        const auto oracle = SineSquaredOracle::over_interval(
            deepest->term.slope, deepest->term.offset, request.n_qubits_iqae, request.x_lo,
            request.x_hi);
        report.iqae_depth = measure_depth(build_amplified(build_grover_pair(oracle), report.max_k));
    }
    report.per_term = std::move(estimates);
    return report;
}

IntegralReport run_qfiae(const IntegralRequest& request) {
    if (request.method != Method::QFIAE) {
        throw std::invalid_argument("run_qfiae needs method QFIAE");
    }
    request.validate();
    const Target target = resolve_target(request);
    const NormalizedTarget norm = normalize_target(target.fn, request.train.x_lo,
                                                   request.train.x_hi, request.train.num_points);
    TrainingConfig train_config = request.train;
    train_config.seed = derive_seed(request.master_seed, 0);
    TrainingResult fit = train(norm.fn, train_config, request.n_fourier);
    if (!(fit.final_loss() <= request.loss_ceiling)) {
        throw TrainingFailure("training ended with loss " + std::to_string(fit.final_loss()) +
                                  " above the ceiling " + std::to_string(request.loss_ceiling),
                              fit.loss_history);
    }
    const FourierSeries series = extract_fourier(fit.model);
    IntegralReport report = integrate_series_terms(series, request, norm.scale_factor);
    report.method = Method::QFIAE;
    report.loss_history = std::move(fit.loss_history);
    report.fit_r_squared = r_squared(fit.model, norm.fn, train_config);
    report.qf_depth = measure_depth(build_qnn_circuit(fit.model, 0.0));
    attach_exact(report, request);
    return report;
}

IntegralReport run_fqmci(const IntegralRequest& request) {
    if (request.method != Method::FQMCI) {
        throw std::invalid_argument("run_fqmci needs method FQMCI");
    }
    request.validate();
    const Target target = resolve_target(request);
    const NormalizedTarget norm = normalize_target(target.fn, request.train.x_lo,
                                                   request.train.x_hi, request.train.num_points);
    const FourierSeries series =
        fourier_by_quadrature(norm.fn, request.n_fourier, kQuadratureIntervals);
    IntegralReport report = integrate_series_terms(series, request, norm.scale_factor);
    report.method = Method::FQMCI;
    attach_exact(report, request);
    return report;
}

IntegralReport run_classical_mc(const IntegralRequest& request, std::int64_t n_samples) {
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be >= 1");
    }
    if (!(request.x_lo < request.x_hi)) {
        throw std::invalid_argument("integration interval must satisfy x_lo < x_hi");
    }
    const Target target = resolve_target(request);
    Rng rng = make_rng(derive_seed(request.master_seed, 0));
    std::uniform_real_distribution<double> dist(request.x_lo, request.x_hi);
    // Welford running mean and variance.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const double v = target.fn(dist(rng));
        const double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    const double length = request.x_hi - request.x_lo;
    const double sd = n_samples > 1 ? std::sqrt(m2 / static_cast<double>(n_samples - 1)) : 0.0;

    IntegralReport report;
    report.method = Method::ClassicalMc;
    report.i_estimate = length * mean;
    report.error_bar = length * sd / std::sqrt(static_cast<double>(n_samples));
    report.total_oracle_calls = n_samples;
    attach_exact(report, request);
    return report;
}

IntegralReport run_exact(const IntegralRequest& request) {
    IntegralReport report;
    report.method = Method::Exact;
    const auto exact = exact_for(request);
    if (!exact) {
        throw std::invalid_argument("target '" + request.target_name() +
                                    "' has no closed-form integral");
    }
    report.i_estimate = *exact;
    report.i_exact = exact;
    report.ratio = *exact != 0.0 ? std::optional<double>(1.0) : std::nullopt;
    return report;
}

IntegralReport run_integral(const IntegralRequest& request, std::int64_t mc_samples) {
    switch (request.method) {
        case Method::QFIAE: return run_qfiae(request);
        case Method::FQMCI: return run_fqmci(request);
        case Method::ClassicalMc: return run_classical_mc(request, mc_samples);
        case Method::Exact: return run_exact(request);
    }
    throw std::logic_error("unknown method");
}

}  // namespace qfiae
