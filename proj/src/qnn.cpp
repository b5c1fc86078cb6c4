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

#include "qfiae/qnn.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "qfiae/rng.hpp"
#include "qfiae/state_vector.hpp"

namespace qfiae {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShift = kPi / 2.0;

using Mat2 = std::array<Complex, 4>;  // row-major
using Vec2 = std::array<Complex, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

Vec2 act(const Mat2& m, const Vec2& v) {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

/// <v| obs |v> for a Hermitian 2x2 observable.
double expectation(const Mat2& obs, const Vec2& v) {
    const Vec2 w = act(obs, v);
    return (std::conj(v[0]) * w[0] + std::conj(v[1]) * w[1]).real();
}

/// Gate g of the model at input x, with `param_of[g]` the angle index or -1.
struct ModelLayout {
    std::vector<Gate> gates;
    std::vector<int> param_of;
};

Gate block_gate(int slot, double angle) {
    return slot == 1 ? Gate::ry(0, angle) : Gate::rz(0, angle);
}

ModelLayout layout(const QnnModel& model, double x) {
    ModelLayout out;
    const auto p = model.params();
    const std::size_t n = p.size() + static_cast<std::size_t>(model.num_layers());
    out.gates.reserve(n);
    out.param_of.reserve(n);
    auto push_block = [&](int block) {
        for (int slot = 0; slot < 3; ++slot) {
            const int idx = 3 * block + slot;
            out.gates.push_back(block_gate(slot, p[idx]));
            out.param_of.push_back(idx);
        }
    };
    push_block(0);
    for (int l = 1; l <= model.num_layers(); ++l) {
        out.gates.push_back(Gate::rz(0, x));
        out.param_of.push_back(-1);
        push_block(l);
    }
    return out;
}

void check_points(std::span<const double> xs, std::span<const double> targets) {
    if (xs.size() != targets.size() || xs.empty()) {
        throw std::invalid_argument("xs and targets must have equal, non-zero length");
    }
}

/**
 * Adds 2 (f - target) d<Z>/d(theta_p) into `grad` for one input and returns
 * the unshifted <Z> = f.
 */
double accumulate_point(const QnnModel& model, double x, double target, std::span<double> grad) {
    const ModelLayout lay = layout(model, x);
    const std::size_t n = lay.gates.size();
    std::vector<Mat2> mats(n);
    for (std::size_t g = 0; g < n; ++g) {
        mats[g] = lay.gates[g].matrix();
    }
    // states[g] is the state before gate g.
    std::vector<Vec2> states(n + 1);
    states[0] = {Complex{1.0}, Complex{0.0}};
    for (std::size_t g = 0; g < n; ++g) {
        states[g + 1] = act(mats[g], states[g]);
    }
    const Mat2 z{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{-1.0}};
    const double f = expectation(z, states[n]);
    const double w = 2.0 * (f - target);

    // obs is Z pulled back through the gates after g.
    Mat2 obs = z;
    for (std::size_t gi = n; gi-- > 0;) {
        const int p = lay.param_of[gi];
        if (p >= 0) {
            Gate plus = lay.gates[gi];
            Gate minus = lay.gates[gi];
            plus.angle += kShift;
            minus.angle -= kShift;
            const double f_plus = expectation(obs, act(plus.matrix(), states[gi]));
            const double f_minus = expectation(obs, act(minus.matrix(), states[gi]));
            grad[static_cast<std::size_t>(p)] += w * 0.5 * (f_plus - f_minus);
        }
        obs = mul(adjoint(mats[gi]), mul(obs, mats[gi]));
    }
    return f;
}

}  // namespace

QnnModel::QnnModel(int num_layers)
    : QnnModel(num_layers, std::vector<double>(3 * (static_cast<std::size_t>(num_layers) + 1), 0.0)) {}

QnnModel::QnnModel(int num_layers, std::vector<double> params)
    : num_layers_(num_layers), params_(std::move(params)) {
    if (num_layers < 1) {
        throw std::invalid_argument("model needs at least one layer");
    }
    if (params_.size() != 3 * (static_cast<std::size_t>(num_layers) + 1)) {
        throw std::invalid_argument("model with " + std::to_string(num_layers) + " layers needs " +
                                    std::to_string(3 * (num_layers + 1)) + " angles");
    }
}

QnnModel QnnModel::random(int num_layers, std::uint64_t seed) {
    QnnModel m(num_layers);
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    for (double& p : m.params_) {
        p = dist(rng);
    }
    return m;
}

QnnModel QnnModel::near_identity(int num_layers, std::uint64_t seed, double stddev) {
    QnnModel m(num_layers);
    Rng rng = make_rng(seed);
    std::normal_distribution<double> dist(0.0, stddev);
    for (double& p : m.params_) {
        p = dist(rng);
    }
    return m;
}

Circuit build_qnn_circuit(const QnnModel& model, double x) {
    Circuit c(1);
    for (const Gate& g : layout(model, x).gates) {
        c.add(g);
    }
    return c;
}

double model_forward(const QnnModel& model, double x) {
    StateVector state(1);
    state.apply(build_qnn_circuit(model, x));
    return expectation_z(state, 0);
}

double loss(const QnnModel& model, std::span<const double> xs, std::span<const double> targets) {
    check_points(xs, targets);
    double total = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = model_forward(model, xs[i]) - targets[i];
        total += r * r;
    }
    return total / static_cast<double>(xs.size());
}

std::vector<double> gradient(const QnnModel& model, std::span<const double> xs,
                             std::span<const double> targets) {
    check_points(xs, targets);
    std::vector<double> grad(model.num_params(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        accumulate_point(model, xs[i], targets[i], grad);
    }
    const double inv = 1.0 / static_cast<double>(xs.size());
    for (double& g : grad) {
        g *= inv;
    }
    return grad;
}

void TrainingConfig::validate() const {
    if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (num_points < 2) throw std::invalid_argument("num_points must be >= 2");
    if (!(x_lo < x_hi)) throw std::invalid_argument("training domain must satisfy x_lo < x_hi");
    if (!(init_stddev >= 0.0)) throw std::invalid_argument("init_stddev must be >= 0");
}

std::vector<double> TrainingConfig::training_grid() const {
    std::vector<double> xs(static_cast<std::size_t>(num_points));
    const double h = (x_hi - x_lo) / (num_points - 1);
    for (int i = 0; i < num_points; ++i) {
        xs[i] = x_lo + i * h;
    }
    xs.back() = x_hi;
    return xs;
}

std::vector<double> TrainingConfig::heldout_grid() const {
    std::vector<double> xs(static_cast<std::size_t>(num_points - 1));
    const double h = (x_hi - x_lo) / (num_points - 1);
    for (int i = 0; i + 1 < num_points; ++i) {
        xs[i] = x_lo + (i + 0.5) * h;
    }
    return xs;
}

AdamOptimizer::AdamOptimizer(double learning_rate, double beta1, double beta2, double eps)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(eps) {}

void AdamOptimizer::step(std::span<double> params, std::span<const double> grad) {
    if (params.size() != grad.size()) {
        throw std::invalid_argument("parameter and gradient sizes differ");
    }
    if (m_.empty()) {
        m_.assign(params.size(), 0.0);
        v_.assign(params.size(), 0.0);
    }
    ++step_count_;
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(step_count_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(step_count_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
        params[i] -= lr_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
    }
}

TrainingResult train(const std::function<double(double)>& target, const TrainingConfig& config,
                     int num_layers) {
    config.validate();
    const std::vector<double> xs = config.training_grid();
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ys[i] = target(xs[i]);
        if (!std::isfinite(ys[i]) || std::abs(ys[i]) > 1.0 + 1e-9) {
            throw std::invalid_argument("target leaves [-1, 1] at x = " + std::to_string(xs[i]) +
                                        "; normalize it first");
        }
    }

    TrainingResult result{QnnModel::near_identity(num_layers, config.seed, config.init_stddev), {}};
    result.loss_history.reserve(static_cast<std::size_t>(config.epochs));
    AdamOptimizer adam(config.learning_rate);
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        const std::vector<double> grad = gradient(result.model, xs, ys);
        adam.step(result.model.params(), grad);
        result.loss_history.push_back(loss(result.model, xs, ys));
    }
    return result;
}

double r_squared(const QnnModel& model, const std::function<double(double)>& target,
                 const TrainingConfig& config) {
    const std::vector<double> xs = config.heldout_grid();
    std::vector<double> ys(xs.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ys[i] = target(xs[i]);
        mean += ys[i];
    }
    mean /= static_cast<double>(xs.size());
    double sse = 0.0;
    double sst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = model_forward(model, xs[i]) - ys[i];
        sse += r * r;
        sst += (ys[i] - mean) * (ys[i] - mean);
    }
    if (sst == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return 1.0 - sse / sst;
}

FourierSeries extract_fourier(const QnnModel& model) {
    const int big_l = model.num_layers();
    const int n = 2 * big_l + 1;
    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        samples[j] = model_forward(model, 2.0 * kPi * j / n);
    }
    auto coefficient = [&](int w) {
        Complex c{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            c += samples[j] * std::polar(1.0, -2.0 * kPi * w * j / n);
        }
        return c / static_cast<double>(n);
    };

    FourierSeries s;
    s.omega = 1.0;
    const Complex c0 = coefficient(0);
    if (std::abs(c0.imag()) > 1e-9) {
        throw std::runtime_error("constant Fourier coefficient is not real");
    }
    s.c0 = c0.real();
    for (int w = 1; w <= big_l; ++w) {
        const Complex cp = coefficient(w);
        const Complex cm = coefficient(-w);
        if (std::abs(cm - std::conj(cp)) > 1e-9) {
            throw std::runtime_error("Fourier coefficients are not conjugate symmetric");
        }
        s.cos_coeffs.push_back(2.0 * cp.real());
        s.sin_coeffs.push_back(-2.0 * cp.imag());
    }
    return s;
}

}  // namespace qfiae
