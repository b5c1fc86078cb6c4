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

#include "qfiae/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfiae {

void FourierSeries::validate() const {
    if (cos_coeffs.size() != sin_coeffs.size()) {
        throw std::invalid_argument("cosine and sine coefficient lists differ in length");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("omega must be positive and finite");
    }
}

FourierSeries FourierSeries::truncated(int degree) const {
    FourierSeries s = *this;
    const auto d = static_cast<std::size_t>(std::max(0, degree));
    if (s.cos_coeffs.size() > d) s.cos_coeffs.resize(d);
    if (s.sin_coeffs.size() > d) s.sin_coeffs.resize(d);
    return s;
}

FourierSeries FourierSeries::scaled(double factor) const {
    FourierSeries s = *this;
    s.c0 *= factor;
    for (double& a : s.cos_coeffs) a *= factor;
    for (double& b : s.sin_coeffs) b *= factor;
    return s;
}

double evaluate_series(const FourierSeries& series, double x) {
    series.validate();
    double total = series.c0;
    for (int n = 1; n <= series.degree(); ++n) {
        const double u = n * series.omega * x;
        total += series.cos_coeffs[n - 1] * std::cos(u) + series.sin_coeffs[n - 1] * std::sin(u);
    }
    return total;
}

double integrate_series(const FourierSeries& series, double x_lo, double x_hi) {
    series.validate();
    double total = series.c0 * (x_hi - x_lo);
    for (int n = 1; n <= series.degree(); ++n) {
        const double w = n * series.omega;
        total += series.cos_coeffs[n - 1] * (std::sin(w * x_hi) - std::sin(w * x_lo)) / w;
        total -= series.sin_coeffs[n - 1] * (std::cos(w * x_hi) - std::cos(w * x_lo)) / w;
    }
    return total;
}

FourierSeries fourier_by_quadrature(const std::function<double(double)>& f, int degree,
                                    int intervals) {
    if (degree < 0) {
        throw std::invalid_argument("degree must be >= 0");
    }
    if (intervals < 2 || intervals % 2 != 0) {
        throw std::invalid_argument("Simpson quadrature needs an even interval count");
    }
    constexpr double pi = std::numbers::pi;
    const double h = 2.0 * pi / intervals;
    std::vector<double> xs(static_cast<std::size_t>(intervals) + 1);
    std::vector<double> wf(xs.size());
    for (int i = 0; i <= intervals; ++i) {
        xs[i] = -pi + i * h;
        const double weight = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        wf[i] = weight * h / 3.0 * f(xs[i]);
    }

    FourierSeries s;
    s.omega = 1.0;
    double integral = 0.0;
    for (double v : wf) integral += v;
    s.c0 = integral / (2.0 * pi);
    for (int n = 1; n <= degree; ++n) {
        double ac = 0.0;
        double as = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ac += wf[i] * std::cos(n * xs[i]);
            as += wf[i] * std::sin(n * xs[i]);
        }
        s.cos_coeffs.push_back(ac / pi);
        s.sin_coeffs.push_back(as / pi);
    }
    return s;
}

}  // namespace qfiae
