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

#pragma once

#include <functional>
#include <vector>

namespace qfiae {

/// c0 + sum_n (a_n cos(n omega x) + b_n sin(n omega x)), n = 1..degree.
struct FourierSeries {
    double omega = 1.0;
    double c0 = 0.0;
    std::vector<double> cos_coeffs;  // a_1..a_D
    std::vector<double> sin_coeffs;  // b_1..b_D

    int degree() const { return static_cast<int>(cos_coeffs.size()); }

    /// Throws std::invalid_argument if the coefficient lists differ in length.
    void validate() const;

    /// Keeps harmonics 1..degree.
    FourierSeries truncated(int degree) const;
    FourierSeries scaled(double factor) const;
};

double evaluate_series(const FourierSeries& series, double x);

/// Exact integral of the series over [x_lo, x_hi].
double integrate_series(const FourierSeries& series, double x_lo, double x_hi);

/**
 * Real Fourier coefficients of `f` on the period [-pi, pi) by composite
 * Simpson quadrature over `intervals` (even) subintervals, omega = 1.
 */
FourierSeries fourier_by_quadrature(const std::function<double(double)>& f, int degree,
                                    int intervals = 4096);

}  // namespace qfiae
