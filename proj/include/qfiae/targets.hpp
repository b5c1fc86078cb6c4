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
#include <string>
#include <string_view>
#include <vector>

#include "qfiae/fourier.hpp"

namespace qfiae {

/// A 1-D integrand, optionally with a closed-form antiderivative.
struct Target {
    std::string id;
    std::function<double(double)> fn;
    std::function<double(double)> antiderivative;  // empty when unknown

    bool has_exact() const { return static_cast<bool>(antiderivative); }
    /// Throws std::logic_error when no antiderivative is registered.
    double exact_integral(double x_lo, double x_hi) const;
};

/// Throws std::invalid_argument for an unknown id.
Target builtin_target(std::string_view id);
std::vector<std::string> builtin_target_ids();

/// A truncated Fourier series used as an integrand; its integral is exact.
Target series_target(const FourierSeries& series);

/// Closed-form integral of a built-in target; throws std::invalid_argument for unknown ids.
double exact_reference(std::string_view target_id, double x_lo, double x_hi);

}  // namespace qfiae
