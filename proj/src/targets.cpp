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

#include "qfiae/targets.hpp"

#include <cmath>
#include <stdexcept>

namespace qfiae {

namespace {

struct Builtin {
    const char* id;
    double (*fn)(double);
    double (*antiderivative)(double);
};

constexpr Builtin kBuiltins[] = {
    {"one_plus_x_squared", [](double x) { return 1.0 + x * x; },
     [](double x) { return x + x * x * x / 3.0; }},
    {"x_squared", [](double x) { return x * x; }, [](double x) { return x * x * x / 3.0; }},
    {"x", [](double x) { return x; }, [](double x) { return 0.5 * x * x; }},
    {"constant_one", [](double) { return 1.0; }, [](double x) { return x; }},
    {"constant_half", [](double) { return 0.5; }, [](double x) { return 0.5 * x; }},
    {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }},
    {"sin", [](double x) { return std::sin(x); }, [](double x) { return -std::cos(x); }},
    {"cos", [](double x) { return std::cos(x); }, [](double x) { return std::sin(x); }},
};

}  // namespace

double Target::exact_integral(double x_lo, double x_hi) const {
    if (!antiderivative) {
        throw std::logic_error("target '" + id + "' has no closed-form integral");
    }
    return antiderivative(x_hi) - antiderivative(x_lo);
}

Target builtin_target(std::string_view id) {
    for (const Builtin& b : kBuiltins) {
        if (id == b.id) {
            return {b.id, b.fn, b.antiderivative};
        }
    }
    throw std::invalid_argument("unknown target id '" + std::string(id) + "'");
}

std::vector<std::string> builtin_target_ids() {
    std::vector<std::string> ids;
    for (const Builtin& b : kBuiltins) {
        ids.emplace_back(b.id);
    }
    return ids;
}

Target series_target(const FourierSeries& series) {
    series.validate();
    Target t;
    t.id = "fourier_series";
    t.fn = [series](double x) { return evaluate_series(series, x); };
    t.antiderivative = [series](double x) { return integrate_series(series, 0.0, x); };
    return t;
}

double exact_reference(std::string_view target_id, double x_lo, double x_hi) {
    return builtin_target(target_id).exact_integral(x_lo, x_hi);
}

}  // namespace qfiae
