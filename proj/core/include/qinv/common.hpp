// Copyright 2026 The qinv developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

namespace qinv {

using cplx = std::complex<double>;

/// Base class for all qinv errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameter: out-of-range qubit index, bad Dicke weight, size mismatch.
struct param_error : error {
    using error::error;
};

/// Operation defined only for a particular qubit count (usually even n).
struct arity_error : error {
    using error::error;
};

/// Measure-layer operations require unit-normalized input.
struct normalization_error : error {
    using error::error;
};

/// Malformed or inconsistent external input (files, JSON payloads).
struct input_error : error {
    using error::error;
};

/// Internal consistency failure, e.g. basis sign calibration found no solution.
struct internal_error : error {
    using error::error;
};

/// |a - b| / max(|a|, |b|), zero-safe. Used by randomized identity checks.
inline double relative_error(cplx a, cplx b) {
    const double denom = std::max(std::abs(a), std::abs(b));
    if (denom == 0.0) {
        return 0.0;
    }
    return std::abs(a - b) / denom;
}

inline double relative_error(double a, double b) {
    return relative_error(cplx(a, 0.0), cplx(b, 0.0));
}

} // namespace qinv
