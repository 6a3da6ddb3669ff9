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

#include <string>
#include <vector>

namespace qinv {

/// Outcome of a randomized property suite: trial count, failure count, the
/// worst observed error, and one replay note per failing trial.
struct CheckReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    double max_error = 0.0;
    std::vector<std::string> failure_notes;

    bool passed() const { return failures == 0; }

    void record(double err, double limit, const std::string& note);
};

} // namespace qinv
