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
#include "qinv/report.hpp"

#include <algorithm>

namespace qinv {

void CheckReport::record(double err, double limit, const std::string& note) {
    ++trials;
    max_error = std::max(max_error, err);
    if (!(err <= limit)) {
        ++failures;
        failure_notes.push_back(note);
    }
}

} // namespace qinv
