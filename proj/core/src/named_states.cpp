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
#include "qinv/named_states.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

namespace qinv {

namespace {

void require_range(int n) {
    if (n < 2 || n > PureState::max_qubits) {
        throw param_error("named states require 2 <= n <= " +
                          std::to_string(PureState::max_qubits) + ", got " + std::to_string(n));
    }
}

void require_even(int n, const char* what) {
    require_range(n);
    if (n % 2 != 0) {
        throw param_error(std::string(what) + " requires even n, got " + std::to_string(n));
    }
}

// C(n, k) for n <= 30 fits comfortably in 64 bits.
std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

} // namespace

PureState make_ghz(int n) {
    require_range(n);
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;
    amps.back() = r;
    return PureState(n, std::move(amps));
}

PureState make_w(int n) {
    require_range(n);
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int l = 0; l < n; ++l) {
        amps[std::size_t{1} << l] = r;
    }
    return PureState(n, std::move(amps));
}

PureState make_dicke(int n, int k) {
    require_range(n);
    if (k < 0 || k > n) {
        throw param_error("Dicke weight must satisfy 0 <= k <= n, got k=" + std::to_string(k));
    }
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    const double r = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::popcount(i) == k) {
            amps[i] = r;
        }
    }
    return PureState(n, std::move(amps));
}

PureState make_cl1(int n) {
    require_even(n, "CL1");
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    const std::size_t half_ones = (std::size_t{1} << (n / 2)) - 1; // 0^{n/2} 1^{n/2}
    amps[0] = 0.5;
    amps[half_ones] = 0.5;
    amps[half_ones << (n / 2)] = 0.5; // 1^{n/2} 0^{n/2}
    amps.back() = -0.5;
    return PureState(n, std::move(amps));
}

PureState make_cl2(int n) {
    require_even(n, "CL2");
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    std::size_t alt01 = 0; // (01)^{n/2}
    for (int b = 0; b < n; b += 2) {
        alt01 |= std::size_t{1} << b;
    }
    amps[0] = 0.5;
    amps[alt01] = 0.5;
    amps[alt01 << 1] = 0.5; // (10)^{n/2}
    amps.back() = -0.5;
    return PureState(n, std::move(amps));
}

PureState make_named(NamedKind kind, int n, int k) {
    switch (kind) {
    case NamedKind::ghz:
        return make_ghz(n);
    case NamedKind::w:
        return make_w(n);
    case NamedKind::dicke:
        return make_dicke(n, k);
    case NamedKind::cl1:
        return make_cl1(n);
    case NamedKind::cl2:
        return make_cl2(n);
    }
    throw param_error("unknown named-state kind");
}

NamedSpec parse_named(const std::string& text) {
    std::string lower(text.size(), '\0');
    std::transform(text.begin(), text.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "ghz") {
        return {NamedKind::ghz, -1};
    }
    if (lower == "w") {
        return {NamedKind::w, -1};
    }
    if (lower == "cl1") {
        return {NamedKind::cl1, -1};
    }
    if (lower == "cl2") {
        return {NamedKind::cl2, -1};
    }
    if (lower.rfind("dicke:", 0) == 0) {
        const std::string arg = lower.substr(6);
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw param_error("cannot parse Dicke weight in '" + text + "'");
        }
        if (used != arg.size() || k < 0) {
            throw param_error("cannot parse Dicke weight in '" + text + "'");
        }
        return {NamedKind::dicke, k};
    }
    throw param_error("unknown state selector '" + text +
                      "' (expected ghz, w, dicke:<k>, cl1 or cl2)");
}

std::string to_string(NamedKind kind) {
    switch (kind) {
    case NamedKind::ghz:
        return "ghz";
    case NamedKind::w:
        return "w";
    case NamedKind::dicke:
        return "dicke";
    case NamedKind::cl1:
        return "cl1";
    case NamedKind::cl2:
        return "cl2";
    }
    return "?";
}

} // namespace qinv
