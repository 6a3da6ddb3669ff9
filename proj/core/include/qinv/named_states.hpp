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

#include "qinv/state.hpp"

namespace qinv {

enum class NamedKind { ghz, w, dicke, cl1, cl2 };

/// (|0...0> + |1...1>)/sqrt(2), n >= 2.
PureState make_ghz(int n);

/// Uniform superposition of the n Hamming-weight-1 basis states, n >= 2.
PureState make_w(int n);

/// Dicke state |k,n>: uniform superposition of all Hamming-weight-k basis
/// states, amplitude 1/sqrt(C(n,k)). Requires 0 <= k <= n.
PureState make_dicke(int n, int k);

/// (|0^n> + |0^{n/2} 1^{n/2}> + |1^{n/2} 0^{n/2}> - |1^n>)/2, even n >= 2.
/// The two middle kets are contiguous half-blocks.
PureState make_cl1(int n);

/// (|0^n> + |(01)^{n/2}> + |(10)^{n/2}> - |1^n>)/2, even n >= 2.
/// The two middle kets alternate bit values.
PureState make_cl2(int n);

/// Dispatch on kind; `k` is consulted only for NamedKind::dicke.
PureState make_named(NamedKind kind, int n, int k = -1);

/// Parsed form of a CLI state selector.
struct NamedSpec {
    NamedKind kind;
    int k = -1; // Dicke weight; -1 when not applicable
};

/// Accepts "ghz", "w", "dicke:<k>", "cl1", "cl2" (ASCII case-insensitive).
NamedSpec parse_named(const std::string& text);

std::string to_string(NamedKind kind);

} // namespace qinv
