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

#include "qinv/invariants.hpp"
#include "qinv/state.hpp"

namespace qinv::classify {

/// Floating-point reading of the exact dichotomy "vanishes / does not
/// vanish": a value counts as zero iff |v| <= floor + factor * scale.
/// Defaults keep exact zeros of named states and SLOCC-transformed zeros
/// classifying correctly at n <= 12; both knobs are configurable.
struct ZeroTolerance {
    double absolute_floor = 1e-12;
    double relative_factor = 1e-9;

    bool is_zero(double magnitude, double scale) const {
        return magnitude <= absolute_floor + relative_factor * scale;
    }
    bool is_zero(const invariants::InvariantValue& v) const {
        return is_zero(std::abs(v.value), v.scale);
    }
};

/// Identity followed by the transpositions (i,j) in lexicographic order;
/// the generator list behind every signature, fixed so signatures are
/// comparable across runs.
std::vector<QubitPermutation> signature_generators(int n);

/// Vanishing pattern of a state across the degree-2 invariant and the
/// degree-4 family: g_bit is G_n's entry (the prefix of the printed form),
/// p_bits holds one entry per generator of signature_generators(n).
/// Bit value 0 means "vanishes", 1 means "nonzero".
struct FamilySignature {
    int n = 0;
    int g_bit = 0;
    std::vector<int> p_bits;

    bool operator==(const FamilySignature& other) const {
        return n == other.n && g_bit == other.g_bit && p_bits == other.p_bits;
    }

    /// g bit, then the p bits in generator order, e.g. "1|100110".
    std::string to_string() const;
};

FamilySignature signature(const PureState& state, const ZeroTolerance& tol = {});

/// Signature comparison can prove inequivalence, never equivalence.
enum class Verdict { inequivalent, undecided };

Verdict compare(const PureState& a, const PureState& b, const ZeroTolerance& tol = {});

/// Signatures for a batch of states plus the pairwise verdict matrix.
struct ClassificationReport {
    std::vector<FamilySignature> signatures;
    std::vector<std::vector<Verdict>> verdicts; // [i][j], diagonal undecided
};
ClassificationReport classify_states(const std::vector<PureState>& states,
                                     const ZeroTolerance& tol = {});

/// One cell of the vanishing-pattern table: "0", "!=0", or a footnote
/// exception rendered as its exact value.
struct Table2Row {
    std::string label;      // state column header
    std::string g_entry;    // degree-2 row
    std::string p_entry;    // degree-4 row
};
struct Table2 {
    int n = 0;
    std::vector<Table2Row> rows;
    std::vector<std::string> notes; // footnote text that applies at this n
};

/// Zero/nonzero pattern of G_n and P_n for GHZ, W, |n/2,n>, CL1, CL2 at one
/// even n, evaluated (not hard-coded) and annotated with the three footnote
/// exceptions. The degree-6 row is out of scope and marked as such.
Table2 table2(int n);

struct Table5Cell {
    double value = 0.0;
    std::string exact; // "1/8", "1/16", "0", or a decimal rendering
};
struct Table5 {
    std::vector<int> ns;
    std::vector<std::string> labels; // GHZ, W, |n/2,n>, CL1, CL2
    std::vector<std::vector<Table5Cell>> cells; // [row][column of ns]
};

/// |P_n| for the five named states at each requested even n.
Table5 table5(const std::vector<int>& ns);

} // namespace qinv::classify
