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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qinv/report.hpp"
#include "qinv/state.hpp"

namespace qinv::invariants {

/// Half or quarter of the amplitude list, in ascending index order.
enum class Segment { h0, h1, q0, q1, q2, q3 };

/// Element transform applied by a view. The parity sign of an element is
/// (-1)^p(g) where g is its GLOBAL amplitude index and p counts set bits;
/// see the parity note on pn_product_form for why global.
enum class Transform { plain, parity_signed, reversed };

/// Non-owning window over one segment of a state's amplitudes. All element
/// access is index arithmetic (offset, reversal, popcount sign); no copies.
class SegmentView {
  public:
    SegmentView(const PureState& state, Segment segment, Transform transform);

    std::size_t size() const { return size_; }
    /// Amplitude index of element t under the view's ordering.
    std::size_t global_index(std::size_t t) const;
    /// Element t, transform applied.
    cplx operator[](std::size_t t) const;

  private:
    const PureState* state_;
    std::size_t offset_;
    std::size_t size_;
    Transform transform_;
};

/// lhs . rhs together with the absolute-value sum of its monomials; the
/// latter feeds relative zero tests downstream.
struct DotResult {
    cplx value;
    double scale;
};
DotResult dot(const SegmentView& lhs, const SegmentView& rhs);

/// One invariant evaluation. `scale` accumulates the absolute values of all
/// summed monomials, so scale >= |value| and scale = 0 implies value = 0.
struct InvariantValue {
    cplx value;
    int degree; // 2, 4, or 2^(n/2)
    std::optional<QubitPermutation> generator;
    double scale;
};

/// G_n = sum_{i < 2^(n-1)} (-1)^p(i) a_i a_{2^n-1-i}  (even n >= 2).
InvariantValue gn(const PureState& state);

/// 2|G_n|: the even-n extension of the concurrence.
double concurrence(const PureState& state);

/// 4|G_n|^2: square of the even-n concurrence.
double n_tangle(const PureState& state);

/// The degree-4 invariant P_n as the five-term quarter-vector product
///   1/2 Q0P.Q0R Q3P.Q3R + 1/2 Q1P.Q1R Q2P.Q2R
///   + Q0P.Q1R Q2P.Q3R + Q0P.Q2R Q1P.Q3R - Q0P.Q3R Q1P.Q2R
/// for even n >= 2 (P_2 = G_2^2 / 2).
///
/// Parity convention: the P-transform signs use the GLOBAL amplitude index,
/// not the offset within the quarter. The two readings differ by a sign
/// flip on Q1 and Q2; the global one is adopted because it is the unique
/// choice consistent with the five-term expansion over index pairs
/// implemented in pn_appendix_form (the within-quarter reading contradicts
/// the third term's sign) and it reproduces the published special values
/// P_4(CL1_4) = -1/8 and P_2 = G_2^2/2.
InvariantValue pn_product_form(const PureState& state);

/// P_n through the explicit five-term expansion over index pairs
/// (I_1 + ... + I_5). Independent code path from pn_product_form and used
/// as its oracle. Even n >= 4 (the half-quarter ranges need 2^(n-3) >= 1).
InvariantValue pn_appendix_form(const PureState& state);

/// The five addends of pn_appendix_form, in order.
std::array<cplx, 5> appendix_terms(const PureState& state);

/// sigma P_n: P_n evaluated on the qubit-relabeled state. The generating
/// permutation is recorded on the result.
InvariantValue permuted_pn(const PureState& state, const QubitPermutation& sigma);

/// Determinant of the 2^(n/2) x 2^(n/2) matrix filled row-major with
/// a_0 ... a_{2^n-1} in ascending index order (degree 2^(n/2)); with sigma,
/// the state is relabeled first. The scale is the Hadamard bound (product
/// of row norms), the natural magnitude reference for a determinant.
InvariantValue det_invariant(const PureState& state);
InvariantValue det_invariant(const PureState& state, const QubitPermutation& sigma);

/// The four-qubit determinant basis and its degree-4 relations
///   P4 = 2N + L,  P4' = 2M + N,  P4'' = 2L + M.
/// L is det_invariant; M and N are the (1,4)- and (1,3)-permuted
/// determinants times calibrated signs (the permutation fixes them only up
/// to sign; the relations pin both). Calibration runs once per process on
/// fixed-seed random states and every call re-asserts the relations.
struct FourQubitBasis {
    cplx l, m, n;
    cplx p4, p4_prime, p4_dprime;
    int sign_m, sign_n;
    double scale; // max P_n scale among the three evaluations
};
FourQubitBasis four_qubit_basis(const PureState& state);

/// Table value |2 C(n-3,n/2-1)^2 - C(n-2,n/2) C(n-2,n/2-1)| / C(n,n/2)^2
/// = |P_n(|n/2,n>)| for even n > 4, from exact integer binomials.
double dicke_p_formula(int n);

/// Empirical grouping of {identity, all transpositions} by the values their
/// sigma P_n take on `trials` random states. Two generators land in one
/// group when their values agree within 1e-9 * scale on every trial.
struct DistinctSet {
    std::vector<QubitPermutation> representatives; // first member of each group
    std::vector<std::vector<QubitPermutation>> groups;

    std::size_t count() const { return groups.size(); }
};
DistinctSet distinct_degree4_set(int n, int trials, std::uint64_t seed);

/// Randomized suite: gn(chain psi) = gn(psi) prod det A_i, relative 1e-8.
CheckReport check_covariance_g(int n, int trials, std::uint64_t seed);

/// Randomized suite: pn(chain psi) = pn(psi) (prod det A_i)^2, and the same
/// for three random permuted invariants, relative 1e-8.
CheckReport check_covariance_p(int n, int trials, std::uint64_t seed);

/// Randomized suite: det_invariant(chain psi) = det_invariant(psi) times
/// prod (det A_i)^(2^(n/2-1)). The exponent follows from degree counting
/// (each amplitude appears in 2^(n/2-1) of the matrix's rows through one
/// qubit's index bit) and is confirmed here numerically rather than quoted.
CheckReport check_covariance_det(int n, int trials, std::uint64_t seed);

/// Randomized suite: |pn_product_form - pn_appendix_form| <= 1e-12 * scale.
CheckReport check_dual_form(int n, int trials, std::uint64_t seed);

/// Randomized suite over 4-qubit states: the Table 1 closure grid (each
/// transposition maps {P4, P4', P4''} onto itself as printed) plus the
/// linear dependence P4 + P4' + P4'' = 0, within 1e-10 * scale.
CheckReport check_closure(int trials, std::uint64_t seed);

} // namespace qinv::invariants
