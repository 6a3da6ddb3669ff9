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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qinv/common.hpp"

namespace qinv {

/// Bit convention used throughout: qubit 1 owns the MOST significant index
/// bit, so qubit l owns bit 2^(n-l) of the amplitude index. A single-qubit
/// operator on qubit 1 therefore mixes amplitude s with amplitude 2^(n-1)+s.
///
/// All values in this header are immutable after construction and safe to
/// share across threads.
class PureState {
  public:
    /// Largest supported qubit count (2^n amplitudes must fit in memory and
    /// index arithmetic must stay well inside 64 bits).
    static constexpr int max_qubits = 30;

    /// Takes ownership of `amps`; requires amps.size() == 2^n and every
    /// entry finite.
    PureState(int n, std::vector<cplx> amps);

    int qubit_count() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amps() const { return amps_; }
    cplx amp(std::size_t index) const { return amps_[index]; }

    double norm_sq() const { return norm_sq_; }
    /// True when |norm^2 - 1| <= 1e-12. Invariant evaluators accept any
    /// finite vector; the measure layer insists on this flag.
    bool is_normalized() const { return normalized_; }

    /// Returns the unit-normalized copy. Zero vector -> param_error.
    PureState normalized() const;

  private:
    int n_;
    std::vector<cplx> amps_;
    double norm_sq_;
    bool normalized_;
};

/// Invertible (or not) 2x2 complex operator, row-major entries
///   [ b1 b2 ]
///   [ b3 b4 ]
struct LocalOperator {
    cplx b1, b2, b3, b4;

    cplx det() const { return b1 * b4 - b2 * b3; }

    /// Scaled copy with determinant 1 (divides by a square root of det).
    /// Requires det != 0.
    LocalOperator unit_determinant() const;

    static LocalOperator identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

/// One operator per qubit; position l (1-based) acts on qubit l.
class LocalOperatorChain {
  public:
    explicit LocalOperatorChain(std::vector<LocalOperator> ops);

    int size() const { return static_cast<int>(ops_.size()); }
    const LocalOperator& op(int qubit) const; // 1-based
    std::span<const LocalOperator> ops() const { return ops_; }

    cplx det_product() const;

    /// Chain with every operator rescaled to determinant 1.
    LocalOperatorChain unit_determinant() const;

    static LocalOperatorChain identity(int n);

  private:
    std::vector<LocalOperator> ops_;
};

/// Bijection on qubit labels {1, ..., n}.
class QubitPermutation {
  public:
    /// `map[i-1]` is the image of qubit i; must be a bijection on {1..n}.
    explicit QubitPermutation(std::vector<int> map);

    static QubitPermutation identity(int n);
    static QubitPermutation transposition(int n, int i, int j);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int qubit) const; // 1-based

    /// (a.compose(b))(i) == a(b(i)).
    QubitPermutation compose(const QubitPermutation& other) const;
    QubitPermutation inverse() const;
    bool is_identity() const;

    bool operator==(const QubitPermutation& other) const { return map_ == other.map_; }

    /// "id", "(1,3)", or the explicit image list "[2 1 4 3]".
    std::string to_string() const;

  private:
    std::vector<int> map_;
};

/// Probabilistic mixture {(p_i, psi_i)} with a common qubit count.
/// Weights must be nonnegative and sum to 1 within 1e-12; every member must
/// be unit-normalized.
class StateEnsemble {
  public:
    struct Member {
        double weight;
        PureState state;
    };

    explicit StateEnsemble(std::vector<Member> members);

    int qubit_count() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const Member& member(std::size_t i) const { return members_[i]; }
    std::span<const Member> members() const { return members_; }

  private:
    int n_;
    std::vector<Member> members_;
};

/// Applies `A` to qubit `l` (1-based): the standard strided 2x2 mix over
/// index pairs differing in bit 2^(n-l). O(2^n) time, O(1) auxiliary
/// storage beyond the output.
PureState apply_single(const PureState& state, int qubit, const LocalOperator& a);

/// Applies the whole chain, qubit 1 first. Operators on distinct qubits
/// commute, so the order does not affect the result.
PureState apply_chain(const PureState& state, const LocalOperatorChain& chain);

/// Relabels qubits: the output amplitude at index with bits (q_1,...,q_n)
/// is the input amplitude at index with bits (q_sigma(1),...,q_sigma(n)).
/// Exact integer index remapping, so composition and inversion laws hold
/// exactly: apply(sigma.compose(tau)) == apply(sigma) after apply(tau).
PureState apply_permutation(const PureState& state, const QubitPermutation& sigma);

} // namespace qinv
