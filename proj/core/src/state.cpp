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
#include "qinv/state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qinv {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

PureState::PureState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (n_ < 1 || n_ > max_qubits) {
        throw param_error("qubit count must be in [1, " + std::to_string(max_qubits) + "], got " +
                          std::to_string(n_));
    }
    const std::size_t expected = std::size_t{1} << n_;
    if (amps_.size() != expected) {
        throw param_error("amplitude count " + std::to_string(amps_.size()) + " does not match 2^" +
                          std::to_string(n_));
    }
    double nsq = 0.0;
    for (const cplx& a : amps_) {
        if (!finite(a)) {
            throw param_error("non-finite amplitude");
        }
        nsq += std::norm(a);
    }
    if (!std::isfinite(nsq)) {
        throw param_error("state norm overflows");
    }
    norm_sq_ = nsq;
    normalized_ = std::abs(nsq - 1.0) <= 1e-12;
}

PureState PureState::normalized() const {
    if (norm_sq_ <= 0.0) {
        throw param_error("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm_sq_);
    std::vector<cplx> out(amps_.begin(), amps_.end());
    for (cplx& a : out) {
        a *= inv;
    }
    return PureState(n_, std::move(out));
}

LocalOperator LocalOperator::unit_determinant() const {
    const cplx d = det();
    if (d == cplx(0.0, 0.0)) {
        throw param_error("cannot rescale a singular operator to determinant 1");
    }
    const cplx s = 1.0 / std::sqrt(d);
    return {b1 * s, b2 * s, b3 * s, b4 * s};
}

LocalOperatorChain::LocalOperatorChain(std::vector<LocalOperator> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw param_error("operator chain must not be empty");
    }
}

const LocalOperator& LocalOperatorChain::op(int qubit) const {
    if (qubit < 1 || qubit > size()) {
        throw param_error("chain position " + std::to_string(qubit) + " out of range");
    }
    return ops_[static_cast<std::size_t>(qubit - 1)];
}

cplx LocalOperatorChain::det_product() const {
    cplx p{1.0, 0.0};
    for (const LocalOperator& a : ops_) {
        p *= a.det();
    }
    return p;
}

LocalOperatorChain LocalOperatorChain::unit_determinant() const {
    std::vector<LocalOperator> out;
    out.reserve(ops_.size());
    for (const LocalOperator& a : ops_) {
        out.push_back(a.unit_determinant());
    }
    return LocalOperatorChain(std::move(out));
}

LocalOperatorChain LocalOperatorChain::identity(int n) {
    return LocalOperatorChain(std::vector<LocalOperator>(static_cast<std::size_t>(n),
                                                         LocalOperator::identity()));
}

QubitPermutation::QubitPermutation(std::vector<int> map) : map_(std::move(map)) {
    const int n = static_cast<int>(map_.size());
    if (n < 1) {
        throw param_error("permutation must act on at least one qubit");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : map_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw param_error("permutation image list is not a bijection on {1..n}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

QubitPermutation QubitPermutation::identity(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 1);
    return QubitPermutation(std::move(map));
}

QubitPermutation QubitPermutation::transposition(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j) {
        throw param_error("transposition indices must be distinct qubits in {1..n}");
    }
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 1);
    std::swap(map[static_cast<std::size_t>(i - 1)], map[static_cast<std::size_t>(j - 1)]);
    return QubitPermutation(std::move(map));
}

int QubitPermutation::operator()(int qubit) const {
    if (qubit < 1 || qubit > size()) {
        throw param_error("qubit label out of range");
    }
    return map_[static_cast<std::size_t>(qubit - 1)];
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& other) const {
    if (size() != other.size()) {
        throw param_error("cannot compose permutations of different sizes");
    }
    std::vector<int> map(map_.size());
    for (int i = 1; i <= size(); ++i) {
        map[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    }
    return QubitPermutation(std::move(map));
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> map(map_.size());
    for (int i = 1; i <= size(); ++i) {
        map[static_cast<std::size_t>((*this)(i)-1)] = i;
    }
    return QubitPermutation(std::move(map));
}

bool QubitPermutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) {
            return false;
        }
    }
    return true;
}

std::string QubitPermutation::to_string() const {
    if (is_identity()) {
        return "id";
    }
    // Recognize a single transposition for compact output.
    std::vector<int> moved;
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) {
            moved.push_back(i);
        }
    }
    if (moved.size() == 2 && (*this)(moved[0]) == moved[1] && (*this)(moved[1]) == moved[0]) {
        std::ostringstream os;
        os << "(" << moved[0] << "," << moved[1] << ")";
        return os.str();
    }
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= size(); ++i) {
        os << (i > 1 ? " " : "") << (*this)(i);
    }
    os << "]";
    return os.str();
}

StateEnsemble::StateEnsemble(std::vector<Member> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw param_error("ensemble must contain at least one member");
    }
    n_ = members_.front().state.qubit_count();
    double total = 0.0;
    for (const Member& m : members_) {
        if (m.state.qubit_count() != n_) {
            throw param_error("ensemble members must share one qubit count");
        }
        if (!(m.weight >= 0.0) || !std::isfinite(m.weight)) {
            throw param_error("ensemble weights must be nonnegative");
        }
        if (!m.state.is_normalized()) {
            throw normalization_error("ensemble members must be unit-normalized");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw param_error("ensemble weights must sum to 1");
    }
}

PureState apply_single(const PureState& state, int qubit, const LocalOperator& a) {
    const int n = state.qubit_count();
    if (qubit < 1 || qubit > n) {
        throw param_error("qubit index " + std::to_string(qubit) + " out of range for n=" +
                          std::to_string(n));
    }
    const std::size_t dim = state.dim();
    const std::size_t bit = std::size_t{1} << (n - qubit);
    std::vector<cplx> out(state.amps().begin(), state.amps().end());
    // Enumerate indices with the target bit clear by splicing the counter
    // around the bit position.
    const std::size_t low_mask = bit - 1;
    const std::size_t high_mask = ~low_mask;
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t i0 = ((k & high_mask) << 1) | (k & low_mask);
        const std::size_t i1 = i0 | bit;
        const cplx v0 = out[i0];
        const cplx v1 = out[i1];
        out[i0] = a.b1 * v0 + a.b2 * v1;
        out[i1] = a.b3 * v0 + a.b4 * v1;
    }
    return PureState(n, std::move(out));
}

PureState apply_chain(const PureState& state, const LocalOperatorChain& chain) {
    if (chain.size() != state.qubit_count()) {
        throw param_error("chain length " + std::to_string(chain.size()) +
                          " does not match qubit count " + std::to_string(state.qubit_count()));
    }
    PureState out = state;
    for (int l = 1; l <= chain.size(); ++l) {
        out = apply_single(out, l, chain.op(l));
    }
    return out;
}

PureState apply_permutation(const PureState& state, const QubitPermutation& sigma) {
    const int n = state.qubit_count();
    if (sigma.size() != n) {
        throw param_error("permutation size " + std::to_string(sigma.size()) +
                          " does not match qubit count " + std::to_string(n));
    }
    if (sigma.is_identity()) {
        return state;
    }
    const std::size_t dim = state.dim();
    const std::span<const cplx> in = state.amps();
    std::vector<cplx> out(dim);
    // Destination slot of the bit read from slot i: h gets g's slot-i bit at
    // slot sigma(i), so h_sigma(i) = g_i, i.e. g_i = h_sigma(i). Reading out
    // at h therefore picks up the input at (h_sigma(1), ..., h_sigma(n)).
    std::vector<int> dst_shift(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        dst_shift[static_cast<std::size_t>(i - 1)] = n - sigma(i);
    }
    for (std::size_t g = 0; g < dim; ++g) {
        std::size_t h = 0;
        for (int i = 1; i <= n; ++i) {
            const std::size_t qbit = (g >> (n - i)) & 1U;
            h |= qbit << dst_shift[static_cast<std::size_t>(i - 1)];
        }
        out[h] = in[g];
    }
    return PureState(n, std::move(out));
}

} // namespace qinv
