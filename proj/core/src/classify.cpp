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
#include "qinv/classify.hpp"

#include <cmath>
#include <sstream>

#include "qinv/named_states.hpp"

namespace qinv::classify {

std::vector<QubitPermutation> signature_generators(int n) {
    if (n < 2) {
        throw param_error("signature generators need n >= 2");
    }
    std::vector<QubitPermutation> generators;
    generators.push_back(QubitPermutation::identity(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            generators.push_back(QubitPermutation::transposition(n, i, j));
        }
    }
    return generators;
}

std::string FamilySignature::to_string() const {
    std::ostringstream os;
    os << g_bit << "|";
    for (const int b : p_bits) {
        os << b;
    }
    return os.str();
}

FamilySignature signature(const PureState& state, const ZeroTolerance& tol) {
    const int n = state.qubit_count();
    if (n % 2 != 0 || n < 4) {
        throw arity_error("family signatures require even n >= 4, got n=" + std::to_string(n));
    }
    if (state.norm_sq() == 0.0) {
        throw param_error("cannot classify the zero vector");
    }
    FamilySignature sig;
    sig.n = n;
    sig.g_bit = tol.is_zero(invariants::gn(state)) ? 0 : 1;
    for (const QubitPermutation& sigma : signature_generators(n)) {
        sig.p_bits.push_back(tol.is_zero(invariants::permuted_pn(state, sigma)) ? 0 : 1);
    }
    return sig;
}

Verdict compare(const PureState& a, const PureState& b, const ZeroTolerance& tol) {
    if (a.qubit_count() != b.qubit_count()) {
        throw param_error("cannot compare states of different qubit counts");
    }
    return signature(a, tol) == signature(b, tol) ? Verdict::undecided : Verdict::inequivalent;
}

ClassificationReport classify_states(const std::vector<PureState>& states,
                                     const ZeroTolerance& tol) {
    ClassificationReport report;
    report.signatures.reserve(states.size());
    for (const PureState& s : states) {
        report.signatures.push_back(signature(s, tol));
    }
    report.verdicts.assign(states.size(), std::vector<Verdict>(states.size(), Verdict::undecided));
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (i != j && !(report.signatures[i] == report.signatures[j])) {
                report.verdicts[i][j] = Verdict::inequivalent;
            }
        }
    }
    return report;
}

namespace {

struct NamedColumn {
    std::string label;
    PureState state;
};

std::vector<NamedColumn> table_states(int n) {
    return {{"GHZ", make_ghz(n)},
            {"W", make_w(n)},
            {"|" + std::to_string(n / 2) + "," + std::to_string(n) + ">", make_dicke(n, n / 2)},
            {"CL1", make_cl1(n)},
            {"CL2", make_cl2(n)}};
}

void require_table_n(int n) {
    if (n % 2 != 0 || n < 4) {
        throw arity_error("tables are defined for even n >= 4, got n=" + std::to_string(n));
    }
}

std::string zero_text(bool is_zero) { return is_zero ? "0" : "!=0"; }

/// Exact fraction for small dyadic magnitudes the tables contain (1/8,
/// 1/16); decimal text otherwise.
std::string exact_text(double v) {
    if (v == 0.0) {
        return "0";
    }
    for (const int den : {2, 4, 8, 16, 32}) {
        if (std::abs(v * den - 1.0) < 1e-12) {
            return "1/" + std::to_string(den);
        }
    }
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

Table2 table2(int n) {
    require_table_n(n);
    Table2 out;
    out.n = n;
    const ZeroTolerance tol;
    for (const NamedColumn& col : table_states(n)) {
        const invariants::InvariantValue g = invariants::gn(col.state);
        const invariants::InvariantValue p = invariants::pn_product_form(col.state);
        Table2Row row;
        row.label = col.label;
        row.g_entry = zero_text(tol.is_zero(g));
        row.p_entry = zero_text(tol.is_zero(p));
        if (!tol.is_zero(p) && (col.label == "CL1")) {
            // Render the n=4 exception with its signed value.
            std::ostringstream os;
            os << p.value.real();
            row.p_entry = os.str();
        }
        out.rows.push_back(std::move(row));
    }
    out.notes.push_back("CL1/CL2 degree-2 entries are zero for n/2 even, nonzero for n/2 odd");
    if (n == 4) {
        out.notes.push_back("P_4(|2,4>) = 0 and P_4(CL1_4) = -1/8 are the n=4 exceptions");
    }
    out.notes.push_back("degree-6 row: out of scope");
    return out;
}

Table5 table5(const std::vector<int>& ns) {
    if (ns.empty()) {
        throw param_error("table 5 needs at least one n");
    }
    Table5 out;
    out.ns = ns;
    out.labels = {"GHZ", "W", "|n/2,n>", "CL1", "CL2"};
    out.cells.assign(out.labels.size(), {});
    for (const int n : ns) {
        require_table_n(n);
        const std::vector<NamedColumn> cols = table_states(n);
        const ZeroTolerance tol;
        for (std::size_t row = 0; row < cols.size(); ++row) {
            const invariants::InvariantValue p = invariants::pn_product_form(cols[row].state);
            Table5Cell cell;
            cell.value = tol.is_zero(p) ? 0.0 : std::abs(p.value);
            cell.exact = exact_text(cell.value);
            out.cells[row].push_back(std::move(cell));
        }
    }
    return out;
}

} // namespace qinv::classify
