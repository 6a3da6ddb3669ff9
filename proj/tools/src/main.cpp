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
//
// qinv: evaluate SLOCC polynomial invariants, classify states, reproduce
// the reference tables, run randomized property suites, estimate convex
// roofs. Exit codes: 0 ok, 2 bad input, 3 arity (odd n for an even-only
// operation), 4 property-suite failure.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "qinv/qinv.hpp"

namespace {

using nlohmann::json;
using qinv::cplx;
using qinv::PureState;

enum class Format { text, json, csv };

Format parse_format(const std::string& text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw qinv::param_error("unknown format: " + text);
}

std::string fmt(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::string csv_field(const std::string& text) {
    if (text.find(',') == std::string::npos) {
        return text;
    }
    return "\"" + text + "\"";
}

std::string fmt_exact(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string fmt(cplx z) {
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "%.12g%+.12gi", z.real(), z.imag());
    return buffer;
}

// ---------------------------------------------------------------- eval --

struct EvalOptions {
    std::string state;
    std::string input;
    int n = 0;
    std::string invariants = "g,p";
    std::string format = "text";
    double tol_abs = 1e-12;
    double tol_rel = 1e-9;
    std::string dump;
};

struct EvalRow {
    std::string name;
    cplx value;
    double scale = 0.0;
    int degree = 0; // 0 for derived real quantities
    bool zero = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

// Splits the --invariants list on commas, re-joining the comma that belongs
// to a p-perm:<i,j> name.
std::vector<std::string> split_invariant_list(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    std::vector<std::string> merged;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool open_perm = parts[i].rfind("p-perm:", 0) == 0;
        if (open_perm && i + 1 < parts.size() && !parts[i + 1].empty() &&
            parts[i + 1].find_first_not_of("0123456789") == std::string::npos) {
            merged.push_back(parts[i] + "," + parts[i + 1]);
            ++i;
        } else {
            merged.push_back(parts[i]);
        }
    }
    return merged;
}

PureState load_eval_state(const std::string& named, const std::string& input, int n) {
    if (!named.empty() && !input.empty()) {
        throw qinv::param_error("pass either --state or --input, not both");
    }
    if (!named.empty()) {
        if (n <= 0) {
            throw qinv::param_error("--state needs --n");
        }
        const qinv::NamedSpec spec = qinv::parse_named(named);
        return qinv::make_named(spec.kind, n, spec.k);
    }
    if (!input.empty()) {
        PureState state = qinv::load_state(input);
        if (n > 0 && n != state.qubit_count()) {
            throw qinv::input_error("--n disagrees with the qubit count of " + input);
        }
        return state;
    }
    throw qinv::param_error("pass a state via --state or --input");
}

qinv::QubitPermutation parse_perm_suffix(const std::string& suffix, int n) {
    const auto parts = split(suffix, ',');
    if (parts.size() != 2) {
        throw qinv::param_error("p-perm takes two qubit labels, e.g. p-perm:1,3");
    }
    int i = 0;
    int j = 0;
    try {
        i = std::stoi(parts[0]);
        j = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw qinv::param_error("p-perm labels must be integers");
    }
    return qinv::QubitPermutation::transposition(n, i, j);
}

void append_rows(std::vector<EvalRow>& rows, const std::string& name, const PureState& state,
                 const qinv::classify::ZeroTolerance& tol) {
    using namespace qinv::invariants;
    const auto push = [&](const std::string& label, cplx value, double scale, int degree) {
        rows.push_back({label, value, scale, degree, tol.is_zero(std::abs(value), scale)});
    };
    if (name == "g") {
        const InvariantValue v = gn(state);
        push(name, v.value, v.scale, v.degree);
    } else if (name == "p") {
        const InvariantValue v = pn_product_form(state);
        push(name, v.value, v.scale, v.degree);
    } else if (name.rfind("p-perm:", 0) == 0) {
        const auto sigma = parse_perm_suffix(name.substr(7), state.qubit_count());
        const InvariantValue v = permuted_pn(state, sigma);
        push(name, v.value, v.scale, v.degree);
    } else if (name == "det") {
        const InvariantValue v = det_invariant(state);
        push(name, v.value, v.scale, v.degree);
    } else if (name == "lmn") {
        const FourQubitBasis basis = four_qubit_basis(state);
        push("l", basis.l, basis.scale, 4);
        push("m", basis.m, basis.scale, 4);
        push("n", basis.n, basis.scale, 4);
    } else if (name == "concurrence") {
        const InvariantValue v = gn(state);
        push(name, cplx(2.0 * std::abs(v.value), 0.0), 2.0 * v.scale, 0);
    } else if (name == "tangle") {
        const InvariantValue v = gn(state);
        const double a = std::abs(v.value);
        push(name, cplx(4.0 * a * a, 0.0), 4.0 * v.scale * v.scale, 0);
    } else {
        throw qinv::param_error("unknown invariant: " + name);
    }
}

int run_eval(const EvalOptions& opt) {
    const Format format = parse_format(opt.format);
    const PureState state = load_eval_state(opt.state, opt.input, opt.n);
    if (!opt.dump.empty()) {
        qinv::save_state(state, opt.dump);
    }
    const qinv::classify::ZeroTolerance tol{opt.tol_abs, opt.tol_rel};
    std::vector<EvalRow> rows;
    for (const std::string& name : split_invariant_list(opt.invariants)) {
        if (!name.empty()) {
            append_rows(rows, name, state, tol);
        }
    }
    if (rows.empty()) {
        throw qinv::param_error("--invariants names no invariant");
    }
    if (format == Format::json) {
        json out;
        out["n"] = state.qubit_count();
        out["normalized"] = state.is_normalized();
        json results = json::array();
        for (const EvalRow& row : rows) {
            json r;
            r["name"] = row.name;
            r["value"] = json::array({row.value.real(), row.value.imag()});
            r["abs"] = std::abs(row.value);
            r["scale"] = row.scale;
            r["degree"] = row.degree;
            r["zero"] = row.zero;
            results.push_back(std::move(r));
        }
        out["results"] = std::move(results);
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("name,re,im,abs,scale,degree,zero\n");
        for (const EvalRow& row : rows) {
            std::printf("%s,%s,%s,%s,%s,%d,%s\n", csv_field(row.name).c_str(),
                        fmt_exact(row.value.real()).c_str(), fmt_exact(row.value.imag()).c_str(),
                        fmt_exact(std::abs(row.value)).c_str(), fmt_exact(row.scale).c_str(),
                        row.degree, row.zero ? "true" : "false");
        }
    } else {
        std::printf("n=%d normalized=%s\n", state.qubit_count(),
                    state.is_normalized() ? "yes" : "no");
        std::printf("%-14s %-28s %-14s %-14s %s\n", "invariant", "value", "|value|", "scale",
                    "zero");
        for (const EvalRow& row : rows) {
            std::printf("%-14s %-28s %-14s %-14s %s\n", row.name.c_str(), fmt(row.value).c_str(),
                        fmt(std::abs(row.value)).c_str(), fmt(row.scale).c_str(),
                        row.zero ? "yes" : "no");
        }
    }
    return 0;
}

// ------------------------------------------------------------ classify --

struct ClassifyOptions {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    int n = 0;
    std::string format = "text";
    double tol_abs = 1e-12;
    double tol_rel = 1e-9;
};

int run_classify(const ClassifyOptions& opt) {
    const Format format = parse_format(opt.format);
    std::vector<std::string> labels;
    std::vector<PureState> states;
    for (const std::string& name : opt.states) {
        if (opt.n <= 0) {
            throw qinv::param_error("--state needs --n");
        }
        const qinv::NamedSpec spec = qinv::parse_named(name);
        labels.push_back(name);
        states.push_back(qinv::make_named(spec.kind, opt.n, spec.k));
    }
    for (const std::string& path : opt.inputs) {
        labels.push_back(std::filesystem::path(path).filename().string());
        states.push_back(qinv::load_state(path));
    }
    if (states.empty()) {
        throw qinv::param_error("classify needs at least one --state or --input");
    }
    const qinv::classify::ZeroTolerance tol{opt.tol_abs, opt.tol_rel};
    const auto report = qinv::classify::classify_states(states, tol);
    const auto verdict_name = [](qinv::classify::Verdict v) {
        return v == qinv::classify::Verdict::inequivalent ? "inequivalent" : "undecided";
    };
    if (format == Format::json) {
        json out;
        json sigs = json::array();
        for (std::size_t i = 0; i < states.size(); ++i) {
            json s;
            s["label"] = labels[i];
            s["signature"] = report.signatures[i].to_string();
            sigs.push_back(std::move(s));
        }
        out["n"] = states.front().qubit_count();
        out["signatures"] = std::move(sigs);
        json verdicts = json::array();
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                json v;
                v["a"] = labels[i];
                v["b"] = labels[j];
                v["verdict"] = verdict_name(report.verdicts[i][j]);
                verdicts.push_back(std::move(v));
            }
        }
        out["verdicts"] = std::move(verdicts);
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("label,signature\n");
        for (std::size_t i = 0; i < states.size(); ++i) {
            std::printf("%s,%s\n", labels[i].c_str(), report.signatures[i].to_string().c_str());
        }
        std::printf("a,b,verdict\n");
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                std::printf("%s,%s,%s\n", labels[i].c_str(), labels[j].c_str(),
                            verdict_name(report.verdicts[i][j]));
            }
        }
    } else {
        std::printf("%-18s signature (g | sigma-P bits)\n", "state");
        for (std::size_t i = 0; i < states.size(); ++i) {
            std::printf("%-18s %s\n", labels[i].c_str(), report.signatures[i].to_string().c_str());
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                std::printf("%s vs %s: %s\n", labels[i].c_str(), labels[j].c_str(),
                            verdict_name(report.verdicts[i][j]));
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------- tables --

struct TablesOptions {
    int which = 0;
    int n = 0;
    std::string format = "text";
};

int run_table1(Format format) {
    // The permuted degree-4 family closes over {P4, P4', P4''}; verify on a
    // few random states before printing the grid.
    const auto rep = qinv::invariants::check_closure(8, 0);
    if (!rep.passed()) {
        throw qinv::internal_error("closure grid failed numeric verification");
    }
    const char* cols[3] = {"P4", "P4'", "P4''"};
    const char* grid[3][3] = {
        {"P4", "P4''", "P4'"},  // (1,2)
        {"P4'", "P4", "P4''"},  // (1,3)
        {"P4''", "P4'", "P4"},  // (1,4)
    };
    const char* rows[3] = {"(1,2)", "(1,3)", "(1,4)"};
    if (format == Format::json) {
        json out;
        out["which"] = 1;
        out["columns"] = json::array({cols[0], cols[1], cols[2]});
        json lines = json::array();
        for (int r = 0; r < 3; ++r) {
            json line;
            line["swap"] = rows[r];
            line["images"] = json::array({grid[r][0], grid[r][1], grid[r][2]});
            lines.push_back(std::move(line));
        }
        out["rows"] = std::move(lines);
        out["verified_trials"] = rep.trials;
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("swap,%s,%s,%s\n", cols[0], cols[1], cols[2]);
        for (int r = 0; r < 3; ++r) {
            std::printf("%s,%s,%s,%s\n", rows[r], grid[r][0], grid[r][1], grid[r][2]);
        }
    } else {
        std::printf("%-8s %-6s %-6s %-6s\n", "swap", cols[0], cols[1], cols[2]);
        for (int r = 0; r < 3; ++r) {
            std::printf("%-8s %-6s %-6s %-6s\n", rows[r], grid[r][0], grid[r][1], grid[r][2]);
        }
        std::printf("verified: %d checks on random states (max err %s)\n", rep.trials,
                    fmt(rep.max_error).c_str());
    }
    return 0;
}

int run_table2(int n, Format format) {
    const auto table = qinv::classify::table2(n);
    if (format == Format::json) {
        json out;
        out["which"] = 2;
        out["n"] = n;
        json rows = json::array();
        for (const auto& row : table.rows) {
            json r;
            r["state"] = row.label;
            r["g"] = row.g_entry;
            r["p"] = row.p_entry;
            rows.push_back(std::move(r));
        }
        out["rows"] = std::move(rows);
        out["notes"] = table.notes;
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("state,g,p\n");
        for (const auto& row : table.rows) {
            std::printf("%s,%s,%s\n", row.label.c_str(), row.g_entry.c_str(),
                        row.p_entry.c_str());
        }
    } else {
        std::printf("n = %d\n", n);
        std::printf("%-10s %-12s %-12s\n", "state", "G_n", "P_n");
        for (const auto& row : table.rows) {
            std::printf("%-10s %-12s %-12s\n", row.label.c_str(), row.g_entry.c_str(),
                        row.p_entry.c_str());
        }
        for (const auto& note : table.notes) {
            std::printf("note: %s\n", note.c_str());
        }
    }
    return 0;
}

int run_table5(int n, Format format) {
    const auto table = qinv::classify::table5({n});
    if (format == Format::json) {
        json out;
        out["which"] = 5;
        out["n"] = n;
        json rows = json::array();
        for (std::size_t i = 0; i < table.labels.size(); ++i) {
            json r;
            r["state"] = table.labels[i];
            r["value"] = table.cells[i][0].value;
            r["exact"] = table.cells[i][0].exact;
            rows.push_back(std::move(r));
        }
        out["rows"] = std::move(rows);
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("state,value,exact\n");
        for (std::size_t i = 0; i < table.labels.size(); ++i) {
            std::printf("%s,%s,%s\n", table.labels[i].c_str(),
                        fmt_exact(table.cells[i][0].value).c_str(),
                        table.cells[i][0].exact.c_str());
        }
    } else {
        std::printf("|P_%d| of the named states\n", n);
        std::printf("%-10s %-22s %s\n", "state", "value", "exact");
        for (std::size_t i = 0; i < table.labels.size(); ++i) {
            std::printf("%-10s %-22s %s\n", table.labels[i].c_str(),
                        fmt(table.cells[i][0].value).c_str(), table.cells[i][0].exact.c_str());
        }
    }
    return 0;
}

int run_tables(const TablesOptions& opt) {
    const Format format = parse_format(opt.format);
    if (opt.which == 1) {
        if (opt.n != 0 && opt.n != 4) {
            throw qinv::arity_error("table 1 is defined for n = 4");
        }
        return run_table1(format);
    }
    if (opt.which == 2 || opt.which == 5) {
        if (opt.n <= 0) {
            throw qinv::param_error("tables --which 2|5 needs --n");
        }
        return opt.which == 2 ? run_table2(opt.n, format) : run_table5(opt.n, format);
    }
    throw qinv::param_error("--which must be 1, 2 or 5");
}

// ---------------------------------------------------------------- roof --

struct RoofOptions {
    std::string input;
    int restarts = 16;
    std::uint64_t seed = 0;
    std::string format = "text";
};

int run_roof(const RoofOptions& opt) {
    const Format format = parse_format(opt.format);
    const qinv::StateEnsemble ensemble = qinv::load_mixed_input(opt.input);
    qinv::measure::RoofConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    const auto result = qinv::measure::convex_roof(ensemble, cfg);
    if (format == Format::json) {
        json out;
        out["estimate"] = result.estimate;
        out["eigen_average"] = result.eigen_average;
        out["restarts_converged"] = result.restarts_converged;
        out["ensemble"] = json::parse(qinv::ensemble_to_json(result.ensemble));
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("estimate,eigen_average,restarts_converged,members\n");
        std::printf("%s,%s,%d,%zu\n", fmt_exact(result.estimate).c_str(),
                    fmt_exact(result.eigen_average).c_str(), result.restarts_converged,
                    result.ensemble.size());
    } else {
        std::printf("roof estimate (upper bound): %s\n", fmt(result.estimate).c_str());
        std::printf("eigen-decomposition average: %s\n", fmt(result.eigen_average).c_str());
        std::printf("restarts converged:          %d/%d\n", result.restarts_converged,
                    opt.restarts);
        std::printf("ensemble size:               %zu\n", result.ensemble.size());
        if (result.restarts_converged == 0) {
            std::printf("warning: no restart converged; the bound may be loose\n");
        }
    }
    return 0;
}

// --------------------------------------------------------------- check --

struct CheckOptions {
    std::string property;
    int n = 0;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string format = "text";
};

int run_check(const CheckOptions& opt) {
    const Format format = parse_format(opt.format);
    if (opt.trials < 1) {
        throw qinv::param_error("--trials must be positive");
    }
    qinv::CheckReport report;
    if (opt.property == "closure") {
        if (opt.n != 0 && opt.n != 4) {
            throw qinv::arity_error("closure is defined for n = 4");
        }
        report = qinv::invariants::check_closure(opt.trials, opt.seed);
    } else {
        if (opt.n <= 0) {
            throw qinv::param_error("check " + opt.property + " needs --n");
        }
        if (opt.property == "covariance-g") {
            report = qinv::invariants::check_covariance_g(opt.n, opt.trials, opt.seed);
        } else if (opt.property == "covariance-p") {
            report = qinv::invariants::check_covariance_p(opt.n, opt.trials, opt.seed);
        } else if (opt.property == "dual-form") {
            report = qinv::invariants::check_dual_form(opt.n, opt.trials, opt.seed);
        } else if (opt.property == "product-rules") {
            report = qinv::measure::check_product_rules(opt.n, opt.trials, opt.seed);
        } else if (opt.property == "bound") {
            report = qinv::measure::check_bound(opt.n, opt.trials, opt.seed);
        } else {
            throw qinv::param_error("unknown property: " + opt.property);
        }
    }
    if (format == Format::json) {
        json out;
        out["property"] = opt.property;
        out["n"] = opt.n;
        out["requested_trials"] = opt.trials;
        out["seed"] = opt.seed;
        out["checks"] = report.trials;
        out["failures"] = report.failures;
        out["max_error"] = report.max_error;
        out["passed"] = report.passed();
        out["notes"] = report.failure_notes;
        std::printf("%s\n", out.dump(2).c_str());
    } else if (format == Format::csv) {
        std::printf("property,n,trials,checks,failures,max_error,passed\n");
        std::printf("%s,%d,%d,%d,%d,%s,%s\n", opt.property.c_str(), opt.n, opt.trials,
                    report.trials, report.failures, fmt_exact(report.max_error).c_str(),
                    report.passed() ? "true" : "false");
    } else {
        std::printf("check %s: n=%d trials=%d seed=%llu\n", opt.property.c_str(), opt.n,
                    opt.trials, static_cast<unsigned long long>(opt.seed));
        std::printf("checks=%d failures=%d max_error=%s\n", report.trials, report.failures,
                    fmt(report.max_error).c_str());
        for (const std::string& note : report.failure_notes) {
            std::printf("failed: %s\n", note.c_str());
        }
        if (!report.passed()) {
            std::printf("replay: qinv check %s --n %d --trials %d --seed %llu\n",
                        opt.property.c_str(), opt.n, opt.trials,
                        static_cast<unsigned long long>(opt.seed));
        }
        std::printf("%s\n", report.passed() ? "PASS" : "FAIL");
    }
    return report.passed() ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC polynomial invariants of even-n qubit states"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate invariants of one state");
    eval_cmd->add_option("--state", eval_opt.state, "Named state: ghz, w, dicke:<k>, cl1, cl2");
    eval_cmd->add_option("--n", eval_opt.n, "Qubit count for --state");
    eval_cmd->add_option("--input", eval_opt.input, "State JSON file");
    eval_cmd->add_option("--invariants", eval_opt.invariants,
                         "Comma list: g, p, p-perm:<i,j>, det, lmn, concurrence, tangle");
    eval_cmd->add_option("--format", eval_opt.format, "Output format: text, json, csv");
    eval_cmd->add_option("--tol-abs", eval_opt.tol_abs, "Zero-verdict absolute floor");
    eval_cmd->add_option("--tol-rel", eval_opt.tol_rel, "Zero-verdict relative factor");
    eval_cmd->add_option("--dump", eval_opt.dump, "Write the evaluated state as JSON");

    ClassifyOptions classify_opt;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Signatures and pairwise verdicts of a state set");
    classify_cmd->add_option("--state", classify_opt.states, "Named state (repeatable)");
    classify_cmd->add_option("--input", classify_opt.inputs, "State JSON file (repeatable)");
    classify_cmd->add_option("--n", classify_opt.n, "Qubit count for named states");
    classify_cmd->add_option("--format", classify_opt.format, "Output format: text, json, csv");
    classify_cmd->add_option("--tol-abs", classify_opt.tol_abs, "Zero-verdict absolute floor");
    classify_cmd->add_option("--tol-rel", classify_opt.tol_rel, "Zero-verdict relative factor");

    TablesOptions tables_opt;
    CLI::App* tables_cmd = app.add_subcommand("tables", "Reproduce the reference tables");
    tables_cmd->add_option("--which", tables_opt.which, "Table number: 1, 2 or 5")->required();
    tables_cmd->add_option("--n", tables_opt.n, "Qubit count (tables 2 and 5)");
    tables_cmd->add_option("--format", tables_opt.format, "Output format: text, json, csv");

    RoofOptions roof_opt;
    CLI::App* roof_cmd =
        app.add_subcommand("roof", "Convex-roof upper bound for a mixed state");
    roof_cmd->add_option("--input", roof_opt.input, "State, ensemble or density JSON file")
        ->required();
    roof_cmd->add_option("--restarts", roof_opt.restarts, "Optimizer restarts");
    roof_cmd->add_option("--seed", roof_opt.seed, "RNG seed");
    roof_cmd->add_option("--format", roof_opt.format, "Output format: text, json, csv");

    CheckOptions check_opt;
    CLI::App* check_cmd = app.add_subcommand("check", "Run a randomized property suite");
    check_cmd
        ->add_option("property", check_opt.property,
                     "covariance-g, covariance-p, dual-form, product-rules, bound, closure")
        ->required();
    check_cmd->add_option("--n", check_opt.n, "Qubit count");
    check_cmd->add_option("--trials", check_opt.trials, "Trial count");
    check_cmd->add_option("--seed", check_opt.seed, "RNG seed");
    check_cmd->add_option("--format", check_opt.format, "Output format: text, json, csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_opt);
        if (classify_cmd->parsed()) return run_classify(classify_opt);
        if (tables_cmd->parsed()) return run_tables(tables_opt);
        if (roof_cmd->parsed()) return run_roof(roof_opt);
        if (check_cmd->parsed()) return run_check(check_opt);
    } catch (const qinv::arity_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const qinv::internal_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    } catch (const qinv::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
