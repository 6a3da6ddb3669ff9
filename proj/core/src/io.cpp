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
#include "qinv/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qinv {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw input_error("input is not valid JSON");
    }
    if (!j.is_object()) {
        throw input_error("input JSON must be an object");
    }
    return j;
}

int read_qubit_count(const json& j) {
    if (!j.contains("n") || !j.at("n").is_number_integer()) {
        throw input_error("input JSON needs an integer field \"n\"");
    }
    const auto n = j.at("n").get<long long>();
    if (n < 1 || n > PureState::max_qubits) {
        throw input_error("qubit count out of range");
    }
    return static_cast<int>(n);
}

cplx read_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw input_error(std::string(what) + " entries must be [re, im] pairs");
    }
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json write_complex(const cplx& z) {
    return json::array({z.real(), z.imag()});
}

std::vector<cplx> read_amplitudes(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) {
        throw input_error("\"amplitudes\" must list exactly 2^n entries");
    }
    std::vector<cplx> amps;
    amps.reserve(dim);
    for (const json& entry : j) {
        amps.push_back(read_complex(entry, "amplitude"));
    }
    return amps;
}

json write_amplitudes(const PureState& state) {
    json amps = json::array();
    for (const cplx& a : state.amps()) {
        amps.push_back(write_complex(a));
    }
    return amps;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw input_error("cannot read " + path.string());
    }
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text << '\n';
    if (!out.good()) {
        throw input_error("cannot write " + path.string());
    }
}

PureState state_from_parsed(const json& j) {
    const int n = read_qubit_count(j);
    if (!j.contains("amplitudes")) {
        throw input_error("state JSON needs an \"amplitudes\" array");
    }
    try {
        return PureState(n, read_amplitudes(j.at("amplitudes"), std::size_t{1} << n));
    } catch (const input_error&) {
        throw;
    } catch (const error& e) {
        throw input_error(e.what());
    }
}

StateEnsemble ensemble_from_parsed(const json& j) {
    const int n = read_qubit_count(j);
    if (!j.contains("ensemble") || !j.at("ensemble").is_array() || j.at("ensemble").empty()) {
        throw input_error("ensemble JSON needs a nonempty \"ensemble\" array");
    }
    std::vector<StateEnsemble::Member> members;
    for (const json& entry : j.at("ensemble")) {
        if (!entry.is_object() || !entry.contains("weight") || !entry.at("weight").is_number() ||
            !entry.contains("amplitudes")) {
            throw input_error("ensemble members need \"weight\" and \"amplitudes\"");
        }
        const double weight = entry.at("weight").get<double>();
        try {
            members.push_back(
                {weight, PureState(n, read_amplitudes(entry.at("amplitudes"), std::size_t{1} << n))});
        } catch (const input_error&) {
            throw;
        } catch (const error& e) {
            throw input_error(e.what());
        }
    }
    try {
        return StateEnsemble(std::move(members));
    } catch (const error& e) {
        throw input_error(e.what());
    }
}

DensityMatrix density_from_parsed(const json& j) {
    const int n = read_qubit_count(j);
    const std::size_t dim = std::size_t{1} << n;
    if (!j.contains("rho") || !j.at("rho").is_array() || j.at("rho").size() != dim) {
        throw input_error("density JSON needs a \"rho\" array of 2^n rows");
    }
    std::vector<cplx> entries;
    entries.reserve(dim * dim);
    for (const json& row : j.at("rho")) {
        if (!row.is_array() || row.size() != dim) {
            throw input_error("every \"rho\" row must list 2^n entries");
        }
        for (const json& entry : row) {
            entries.push_back(read_complex(entry, "rho"));
        }
    }
    return DensityMatrix(n, std::move(entries));
}

} // namespace

std::string state_to_json(const PureState& state) {
    json j;
    j["n"] = state.qubit_count();
    j["amplitudes"] = write_amplitudes(state);
    return j.dump();
}

PureState state_from_json(const std::string& text) {
    return state_from_parsed(parse(text));
}

std::string ensemble_to_json(const StateEnsemble& ensemble) {
    json j;
    j["n"] = ensemble.qubit_count();
    json members = json::array();
    for (const StateEnsemble::Member& member : ensemble.members()) {
        json entry;
        entry["weight"] = member.weight;
        entry["amplitudes"] = write_amplitudes(member.state);
        members.push_back(std::move(entry));
    }
    j["ensemble"] = std::move(members);
    return j.dump();
}

StateEnsemble ensemble_from_json(const std::string& text) {
    return ensemble_from_parsed(parse(text));
}

std::string density_to_json(const DensityMatrix& rho) {
    json j;
    j["n"] = rho.qubit_count();
    json rows = json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            row.push_back(write_complex(rho.entry(r, c)));
        }
        rows.push_back(std::move(row));
    }
    j["rho"] = std::move(rows);
    return j.dump();
}

DensityMatrix density_from_json(const std::string& text) {
    return density_from_parsed(parse(text));
}

PureState load_state(const std::filesystem::path& path) {
    return state_from_json(read_file(path));
}

void save_state(const PureState& state, const std::filesystem::path& path) {
    write_file(path, state_to_json(state));
}

StateEnsemble load_ensemble(const std::filesystem::path& path) {
    return ensemble_from_json(read_file(path));
}

void save_ensemble(const StateEnsemble& ensemble, const std::filesystem::path& path) {
    write_file(path, ensemble_to_json(ensemble));
}

DensityMatrix load_density(const std::filesystem::path& path) {
    return density_from_json(read_file(path));
}

void save_density(const DensityMatrix& rho, const std::filesystem::path& path) {
    write_file(path, density_to_json(rho));
}

StateEnsemble load_mixed_input(const std::filesystem::path& path) {
    const json j = parse(read_file(path));
    if (j.contains("amplitudes")) {
        PureState state = state_from_parsed(j);
        if (!state.is_normalized()) {
            throw input_error("pure-state input must be unit-normalized");
        }
        std::vector<StateEnsemble::Member> members;
        members.push_back({1.0, std::move(state)});
        return StateEnsemble(std::move(members));
    }
    if (j.contains("ensemble")) {
        return ensemble_from_parsed(j);
    }
    if (j.contains("rho")) {
        return eigen_ensemble(density_from_parsed(j));
    }
    throw input_error("input JSON needs one of \"amplitudes\", \"ensemble\" or \"rho\"");
}

} // namespace qinv
