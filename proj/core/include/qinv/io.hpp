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

#include <filesystem>
#include <string>

#include "qinv/density.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// JSON formats. All parsing failures raise input_error with a reason.
///
/// State:    {"n": int, "amplitudes": [[re, im], ...]}   (2^n entries,
///           index order: qubit 1 = most significant bit)
/// Ensemble: {"n": int, "ensemble": [{"weight": p, "amplitudes": [...]}]}
/// Density:  {"n": int, "rho": [[[re, im], ...], ...]}   (Hermitian,
///           trace 1 within 1e-9)

std::string state_to_json(const PureState& state);
PureState state_from_json(const std::string& text);

std::string ensemble_to_json(const StateEnsemble& ensemble);
StateEnsemble ensemble_from_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

PureState load_state(const std::filesystem::path& path);
void save_state(const PureState& state, const std::filesystem::path& path);

StateEnsemble load_ensemble(const std::filesystem::path& path);
void save_ensemble(const StateEnsemble& ensemble, const std::filesystem::path& path);

DensityMatrix load_density(const std::filesystem::path& path);
void save_density(const DensityMatrix& rho, const std::filesystem::path& path);

/// Reads a state, ensemble or density file, keyed on which of "amplitudes",
/// "ensemble", "rho" is present; a density is eigendecomposed on ingestion.
StateEnsemble load_mixed_input(const std::filesystem::path& path);

} // namespace qinv
