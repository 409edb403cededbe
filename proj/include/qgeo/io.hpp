// Copyright 2026 The qgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGEO_IO_HPP_
#define QGEO_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "qgeo/geometry.hpp"
#include "qgeo/hamiltonian.hpp"
#include "qgeo/propagation.hpp"
#include "qgeo/speedlimit.hpp"
#include "qgeo/states.hpp"
#include "qgeo/sweep.hpp"

namespace qgeo {

using Json = nlohmann::ordered_json;

// States: {"re": [...], "im": [...]}.
Json state_to_json(const QuantumState& psi);
QuantumState state_from_json(const Json& j, double tol = QuantumState::kNormTolerance);

// Matrices: {"re": [[...]], "im": [[...]]}, row major.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Constant matrices add "kind": "constant" and "hbar"; the two-level presets
// are {"kind": "two_level_static"|"two_level_driven", "epsilon", "omega",
// "omega0", "hbar"}. A user-supplied H(t) is recorded as
// {"kind": "time_dependent", "dim", "hbar"} and cannot be read back.
Json hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const Json& j);

/// Trace envelope: format tag, hbar, the Hamiltonian used (may be null) and
/// the sampled arrays. Doubles round-trip exactly.
Json trace_to_json(const EvolutionTrace& trace, const Json& hamiltonian = nullptr);
EvolutionTrace trace_from_json(const Json& j);

/// Columns: t, re_0, im_0, ..., re_{n-1}, im_{n-1}, energy_mean,
/// energy_dispersion; 17 significant digits.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

Json report_to_json(const SpeedLimitReport& r);
Json implicit_to_json(const ImplicitTime& t);
Json sweep_to_json(const SweepSummary& s);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qgeo

#endif  // QGEO_IO_HPP_
