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

#ifndef QGEO_SCENARIO_HPP_
#define QGEO_SCENARIO_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>

#include "qgeo/geometry.hpp"
#include "qgeo/hamiltonian.hpp"
#include "qgeo/io.hpp"
#include "qgeo/propagation.hpp"
#include "qgeo/speedlimit.hpp"

namespace qgeo {

enum class ScenarioKind { kStatic, kDriven, kCustom };
enum class UnitSystem { kNatural, kSi };
enum class OutputFormat { kJson, kCsv, kTable };

/// Flat experiment description. Recognised parameters: epsilon, omega,
/// omega0, hbar, b_perp_tesla, b_parallel_tesla and, for custom runs, t_final.
struct ScenarioConfig {
  static constexpr int kDefaultSteps = 2000;
  static constexpr int kMinSteps = 100;

  ScenarioKind scenario = ScenarioKind::kStatic;
  std::map<std::string, double> parameters;
  int steps = kDefaultSteps;
  UnitSystem unit_system = UnitSystem::kNatural;
  OutputFormat output = OutputFormat::kJson;
  // Custom scenario only.
  Json hamiltonian = nullptr;
  Json initial_state = nullptr;

  std::optional<double> parameter(const std::string& name) const;

  /// Keys: scenario, steps, unit_system, output, hamiltonian, initial_state;
  /// any other numeric key is a parameter. Unknown non-numeric keys are
  /// rejected.
  static ScenarioConfig from_json(const Json& j);
  Json to_json() const;
};

ScenarioKind parse_scenario_kind(const std::string& s);
UnitSystem parse_unit_system(const std::string& s);
OutputFormat parse_output_format(const std::string& s);
std::string to_string(ScenarioKind k);
std::string to_string(UnitSystem u);
std::string to_string(OutputFormat f);

/// Field-derived quantities of an si run, in SI units.
struct SiSummary {
  std::optional<double> b_perp_tesla;
  std::optional<double> b_parallel_tesla;
  double omega_rabi = 0.0;  // rad/s
  std::optional<double> omega_larmor;  // rad/s
  std::optional<double> nu_larmor_hz;
  double t_effective_seconds = 0.0;
};

struct ScenarioResult {
  ScenarioConfig config;
  Hamiltonian hamiltonian;
  EvolutionTrace trace;
  SpeedLimitReport report;
  /// "integrator" or "closed_form".
  std::string propagation;
  std::optional<ImplicitTime> implicit;
  std::optional<SiSummary> si;
};

/// Builds the Hamiltonian, evolves |0⟩ (or the custom initial state) over
/// [0, T_eff] and scores the trace. T_eff is πħ/(2ε) for the static preset and
/// πħ/(2κ) for the driven one. Module errors are rethrown nested inside a
/// ScenarioError naming the scenario.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// Report document: config echo, SI constants (si mode), report, implicit
/// time (driven) and field summary.
Json scenario_to_json(const ScenarioResult& result);

/// Text rendering of the optimal-evolution table, one row per report.
/// Throws UsageError on an empty list.
std::string emit_table(std::span<const SpeedLimitReport> reports);

/// what() of `e` followed by the messages of any nested exceptions.
std::string describe_exception(const std::exception& e);

}  // namespace qgeo

#endif  // QGEO_SCENARIO_HPP_
