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

#include "qgeo/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "qgeo/errors.hpp"
#include "qgeo/units.hpp"

namespace qgeo {
namespace {

constexpr double kPi = std::numbers::pi;
// Drive phase per step (rad) above which the driven run samples the exact
// propagator.
constexpr double kMaxPhasePerStep = 0.1;

double require_positive(const ScenarioConfig& cfg, const std::string& name,
                        std::optional<double> fallback = std::nullopt) {
  const std::optional<double> v = cfg.parameter(name);
  if (!v && !fallback) throw UsageError("missing parameter '" + name + "'");
  const double x = v ? *v : *fallback;
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("parameter '" + name + "' must be positive and finite");
  }
  return x;
}

std::string fmt(double x, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

struct Setup {
  Hamiltonian hamiltonian;
  QuantumState initial;
  double t_final;
  std::optional<SiSummary> si;
};

Setup setup_static(const ScenarioConfig& cfg) {
  if (cfg.unit_system == UnitSystem::kSi) {
    const double b_perp = require_positive(cfg, "b_perp_tesla");
    const double omega_rabi = si::rabi_angular_frequency(b_perp);
    const double epsilon = si::kHbar * omega_rabi;
    SiSummary s;
    s.b_perp_tesla = b_perp;
    s.omega_rabi = omega_rabi;
    s.t_effective_seconds = kPi / (2.0 * omega_rabi);
    return {Hamiltonian::two_level_static(epsilon, si::kHbar), QuantumState::basis(2, 0),
            s.t_effective_seconds, s};
  }
  const double epsilon = require_positive(cfg, "epsilon", 1.0);
  const double hbar = require_positive(cfg, "hbar", 1.0);
  return {Hamiltonian::two_level_static(epsilon, hbar), QuantumState::basis(2, 0),
          kPi * hbar / (2.0 * epsilon), std::nullopt};
}

Setup setup_driven(const ScenarioConfig& cfg) {
  double epsilon, omega, omega0, hbar;
  std::optional<SiSummary> si_summary;
  if (cfg.unit_system == UnitSystem::kSi) {
    const double b_perp = require_positive(cfg, "b_perp_tesla");
    const double b_par = require_positive(cfg, "b_parallel_tesla");
    hbar = si::kHbar;
    SiSummary s;
    s.b_perp_tesla = b_perp;
    s.b_parallel_tesla = b_par;
    s.omega_rabi = si::rabi_angular_frequency(b_perp);
    s.omega_larmor = si::larmor_angular_frequency(b_par);
    s.nu_larmor_hz = si::larmor_frequency_hz(b_par);
    epsilon = hbar * s.omega_rabi;
    omega0 = *s.omega_larmor;
    omega = require_positive(cfg, "omega", omega0);
    si_summary = s;
  } else {
    epsilon = require_positive(cfg, "epsilon", 1.0);
    omega = require_positive(cfg, "omega", 0.25);
    omega0 = require_positive(cfg, "omega0", 0.2);
    hbar = require_positive(cfg, "hbar", 1.0);
  }
  Hamiltonian h = Hamiltonian::two_level_driven(epsilon, omega, omega0, hbar);
  const auto& drive = std::get<TwoLevelDriven>(h.kind());
  const double t_final = kPi * hbar / (2.0 * effective_rabi_energy(drive, hbar));
  if (si_summary) si_summary->t_effective_seconds = t_final;
  return {std::move(h), QuantumState::basis(2, 0), t_final, si_summary};
}

Setup setup_custom(const ScenarioConfig& cfg) {
  if (cfg.hamiltonian.is_null()) throw UsageError("custom scenario needs a 'hamiltonian'");
  Hamiltonian h = hamiltonian_from_json(cfg.hamiltonian);
  QuantumState psi0 = QuantumState::basis(h.dim(), 0);
  if (!cfg.initial_state.is_null()) {
    const QuantumState raw =
        state_from_json(cfg.initial_state, std::numeric_limits<double>::infinity());
    psi0 = QuantumState::normalized(raw.amplitudes());
  }
  return {std::move(h), std::move(psi0), require_positive(cfg, "t_final"), std::nullopt};
}

ScenarioResult run_unchecked(const ScenarioConfig& cfg) {
  if (cfg.steps < ScenarioConfig::kMinSteps) {
    throw UsageError("steps must be at least " + std::to_string(ScenarioConfig::kMinSteps));
  }
  Setup setup = cfg.scenario == ScenarioKind::kStatic   ? setup_static(cfg)
                : cfg.scenario == ScenarioKind::kDriven ? setup_driven(cfg)
                                                        : setup_custom(cfg);
  const auto steps = static_cast<std::size_t>(cfg.steps);
  const double dt = setup.t_final / static_cast<double>(steps);

  std::string propagation = "integrator";
  EvolutionTrace trace;
  std::optional<ImplicitTime> implicit;
  if (const auto* d = std::get_if<TwoLevelDriven>(&setup.hamiltonian.kind())) {
    const double hbar = setup.hamiltonian.hbar();
    if (d->omega * dt > kMaxPhasePerStep) {
      propagation = "closed_form";
      const TwoLevelDriven drive = *d;
      trace = sample_trace(
          setup.hamiltonian,
          [drive, hbar](double t) {
            return propagator_driven_lab(drive.epsilon, drive.omega, drive.omega0, t, hbar);
          },
          setup.initial, setup.t_final, steps);
    }
    implicit = solve_implicit_time(d->epsilon, d->omega, d->omega0, hbar);
  }
  if (propagation == "integrator") {
    trace = evolve(setup.hamiltonian, setup.initial, setup.t_final, steps);
  }
  SpeedLimitReport report = verify_bound(trace);
  return ScenarioResult{cfg,    std::move(setup.hamiltonian), std::move(trace), report,
                        propagation, implicit, setup.si};
}

}  // namespace

std::optional<double> ScenarioConfig::parameter(const std::string& name) const {
  const auto it = parameters.find(name);
  if (it == parameters.end()) return std::nullopt;
  return it->second;
}

ScenarioKind parse_scenario_kind(const std::string& s) {
  if (s == "static") return ScenarioKind::kStatic;
  if (s == "driven") return ScenarioKind::kDriven;
  if (s == "custom") return ScenarioKind::kCustom;
  throw UsageError("unknown scenario '" + s + "' (static, driven, custom)");
}

UnitSystem parse_unit_system(const std::string& s) {
  if (s == "natural") return UnitSystem::kNatural;
  if (s == "si") return UnitSystem::kSi;
  throw UsageError("unknown unit system '" + s + "' (natural, si)");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "table") return OutputFormat::kTable;
  throw UsageError("unknown output format '" + s + "' (json, csv, table)");
}

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::kStatic:
      return "static";
    case ScenarioKind::kDriven:
      return "driven";
    case ScenarioKind::kCustom:
      return "custom";
  }
  return "?";
}

std::string to_string(UnitSystem u) { return u == UnitSystem::kSi ? "si" : "natural"; }

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kTable:
      return "table";
  }
  return "?";
}

ScenarioConfig ScenarioConfig::from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  ScenarioConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "scenario") {
      cfg.scenario = parse_scenario_kind(value.get<std::string>());
    } else if (key == "steps") {
      if (!value.is_number_integer()) throw UsageError("'steps' must be an integer");
      cfg.steps = value.get<int>();
    } else if (key == "unit_system") {
      cfg.unit_system = parse_unit_system(value.get<std::string>());
    } else if (key == "output") {
      cfg.output = parse_output_format(value.get<std::string>());
    } else if (key == "hamiltonian") {
      cfg.hamiltonian = value;
    } else if (key == "initial_state") {
      cfg.initial_state = value;
    } else if (value.is_number()) {
      cfg.parameters[key] = value.get<double>();
    } else {
      throw UsageError("unrecognised config key '" + key + "'");
    }
  }
  return cfg;
}

Json ScenarioConfig::to_json() const {
  Json j{{"scenario", qgeo::to_string(scenario)},
         {"steps", steps},
         {"unit_system", qgeo::to_string(unit_system)},
         {"output", qgeo::to_string(output)}};
  for (const auto& [key, value] : parameters) j[key] = value;
  if (!hamiltonian.is_null()) j["hamiltonian"] = hamiltonian;
  if (!initial_state.is_null()) j["initial_state"] = initial_state;
  return j;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  try {
    return run_unchecked(cfg);
  } catch (const Error&) {
    std::throw_with_nested(ScenarioError("scenario '" + to_string(cfg.scenario) + "' failed"));
  }
}

Json scenario_to_json(const ScenarioResult& result) {
  Json j{{"config", result.config.to_json()}};
  if (result.si) {
    j["constants"] = Json{{"source", "CODATA 2018"},
                          {"hbar", si::kHbar},
                          {"planck", si::kPlanck},
                          {"elementary_charge", si::kElementaryCharge},
                          {"electron_mass", si::kElectronMass}};
  }
  j["hamiltonian"] = hamiltonian_to_json(result.hamiltonian);
  j["propagation"] = result.propagation;
  j["nodes"] = result.trace.size();
  j["report"] = report_to_json(result.report);
  if (result.implicit) j["implicit"] = implicit_to_json(*result.implicit);
  if (result.si) {
    const SiSummary& s = *result.si;
    Json si_json{{"omega_rabi_rad_per_s", s.omega_rabi},
                 {"t_effective_seconds", s.t_effective_seconds}};
    if (s.b_perp_tesla) si_json["b_perp_tesla"] = *s.b_perp_tesla;
    if (s.b_parallel_tesla) si_json["b_parallel_tesla"] = *s.b_parallel_tesla;
    if (s.omega_larmor) si_json["omega_larmor_rad_per_s"] = *s.omega_larmor;
    if (s.nu_larmor_hz) si_json["nu_larmor_hz"] = *s.nu_larmor_hz;
    j["si"] = si_json;
  }
  return j;
}

std::string emit_table(std::span<const SpeedLimitReport> reports) {
  if (reports.empty()) throw UsageError("emit_table needs at least one report");
  std::ostringstream out;
  out << "Optimal Quantum Evolution Condition\n";
  out << "quantum states | time-energy constraint | condition | eta | s0 | s | T_ideal | "
         "T_eff\n";
  out << "---------------+------------------------+-----------+-----+----+---+---------+"
         "------\n";
  for (const SpeedLimitReport& r : reports) {
    const bool optimal = r.geodesic && r.time_bound_satisfied;
    const char* rel = optimal ? " = " : " > ";
    const std::string rhs =
        r.orthogonal_endpoints ? "h/(4<dE>)" : "hbar*acos|<A|B>|/<dE>";
    out << (r.orthogonal_endpoints ? "orthogonal" : "nonorthogonal") << " | T" << rel << rhs
        << " | " << (optimal ? "η = 1" : "0 ≤ η ≤ 1") << " | " << fmt(r.eta) << " | "
        << fmt(r.s0) << " | " << fmt(r.s) << " | " << fmt(r.t_ideal) << " | "
        << fmt(r.t_effective) << '\n';
  }
  return out.str();
}

std::string describe_exception(const std::exception& e) {
  std::string msg = e.what();
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    msg += ": " + describe_exception(inner);
  } catch (...) {
    msg += ": unknown error";
  }
  return msg;
}

}  // namespace qgeo
