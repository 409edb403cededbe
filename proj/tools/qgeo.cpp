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

// Command-line front end: scenario runs, bound queries, trace verification,
// ensemble sweeps and the optimal-evolution table.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeo/errors.hpp"
#include "qgeo/io.hpp"
#include "qgeo/scenario.hpp"
#include "qgeo/speedlimit.hpp"
#include "qgeo/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct ScenarioFlags {
  std::string config_path;
  std::optional<double> epsilon, omega, omega0, hbar, b_perp, b_parallel, t_final;
  std::optional<int> steps;
  std::optional<std::string> units, output;
  std::string trace_out, csv_out;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f, bool driven, bool custom) {
  cmd->add_option("--config", f.config_path, "Flat JSON config; flags override its values")
      ->check(CLI::ExistingFile);
  cmd->add_option("--epsilon", f.epsilon, "Coupling energy ε (default 1)");
  cmd->add_option("--hbar", f.hbar, "Reduced Planck constant in natural units (default 1)");
  if (driven) {
    cmd->add_option("--omega", f.omega, "Drive angular frequency ω (default 0.25; si: ω₀)");
    cmd->add_option("--omega0", f.omega0, "Level splitting ω₀ (default 0.2)");
    cmd->add_option("--b-parallel", f.b_parallel, "Longitudinal field in tesla (si mode)");
  }
  if (custom) cmd->add_option("--t-final", f.t_final, "Evolution time (custom scenario)");
  cmd->add_option("--b-perp", f.b_perp, "Transverse field in tesla (si mode)");
  cmd->add_option("--steps", f.steps, "Time steps, at least 100 (default 2000)");
  cmd->add_option("--units", f.units, "natural or si (default natural)")
      ->check(CLI::IsMember({"natural", "si"}));
  cmd->add_option("--output", f.output, "json, csv or table (default json)")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--trace-out", f.trace_out, "Write the trace as JSON to this file");
  cmd->add_option("--csv-out", f.csv_out, "Write the trace as CSV to this file");
}

qgeo::ScenarioConfig build_config(const ScenarioFlags& f,
                                  std::optional<qgeo::ScenarioKind> kind) {
  qgeo::ScenarioConfig cfg;
  if (!f.config_path.empty()) {
    cfg = qgeo::ScenarioConfig::from_json(qgeo::read_json_file(f.config_path));
  }
  if (kind) cfg.scenario = *kind;
  auto set = [&cfg](const char* name, const std::optional<double>& v) {
    if (v) cfg.parameters[name] = *v;
  };
  set("epsilon", f.epsilon);
  set("omega", f.omega);
  set("omega0", f.omega0);
  set("hbar", f.hbar);
  set("b_perp_tesla", f.b_perp);
  set("b_parallel_tesla", f.b_parallel);
  set("t_final", f.t_final);
  if (f.steps) cfg.steps = *f.steps;
  if (f.units) cfg.unit_system = qgeo::parse_unit_system(*f.units);
  if (f.output) cfg.output = qgeo::parse_output_format(*f.output);
  return cfg;
}

int run_scenario_command(const ScenarioFlags& f, std::optional<qgeo::ScenarioKind> kind) {
  const qgeo::ScenarioConfig cfg = build_config(f, kind);
  const qgeo::ScenarioResult result = qgeo::run_scenario(cfg);
  const qgeo::Json ham = qgeo::hamiltonian_to_json(result.hamiltonian);
  if (!f.trace_out.empty()) {
    qgeo::write_text_file(f.trace_out, qgeo::trace_to_json(result.trace, ham).dump(2) + "\n");
  }
  if (!f.csv_out.empty()) {
    std::ostringstream csv;
    qgeo::write_trace_csv(csv, result.trace);
    qgeo::write_text_file(f.csv_out, csv.str());
  }
  switch (cfg.output) {
    case qgeo::OutputFormat::kJson:
      std::cout << qgeo::scenario_to_json(result).dump(2) << '\n';
      break;
    case qgeo::OutputFormat::kCsv:
      qgeo::write_trace_csv(std::cout, result.trace);
      break;
    case qgeo::OutputFormat::kTable: {
      const qgeo::SpeedLimitReport reports[] = {result.report};
      std::cout << qgeo::emit_table(reports);
      break;
    }
  }
  return kExitOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QGEO_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw qgeo::UsageError(std::string("QGEO_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum speed limits, Fubini–Study geometry and geometric efficiency"};
  app.require_subcommand(1);

  ScenarioFlags s1, s2, run;
  auto* cmd_s1 = app.add_subcommand("scenario1", "Static two-level evolution H = εσx");
  add_scenario_flags(cmd_s1, s1, false, false);
  auto* cmd_s2 = app.add_subcommand("scenario2", "Driven two-level evolution");
  add_scenario_flags(cmd_s2, s2, true, false);
  auto* cmd_run = app.add_subcommand("run", "Scenario taken from --config (incl. custom)");
  add_scenario_flags(cmd_run, run, true, true);

  double overlap = 0.0, hbar_bound = 1.0;
  std::optional<double> dispersion, avg_disp;
  auto* cmd_bound = app.add_subcommand("bound", "Minimum travel time for an overlap");
  cmd_bound->add_option("--overlap", overlap, "|<A|B>| in [0, 1]")->required();
  auto* opt_disp = cmd_bound->add_option("--dispersion", dispersion, "Constant ΔE");
  auto* opt_avg = cmd_bound->add_option("--avg-dispersion", avg_disp, "Time-averaged <ΔE>");
  opt_disp->excludes(opt_avg);
  cmd_bound->add_option("--hbar", hbar_bound, "Reduced Planck constant (default 1)");

  double imp_eps = 1.0, imp_omega = 0.25, imp_omega0 = 0.2, imp_hbar = 1.0;
  auto* cmd_implicit = app.add_subcommand("implicit", "Solve the short-time implicit time");
  cmd_implicit->add_option("--epsilon", imp_eps, "Coupling energy ε (default 1)");
  cmd_implicit->add_option("--omega", imp_omega, "Drive angular frequency ω (default 0.25)");
  cmd_implicit->add_option("--omega0", imp_omega0, "Level splitting ω₀ (default 0.2)");
  cmd_implicit->add_option("--hbar", imp_hbar, "Reduced Planck constant (default 1)");

  std::string verify_path;
  auto* cmd_verify = app.add_subcommand("verify", "Score a trace JSON file");
  cmd_verify->add_option("trace", verify_path, "Trace written by --trace-out")
      ->required()
      ->check(CLI::ExistingFile);

  qgeo::SweepConfig sweep_cfg;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<int> sweep_dim;
  auto* cmd_sweep = app.add_subcommand("sweep", "Random-Hamiltonian bound ensemble");
  cmd_sweep->add_option("--samples", sweep_cfg.samples, "Ensemble size (default 1000)");
  cmd_sweep->add_option("--dim", sweep_dim, "Fixed dimension (sets min and max)");
  cmd_sweep->add_option("--dim-min", sweep_cfg.dim_min, "Smallest dimension (default 2)");
  cmd_sweep->add_option("--dim-max", sweep_cfg.dim_max, "Largest dimension (default 8)");
  cmd_sweep->add_option("--seed", sweep_seed, "Base seed (default $QGEO_SEED, else 0)");
  cmd_sweep->add_option("--steps", sweep_cfg.steps, "Even step count per trace (default 200)");
  cmd_sweep->add_option("--threads", sweep_cfg.threads, "Workers, 0 = all cores (default 0)");
  cmd_sweep->add_option("--tolerance", sweep_cfg.tolerance, "Violation tolerance (default 1e-6)");

  std::vector<std::string> table_traces;
  int table_steps = qgeo::ScenarioConfig::kDefaultSteps;
  auto* cmd_table = app.add_subcommand(
      "table", "Optimal-evolution table for trace files, or both default scenarios");
  cmd_table->add_option("traces", table_traces, "Trace JSON files")->check(CLI::ExistingFile);
  cmd_table->add_option("--steps", table_steps, "Steps for the default scenarios (2000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_s1) return run_scenario_command(s1, qgeo::ScenarioKind::kStatic);
    if (*cmd_s2) return run_scenario_command(s2, qgeo::ScenarioKind::kDriven);
    if (*cmd_run) {
      if (run.config_path.empty()) throw qgeo::UsageError("run needs --config");
      return run_scenario_command(run, std::nullopt);
    }
    if (*cmd_bound) {
      if (!dispersion && !avg_disp) {
        throw qgeo::UsageError("bound needs --dispersion or --avg-dispersion");
      }
      const qgeo::BoundQuery q =
          dispersion ? qgeo::BoundQuery::constant(overlap, *dispersion, hbar_bound)
                     : qgeo::BoundQuery::time_averaged(overlap, *avg_disp, hbar_bound);
      const double t = qgeo::min_time(q);
      qgeo::Json out{{"overlap", overlap},
                     {"energy_scale", q.energy_scale()},
                     {"hbar", hbar_bound},
                     {"min_time", t},
                     {"min_time_arcsin", qgeo::min_time_arcsin(q)},
                     {"geodesic_distance", 2.0 * std::acos(overlap)},
                     {"orthogonal", overlap == 0.0}};
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }
    if (*cmd_implicit) {
      const qgeo::ImplicitTime r =
          qgeo::solve_implicit_time(imp_eps, imp_omega, imp_omega0, imp_hbar);
      std::cout << qgeo::implicit_to_json(r).dump(2) << '\n';
      return kExitOk;
    }
    if (*cmd_verify) {
      const qgeo::EvolutionTrace trace =
          qgeo::trace_from_json(qgeo::read_json_file(verify_path));
      std::cout << qgeo::report_to_json(qgeo::verify_bound(trace)).dump(2) << '\n';
      return kExitOk;
    }
    if (*cmd_sweep) {
      sweep_cfg.seed = sweep_seed ? *sweep_seed : default_seed();
      if (sweep_dim) sweep_cfg.dim_min = sweep_cfg.dim_max = *sweep_dim;
      const qgeo::SweepSummary summary = qgeo::run_sweep(sweep_cfg);
      std::cout << qgeo::sweep_to_json(summary).dump(2) << '\n';
      return summary.violations() == 0 ? kExitOk : kExitViolation;
    }
    if (*cmd_table) {
      std::vector<qgeo::SpeedLimitReport> reports;
      if (table_traces.empty()) {
        for (const auto kind : {qgeo::ScenarioKind::kStatic, qgeo::ScenarioKind::kDriven}) {
          qgeo::ScenarioConfig cfg;
          cfg.scenario = kind;
          cfg.steps = table_steps;
          reports.push_back(qgeo::run_scenario(cfg).report);
        }
      } else {
        for (const std::string& path : table_traces) {
          reports.push_back(
              qgeo::verify_bound(qgeo::trace_from_json(qgeo::read_json_file(path))));
        }
      }
      std::cout << qgeo::emit_table(reports);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "qgeo: " << qgeo::describe_exception(e) << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
