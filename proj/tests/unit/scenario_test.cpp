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

#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr double kPi = std::numbers::pi;

ScenarioConfig config(ScenarioKind kind) {
  ScenarioConfig cfg;
  cfg.scenario = kind;
  return cfg;
}

template <typename Inner>
bool nested_is(const ScenarioError& e) {
  try {
    std::rethrow_if_nested(e);
  } catch (const Inner&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

TEST(RunScenario, StaticReproducesOptimalEvolution) {
  const ScenarioResult r = run_scenario(config(ScenarioKind::kStatic));
  EXPECT_EQ(r.trace.size(), 2001u);
  EXPECT_NEAR(r.report.eta, 1.0, 1e-9);
  EXPECT_NEAR(r.report.s0, kPi, 1e-9);
  EXPECT_NEAR(r.report.s, kPi, 1e-9);
  EXPECT_NEAR(r.report.t_effective, kPi / 2.0, 1e-12);
  EXPECT_TRUE(r.report.geodesic);
  EXPECT_EQ(r.propagation, "integrator");
  EXPECT_FALSE(r.implicit.has_value());
}

TEST(RunScenario, DrivenIsSuboptimal) {
  const ScenarioResult r = run_scenario(config(ScenarioKind::kDriven));
  EXPECT_LT(r.report.eta, 1.0);
  EXPECT_FALSE(r.report.geodesic);
  ASSERT_TRUE(r.implicit.has_value());
  EXPECT_LT(r.implicit->time, kPi / 2.0);
}

TEST(RunScenario, ParametersOverrideDefaults) {
  ScenarioConfig cfg = config(ScenarioKind::kStatic);
  cfg.parameters["epsilon"] = 2.0;
  cfg.parameters["hbar"] = 3.0;
  const ScenarioResult r = run_scenario(cfg);
  EXPECT_NEAR(r.report.t_effective, kPi * 3.0 / 4.0, 1e-12);
  EXPECT_NEAR(r.report.eta, 1.0, 1e-9);
}

TEST(RunScenario, SiDrivenReportsLarmorFrequencyAndTime) {
  ScenarioConfig cfg = config(ScenarioKind::kDriven);
  cfg.unit_system = UnitSystem::kSi;
  cfg.parameters["b_parallel_tesla"] = 1.0;
  cfg.parameters["b_perp_tesla"] = 1e-6;
  const ScenarioResult r = run_scenario(cfg);
  ASSERT_TRUE(r.si.has_value());
  ASSERT_TRUE(r.si->nu_larmor_hz.has_value());
  EXPECT_GT(*r.si->nu_larmor_hz, 27.5e9);
  EXPECT_LT(*r.si->nu_larmor_hz, 28.5e9);
  EXPECT_GT(r.si->t_effective_seconds, 1.7e-5);
  EXPECT_LT(r.si->t_effective_seconds, 1.9e-5);
  EXPECT_EQ(r.propagation, "closed_form");
  const Json j = scenario_to_json(r);
  EXPECT_EQ(j.at("constants").at("hbar"), 1.054571817e-34);
}

TEST(RunScenario, SiStaticTimeFromTransverseField) {
  ScenarioConfig cfg = config(ScenarioKind::kStatic);
  cfg.unit_system = UnitSystem::kSi;
  cfg.parameters["b_perp_tesla"] = 1e-6;
  const ScenarioResult r = run_scenario(cfg);
  EXPECT_NEAR(r.report.t_effective, r.si->t_effective_seconds, 1e-20);
  EXPECT_NEAR(r.report.eta, 1.0, 1e-9);
}

TEST(RunScenario, ErrorsCarryScenarioContext) {
  ScenarioConfig cfg = config(ScenarioKind::kDriven);
  cfg.steps = 50;
  try {
    run_scenario(cfg);
    FAIL() << "expected ScenarioError";
  } catch (const ScenarioError& e) {
    EXPECT_NE(std::string(e.what()).find("driven"), std::string::npos);
    EXPECT_TRUE(nested_is<UsageError>(e));
  }
  cfg = config(ScenarioKind::kStatic);
  cfg.parameters["epsilon"] = -1.0;
  try {
    run_scenario(cfg);
    FAIL() << "expected ScenarioError";
  } catch (const ScenarioError& e) {
    EXPECT_TRUE(nested_is<DomainError>(e));
    EXPECT_NE(describe_exception(e).find("epsilon"), std::string::npos);
  }
  cfg = config(ScenarioKind::kDriven);
  cfg.unit_system = UnitSystem::kSi;
  cfg.parameters["b_perp_tesla"] = 1e-6;
  EXPECT_THROW(run_scenario(cfg), ScenarioError);
}

TEST(RunScenario, CustomHamiltonianFromJson) {
  const Json j = Json::parse(R"({
    "scenario": "custom", "steps": 400, "t_final": 0.785398163397448,
    "hamiltonian": {"re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]},
    "initial_state": {"re": [2, 0], "im": [0, 0]}
  })");
  const ScenarioResult r = run_scenario(ScenarioConfig::from_json(j));
  EXPECT_NEAR(r.report.s0, kPi / 2.0, 1e-9);
  EXPECT_NEAR(r.report.eta, 1.0, 1e-9);
  EXPECT_FALSE(r.report.orthogonal_endpoints);
  EXPECT_THROW(run_scenario(config(ScenarioKind::kCustom)), ScenarioError);
}

TEST(ScenarioConfig, ParsesFlatJson) {
  const Json j = Json::parse(
      R"({"scenario": "driven", "steps": 500, "unit_system": "si", "output": "csv",
          "epsilon": 2.0, "b_perp_tesla": 1e-6})");
  const ScenarioConfig cfg = ScenarioConfig::from_json(j);
  EXPECT_EQ(cfg.scenario, ScenarioKind::kDriven);
  EXPECT_EQ(cfg.steps, 500);
  EXPECT_EQ(cfg.unit_system, UnitSystem::kSi);
  EXPECT_EQ(cfg.output, OutputFormat::kCsv);
  EXPECT_EQ(cfg.parameter("epsilon"), 2.0);
  EXPECT_FALSE(cfg.parameter("omega").has_value());
  EXPECT_EQ(ScenarioConfig::from_json(cfg.to_json()).to_json().dump(), cfg.to_json().dump());
}

TEST(ScenarioConfig, RejectsUnknownValues) {
  EXPECT_THROW(ScenarioConfig::from_json(Json::parse(R"({"scenario": "other"})")), UsageError);
  EXPECT_THROW(ScenarioConfig::from_json(Json::parse(R"({"colour": "red"})")), UsageError);
  EXPECT_THROW(ScenarioConfig::from_json(Json::parse(R"({"steps": 2.5})")), UsageError);
  EXPECT_THROW(ScenarioConfig::from_json(Json::array()), UsageError);
}

TEST(ScenarioJson, DeterministicAcrossRuns) {
  const std::string a = scenario_to_json(run_scenario(config(ScenarioKind::kDriven))).dump(2);
  const std::string b = scenario_to_json(run_scenario(config(ScenarioKind::kDriven))).dump(2);
  EXPECT_EQ(a, b);
}

TEST(EmitTable, MarksOptimalAndSuboptimalRows) {
  const std::vector<SpeedLimitReport> reports = {
      run_scenario(config(ScenarioKind::kStatic)).report,
      run_scenario(config(ScenarioKind::kDriven)).report};
  const std::string table = emit_table(reports);
  EXPECT_EQ(table.rfind("Optimal Quantum Evolution Condition", 0), 0u);
  const std::size_t orth = table.find("\northogonal");
  const std::size_t nonorth = table.find("\nnonorthogonal");
  ASSERT_NE(orth, std::string::npos);
  ASSERT_NE(nonorth, std::string::npos);
  const std::string row1 = table.substr(orth + 1, table.find('\n', orth + 1) - orth - 1);
  const std::string row2 = table.substr(nonorth + 1, table.find('\n', nonorth + 1) - nonorth - 1);
  EXPECT_NE(row1.find("η = 1"), std::string::npos);
  EXPECT_NE(row1.find(" = h/(4<dE>)"), std::string::npos);
  EXPECT_NE(row2.find("0 ≤ η ≤ 1"), std::string::npos);
  EXPECT_NE(row2.find(" > "), std::string::npos);
}

TEST(EmitTable, EmptyListIsUsageError) {
  EXPECT_THROW(emit_table({}), UsageError);
}

}  // namespace
}  // namespace qgeo
