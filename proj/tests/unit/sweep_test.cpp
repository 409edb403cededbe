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

#include "qgeo/sweep.hpp"

#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qgeo/errors.hpp"
#include "qgeo/hamiltonian.hpp"

namespace qgeo {
namespace {

bool same_summary(const SweepSummary& a, const SweepSummary& b) {
  return a.evaluated == b.evaluated && a.degenerate == b.degenerate &&
         a.min_eta == b.min_eta && a.max_eta == b.max_eta &&
         a.min_time_energy_gap == b.min_time_energy_gap &&
         a.max_rate_excess == b.max_rate_excess && a.violations() == b.violations();
}

TEST(RandomEnsemble, HermitianAndNormalized) {
  std::mt19937_64 rng(1);
  for (int dim = 2; dim <= 8; ++dim) {
    EXPECT_EQ(hermiticity_residual(random_hermitian(dim, rng)), 0.0);
    EXPECT_NEAR(random_state(dim, rng).amplitudes().norm(), 1.0, 1e-14);
  }
}

TEST(RandomEnsemble, SampleSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(sample_seed(42, i));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_EQ(sample_seed(42, 7), sample_seed(42, 7));
  EXPECT_NE(sample_seed(42, 7), sample_seed(43, 7));
}

TEST(RateBoundExcess, NonPositiveOnStaticScenario) {
  const EvolutionTrace trace = evolve(Hamiltonian::two_level_static(1.0),
                                      QuantumState::basis(2, 0), std::numbers::pi / 2.0, 400);
  EXPECT_LE(rate_bound_excess(trace, 2.0), 0.0);
}

TEST(RateBoundExcess, FlagsAnImpossiblySlowDispersion) {
  EvolutionTrace trace = evolve(Hamiltonian::two_level_static(1.0),
                                QuantumState::basis(2, 0), 1.0, 400);
  for (double& d : trace.energy_dispersion) d *= 0.5;
  EXPECT_GT(rate_bound_excess(trace, 2.0), 0.1);
}

TEST(Sweep, ValidatesConfig) {
  SweepConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(run_sweep(cfg), UsageError);
  cfg = SweepConfig{};
  cfg.dim_min = 5;
  cfg.dim_max = 3;
  EXPECT_THROW(run_sweep(cfg), UsageError);
  cfg = SweepConfig{};
  cfg.steps = 201;
  EXPECT_THROW(run_sweep(cfg), UsageError);
}

TEST(Sweep, IndependentOfThreadCount) {
  SweepConfig cfg;
  cfg.samples = 60;
  cfg.seed = 9;
  cfg.threads = 1;
  const SweepSummary one = run_sweep(cfg);
  cfg.threads = 4;
  const SweepSummary four = run_sweep(cfg);
  EXPECT_TRUE(same_summary(one, four));
  EXPECT_EQ(one.evaluated + one.degenerate, 60);
}

TEST(Sweep, SeedChangesEnsemble) {
  SweepConfig cfg;
  cfg.samples = 20;
  cfg.seed = 1;
  const SweepSummary a = run_sweep(cfg);
  cfg.seed = 2;
  const SweepSummary b = run_sweep(cfg);
  EXPECT_NE(a.min_eta, b.min_eta);
}

TEST(Sweep, BoundsHoldOnEnsemble) {
  SweepConfig cfg;
  cfg.samples = 300;
  cfg.seed = 123;
  const SweepSummary s = run_sweep(cfg);
  EXPECT_EQ(s.violations(), 0);
  EXPECT_LE(s.max_eta, 1.0 + 1e-6);
  EXPECT_GT(s.min_eta, 0.0);
  EXPECT_GE(s.min_time_energy_gap, -1e-6);
  EXPECT_LE(s.max_rate_excess, 0.0);
}

TEST(Sweep, SampleIsReproducible) {
  SweepConfig cfg;
  cfg.seed = 5;
  const SweepSample a = evaluate_sample(cfg, 17);
  const SweepSample b = evaluate_sample(cfg, 17);
  EXPECT_EQ(a.dim, b.dim);
  EXPECT_EQ(a.eta, b.eta);
  EXPECT_EQ(a.t_final, b.t_final);
  EXPECT_GE(a.dim, cfg.dim_min);
  EXPECT_LE(a.dim, cfg.dim_max);
}

}  // namespace
}  // namespace qgeo
