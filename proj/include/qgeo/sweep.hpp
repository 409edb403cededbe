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

#ifndef QGEO_SWEEP_HPP_
#define QGEO_SWEEP_HPP_

#include <cstdint>
#include <random>

#include "qgeo/linalg.hpp"
#include "qgeo/propagation.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

/// Hermitian matrix with i.i.d. standard-normal real/imaginary parts (GUE up
/// to scale).
CMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng);

/// Haar-random pure state.
QuantumState random_state(Eigen::Index dim, std::mt19937_64& rng);

/// Seed of sample `index`, independent of how samples are split over workers.
std::uint64_t sample_seed(std::uint64_t base_seed, std::uint64_t index);

/// Largest value over interior nodes of |Δ_c f| − bound − tol, where
/// f = |⟨ψ(t)|A⟩|², Δ_c is the central difference, bound is
/// overlap_rate_bound(ΔE(t), |⟨ψ(t)|A⟩|) and A is the trace's first state.
/// tol = spread³·dt²/(6ħ³) + 1e-12/dt bounds the central-difference
/// truncation error, with `spread` = λ_max − λ_min of a constant Hamiltonian.
/// Non-positive means the rate bound holds everywhere.
double rate_bound_excess(const EvolutionTrace& trace, double spectral_spread);

struct SweepConfig {
  int samples = 1000;
  int dim_min = 2;
  int dim_max = 8;
  std::uint64_t seed = 0;
  int steps = 200;
  unsigned threads = 0;  // 0 = hardware concurrency
  double tolerance = 1e-6;
};

struct SweepSample {
  int dim = 0;
  double t_final = 0.0;
  bool degenerate = false;  // endpoints phase equivalent; η undefined
  double eta = 0.0;
  double time_energy_gap = 0.0;  // ⟨ΔE⟩·T − ħ·arccos|⟨A|B⟩|
  double rate_excess = 0.0;
};

struct SweepSummary {
  SweepConfig config;
  int evaluated = 0;
  int degenerate = 0;
  double min_eta = 0.0;
  double max_eta = 0.0;
  double min_time_energy_gap = 0.0;
  double max_rate_excess = 0.0;
  int eta_violations = 0;
  int time_bound_violations = 0;
  int rate_bound_violations = 0;

  int violations() const {
    return eta_violations + time_bound_violations + rate_bound_violations;
  }
};

/// One ensemble member: random H (dim in [dim_min, dim_max]), random |ψ₀⟩ and
/// random duration, evolved and scored.
SweepSample evaluate_sample(const SweepConfig& config, std::uint64_t index);

/// Runs `config.samples` members across worker threads. The summary depends
/// only on the config, not on the number of threads.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace qgeo

#endif  // QGEO_SWEEP_HPP_
