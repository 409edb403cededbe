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

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "qgeo/errors.hpp"
#include "qgeo/hamiltonian.hpp"
#include "qgeo/speedlimit.hpp"

namespace qgeo {

CMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMatrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (m + m.adjoint());
}

QuantumState random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return QuantumState::normalized(v);
}

std::uint64_t sample_seed(std::uint64_t base_seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double rate_bound_excess(const EvolutionTrace& trace, double spectral_spread) {
  const std::size_t n = trace.size();
  if (n < 3) return -INFINITY;
  const double dt = trace.duration() / static_cast<double>(n - 1);
  const double hbar = trace.hbar;
  const double tol = std::pow(spectral_spread / hbar, 3) * dt * dt / 6.0 + 1e-12 / dt;

  std::vector<double> overlap(n);
  for (std::size_t i = 0; i < n; ++i) overlap[i] = overlap_modulus(trace.states[i], trace.initial());
  double worst = -INFINITY;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double rate =
        (overlap[i + 1] * overlap[i + 1] - overlap[i - 1] * overlap[i - 1]) / (2.0 * dt);
    const double bound = overlap_rate_bound(trace.energy_dispersion[i], overlap[i], hbar);
    worst = std::max(worst, std::abs(rate) - bound - tol);
  }
  return worst;
}

SweepSample evaluate_sample(const SweepConfig& config, std::uint64_t index) {
  std::mt19937_64 rng(sample_seed(config.seed, index));
  std::uniform_int_distribution<int> pick_dim(config.dim_min, config.dim_max);
  std::uniform_real_distribution<double> pick_scale(0.05, 3.0);

  SweepSample out;
  out.dim = pick_dim(rng);
  const CMatrix h = random_hermitian(out.dim, rng);
  const QuantumState psi0 = random_state(out.dim, rng);
  const Eigen::SelfAdjointEigenSolver<CMatrix> spectrum(h, Eigen::EigenvaluesOnly);
  const double spread = spectrum.eigenvalues().maxCoeff() - spectrum.eigenvalues().minCoeff();
  out.t_final = pick_scale(rng) / h.norm();

  const Hamiltonian hamiltonian = Hamiltonian::constant(h);
  const EvolutionTrace trace = evolve(hamiltonian, psi0, out.t_final, config.steps);
  out.rate_excess = rate_bound_excess(trace, spread);
  try {
    const SpeedLimitReport report = efficiency(trace);
    out.eta = report.eta;
    out.time_energy_gap = report.avg_dispersion * trace.duration() -
                          trace.hbar * std::acos(report.overlap);
  } catch (const DegenerateEndpointsError&) {
    out.degenerate = true;
  }
  return out;
}

SweepSummary run_sweep(const SweepConfig& config) {
  if (config.samples < 1) throw UsageError("sweep needs at least one sample");
  if (config.dim_min < 2 || config.dim_max < config.dim_min) {
    throw UsageError("sweep needs 2 <= dim_min <= dim_max");
  }
  if (config.steps < 2 || config.steps % 2 != 0) {
    throw UsageError("sweep needs an even step count >= 2");
  }

  std::vector<SweepSample> samples(static_cast<std::size_t>(config.samples));
  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(config.samples));
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < samples.size(); i += workers) {
            samples[i] = evaluate_sample(config, i);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  SweepSummary s;
  s.config = config;
  s.min_eta = INFINITY;
  s.max_eta = -INFINITY;
  s.min_time_energy_gap = INFINITY;
  s.max_rate_excess = -INFINITY;
  for (const SweepSample& x : samples) {
    s.max_rate_excess = std::max(s.max_rate_excess, x.rate_excess);
    if (x.rate_excess > 0.0) ++s.rate_bound_violations;
    if (x.degenerate) {
      ++s.degenerate;
      continue;
    }
    ++s.evaluated;
    s.min_eta = std::min(s.min_eta, x.eta);
    s.max_eta = std::max(s.max_eta, x.eta);
    s.min_time_energy_gap = std::min(s.min_time_energy_gap, x.time_energy_gap);
    if (x.eta > 1.0 + config.tolerance) ++s.eta_violations;
    if (x.time_energy_gap < -config.tolerance) ++s.time_bound_violations;
  }
  return s;
}

}  // namespace qgeo
