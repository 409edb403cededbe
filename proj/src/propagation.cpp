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

#include "qgeo/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr double kTraceNormTolerance = 1e-10;
constexpr double kCumulativeDriftLimit = 1e-9;
constexpr double kFormulaNegativeWindow = 1e-10;

void require_grid(double t_final, int steps) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw DomainError("t_final must be finite and >= 0");
  }
  if (t_final > 0.0 && steps < 2) throw DomainError("evolve needs steps >= 2");
}

double checked_sqrt(double squared, double scale, const char* what) {
  if (squared < -kFormulaNegativeWindow * scale) {
    throw FormulaError(std::string(what) + " evaluated to a negative ΔE² = " +
                       std::to_string(squared));
  }
  return std::sqrt(std::max(0.0, squared));
}

void push_node(EvolutionTrace& trace, const Hamiltonian& h, double t, QuantumState state) {
  const EnergyStats stats = energy_stats(h.at(t), state);
  trace.times.push_back(t);
  trace.states.push_back(std::move(state));
  trace.energy_mean.push_back(stats.mean);
  trace.energy_dispersion.push_back(stats.dispersion);
}

EvolutionTrace start_trace(const Hamiltonian& h, const QuantumState& psi0, int steps) {
  if (psi0.dim() != h.dim()) throw DimensionError("initial state and Hamiltonian dims differ");
  EvolutionTrace trace;
  trace.hbar = h.hbar();
  const auto n = static_cast<std::size_t>(steps) + 1;
  trace.times.reserve(n);
  trace.states.reserve(n);
  trace.energy_mean.reserve(n);
  trace.energy_dispersion.reserve(n);
  return trace;
}

}  // namespace

void validate_trace(const EvolutionTrace& trace) {
  const std::size_t n = trace.times.size();
  if (n == 0) throw GridError("trace is empty");
  if (trace.states.size() != n || trace.energy_mean.size() != n ||
      trace.energy_dispersion.size() != n) {
    throw GridError("trace arrays have mismatched lengths");
  }
  if (!(trace.hbar > 0.0)) throw DomainError("trace hbar must be positive");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(trace.times[i] > trace.times[i - 1])) {
      throw GridError("trace times are not strictly increasing at node " + std::to_string(i));
    }
  }
  const Eigen::Index dim = trace.states.front().dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (trace.states[i].dim() != dim) throw DimensionError("trace states change dimension");
    if (std::abs(trace.states[i].amplitudes().squaredNorm() - 1.0) > kTraceNormTolerance) {
      throw NormalizationError("trace state " + std::to_string(i) + " is not normalized");
    }
    if (!(trace.energy_dispersion[i] >= 0.0)) {
      throw DomainError("trace dispersion must be non-negative");
    }
  }
}

CMatrix propagator_static(double epsilon, double t, double hbar) {
  const double phase = epsilon * t / hbar;
  return std::cos(phase) * pauli::identity() - kI * std::sin(phase) * pauli::x();
}

CMatrix propagator_driven(double epsilon, double omega, double omega0, double t,
                          double hbar) {
  const TwoLevelDriven drive{epsilon, omega, omega0};
  const double delta = detuning(drive, hbar);
  const double kappa = effective_rabi_energy(drive, hbar);
  const double phase = kappa * t / hbar;
  const CMatrix axis = (delta / (2.0 * kappa)) * pauli::z() + (epsilon / kappa) * pauli::x();
  return std::cos(phase) * pauli::identity() - kI * std::sin(phase) * axis;
}

CMatrix propagator_driven_lab(double epsilon, double omega, double omega0, double t,
                              double hbar) {
  const TwoLevelDriven drive{epsilon, omega, omega0};
  const double delta = detuning(drive, hbar);
  const double kappa = effective_rabi_energy(drive, hbar);
  const double phase = kappa * t / hbar;
  const CMatrix axis = (-delta / (2.0 * kappa)) * pauli::z() + (epsilon / kappa) * pauli::x();
  const CMatrix rotating = std::cos(phase) * pauli::identity() - kI * std::sin(phase) * axis;
  CMatrix frame = CMatrix::Zero(2, 2);
  frame(0, 0) = std::polar(1.0, -0.5 * omega * t);
  frame(1, 1) = std::polar(1.0, 0.5 * omega * t);
  return frame * rotating;
}

QuantumState evolve_state(const CMatrix& u, const QuantumState& psi, double tol) {
  if (u.cols() != psi.dim()) throw DimensionError("operator and state dimensions differ");
  return QuantumState::exact(u * psi.amplitudes(), tol);
}

EvolutionTrace evolve(const Hamiltonian& h, const QuantumState& psi0, double t_final,
                      int steps) {
  require_grid(t_final, steps);
  if (t_final == 0.0) steps = 0;
  EvolutionTrace trace = start_trace(h, psi0, steps);
  push_node(trace, h, 0.0, psi0);
  if (steps == 0) return trace;

  const double dt = t_final / steps;
  std::optional<CMatrix> fixed_step;
  if (!h.is_time_dependent()) fixed_step = unitary_step(h.at(0.0), dt, h.hbar());

  CVector psi = psi0.amplitudes();
  const double initial_norm = psi.squaredNorm();
  for (int i = 0; i < steps; ++i) {
    const double t_mid = (i + 0.5) * dt;
    if (fixed_step) {
      psi = (*fixed_step) * psi;
    } else {
      psi = unitary_step(h.at(t_mid), dt, h.hbar()) * psi;
    }
    const double drift = std::abs(psi.squaredNorm() - initial_norm);
    if (drift > kCumulativeDriftLimit) {
      throw IntegrationError("norm drift " + std::to_string(drift) + " after step " +
                             std::to_string(i + 1));
    }
    // Node i sits at i·dt; the last node is t_final.
    const double t = (i + 1 == steps) ? t_final : (i + 1) * dt;
    push_node(trace, h, t, QuantumState::exact(psi, kCumulativeDriftLimit));
  }
  return trace;
}

EvolutionTrace sample_trace(const Hamiltonian& h, const std::function<CMatrix(double)>& u,
                            const QuantumState& psi0, double t_final, int steps) {
  require_grid(t_final, steps);
  if (t_final == 0.0) steps = 0;
  EvolutionTrace trace = start_trace(h, psi0, steps);
  push_node(trace, h, 0.0, psi0);
  if (steps == 0) return trace;
  const double dt = t_final / steps;
  for (int i = 1; i <= steps; ++i) {
    const double t = (i == steps) ? t_final : i * dt;
    push_node(trace, h, t, evolve_state(u(t), psi0, kCumulativeDriftLimit));
  }
  return trace;
}

double dispersion_driven_closed(double epsilon, double omega, double omega0, double t,
                                double hbar) {
  const TwoLevelDriven drive{epsilon, omega, omega0};
  const double delta = detuning(drive, hbar);
  const double kappa = effective_rabi_energy(drive, hbar);
  const double eps2 = epsilon * epsilon;
  const double gap = hbar * omega0;
  const double c = std::cos(kappa * t / hbar);
  const double s = std::sin(kappa * t / hbar);

  const double bracket =
      0.5 * gap * (c * c - (4.0 * eps2 - delta * delta) / (4.0 * kappa * kappa) * s * s) -
      eps2 / kappa * std::sin(2.0 * kappa * t / hbar) * std::sin(omega * t) +
      2.0 * eps2 / kappa * (delta / (2.0 * kappa)) * s * s * std::cos(omega * t);
  const double scale = eps2 + 0.25 * gap * gap;
  return checked_sqrt(scale - bracket * bracket, scale, "driven dispersion formula");
}

double dispersion_near_resonance(double epsilon, double omega, double omega0, double t,
                                 double hbar) {
  const double gap = hbar * omega0;
  const double eps2 = epsilon * epsilon;
  const double angle = 2.0 * epsilon * t / hbar;
  const double inner = std::cos(angle) - 2.0 * epsilon / gap * std::sin(angle) * std::sin(omega * t);
  const double scale = eps2 + 0.25 * gap * gap;
  return checked_sqrt(eps2 + 0.25 * gap * gap * (1.0 - inner * inner), scale,
                      "near-resonance dispersion formula");
}

double dispersion_driven_exact(double epsilon, double omega, double omega0, double t,
                               double hbar) {
  const TwoLevelDriven drive{epsilon, omega, omega0};
  const double kappa = effective_rabi_energy(drive, hbar);
  const double r2 = (epsilon / kappa) * (epsilon / kappa);
  const double s2 = std::pow(std::sin(kappa * t / hbar), 2);
  const double h2 = hbar * hbar;
  const double squared =
      epsilon * epsilon + h2 * omega0 * omega * r2 * s2 - h2 * omega * omega * r2 * r2 * s2 * s2;
  const double scale = epsilon * epsilon + 0.25 * h2 * omega0 * omega0;
  return checked_sqrt(squared, scale, "exact driven dispersion");
}

double short_time_coefficient(double omega, double omega0) {
  return 0.5 * omega0 * omega0 * (1.0 + 2.0 * omega / omega0);
}

double dispersion_short_time(double epsilon, double omega, double omega0, double t) {
  return epsilon * (1.0 + short_time_coefficient(omega, omega0) * t * t);
}

}  // namespace qgeo
