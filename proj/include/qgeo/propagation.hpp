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

#ifndef QGEO_PROPAGATION_HPP_
#define QGEO_PROPAGATION_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "qgeo/hamiltonian.hpp"
#include "qgeo/linalg.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

/// States and energy statistics sampled on a uniform time grid.
struct EvolutionTrace {
  std::vector<double> times;
  std::vector<QuantumState> states;
  std::vector<double> energy_mean;
  std::vector<double> energy_dispersion;
  double hbar = 1.0;

  std::size_t size() const { return times.size(); }
  double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
  const QuantumState& initial() const { return states.front(); }
  const QuantumState& final() const { return states.back(); }
};

/// Checks array lengths, strictly increasing times, per-state normalization
/// (1e-10) and non-negative dispersion. Throws GridError / NormalizationError.
void validate_trace(const EvolutionTrace& trace);

/// U(t) = cos(εt/ħ)·I − i·sin(εt/ħ)·σx for H = ε·σx.
CMatrix propagator_static(double epsilon, double t, double hbar = 1.0);

/// cos(κt/ħ)·I − i·sin(κt/ħ)·[(Δ/2κ)σz + (ε/κ)σx], the textbook rotating-wave
/// form quoted for the driven two-level system. It maps |0⟩ to
/// −i(Δ/2κ)|0⟩ − i(ε/κ)|1⟩ at t = πħ/(2κ), but it is not the lab-frame
/// propagator of H(t); see `propagator_driven_lab`.
CMatrix propagator_driven(double epsilon, double omega, double omega0, double t,
                          double hbar = 1.0);

/// Exact solution operator of iħ∂ₜψ = H(t)ψ for the TwoLevelDriven preset:
/// R(t)·exp(−(i/ħ)·t·[−(Δ/2)σz + εσx]) with R(t) = diag(e^{−iωt/2}, e^{iωt/2}).
CMatrix propagator_driven_lab(double epsilon, double omega, double omega0, double t,
                              double hbar = 1.0);

/// U|ψ⟩. The result must stay normalized within `tol`.
QuantumState evolve_state(const CMatrix& u, const QuantumState& psi, double tol = 1e-10);

/// Integrates the Schrödinger equation on a uniform grid of `steps + 1` nodes
/// over [0, t_final]. Each step multiplies by exp(−(i/ħ)·H(t_mid)·dt), so
/// the scheme is exactly unitary and second-order in dt. Norm drift is
/// monitored, never corrected; more than 1e-9 raises IntegrationError.
/// t_final = 0 yields the single-node trace {psi0}.
EvolutionTrace evolve(const Hamiltonian& h, const QuantumState& psi0, double t_final,
                      int steps);

/// Builds a trace on the same grid as `evolve` from a closed-form propagator
/// U(t); energy statistics are still measured with `h`.
EvolutionTrace sample_trace(const Hamiltonian& h, const std::function<CMatrix(double)>& u,
                            const QuantumState& psi0, double t_final, int steps);

/// ΔE(t) of the driven preset as stated in closed form:
/// ΔE² = ε² + (ħω₀)²/4 − {(ħω₀/2)[cos²(κt/ħ) − (4ε²−Δ²)/(4κ²)·sin²(κt/ħ)]
///        − (ε²/κ)·sin(2κt/ħ)·sin(ωt) + (2ε²/κ)(Δ/2κ)·sin²(κt/ħ)·cos(ωt)}².
/// This is the dispersion of H(t) along propagator_driven(t)|0⟩.
double dispersion_driven_closed(double epsilon, double omega, double omega0, double t,
                                double hbar = 1.0);

/// The |Δ| ≪ ε reduction of `dispersion_driven_closed`:
/// ΔE² = ε² + (ħω₀)²/4·{1 − [cos(2εt/ħ) − (2ε/ħω₀)·sin(2εt/ħ)·sin(ωt)]²}.
double dispersion_near_resonance(double epsilon, double omega, double omega0, double t,
                                 double hbar = 1.0);

/// ΔE(t) along the exact Schrödinger solution from |0⟩ (what `evolve`
/// reproduces): ΔE² = ε² + ħ²ω₀ω·r²·s² − ħ²ω²·r⁴·s⁴ with r = ε/κ and
/// s = sin(κt/ħ).
double dispersion_driven_exact(double epsilon, double omega, double omega0, double t,
                               double hbar = 1.0);

/// a = (ω₀²/2)(1 + 2ω/ω₀).
double short_time_coefficient(double omega, double omega0);

/// ε·(1 + a·t²), the short-time expansion of `dispersion_near_resonance`.
double dispersion_short_time(double epsilon, double omega, double omega0, double t);

}  // namespace qgeo

#endif  // QGEO_PROPAGATION_HPP_
