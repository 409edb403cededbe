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

#ifndef QGEO_SPEEDLIMIT_HPP_
#define QGEO_SPEEDLIMIT_HPP_

#include <optional>

#include "qgeo/geometry.hpp"
#include "qgeo/propagation.hpp"

namespace qgeo {

/// Inputs of a minimum-time query. Exactly one of `dispersion` (constant ΔE)
/// and `avg_dispersion` (time-averaged ⟨ΔE⟩) is set.
struct BoundQuery {
  double overlap = 0.0;  // |⟨A|B⟩|
  std::optional<double> dispersion;
  std::optional<double> avg_dispersion;
  double hbar = 1.0;

  static BoundQuery constant(double overlap, double dispersion, double hbar = 1.0);
  static BoundQuery time_averaged(double overlap, double avg_dispersion, double hbar = 1.0);

  /// Whichever dispersion is set; throws UsageError unless exactly one is.
  double energy_scale() const;
};

/// T = ħ·arccos(overlap)/ΔE. The equivalent arcsin form is evaluated as well
/// and the two must agree to 1e-12 (FormulaError otherwise).
double min_time(const BoundQuery& q);

/// T = (ħ/ΔE)·arcsin√(1 − overlap²).
double min_time_arcsin(const BoundQuery& q);

/// πħ/(2ΔE) = h/(4ΔE).
double orthogonal_min_time(double dispersion, double hbar = 1.0);

/// min_time with ΔE = (E₂ − E₁)/2, the largest dispersion a two-level
/// spectrum allows.
double min_time_spectral(double e1, double e2, double overlap, double hbar = 1.0);

/// (ħ/E_max)·arccos(overlap): floor on the travel time when every energy
/// eigenvalue satisfies |Eₙ| ≤ E_max.
double min_time_bounded_spectrum(double e_max, double overlap, double hbar = 1.0);

/// ⟨ΔE⟩ = (1/T)·∫ΔE dt over the trace, same quadrature as path_length.
double avg_dispersion(const EvolutionTrace& trace);

/// efficiency() plus the time-energy inequality ⟨ΔE⟩·T ≥ ħ·arccos|⟨A|B⟩|
/// (h/4 for orthogonal endpoints). Tolerance is 1e-9 plus ten times the
/// quadrature error estimate; equality within it implies `geodesic`.
SpeedLimitReport verify_bound(const EvolutionTrace& trace);

struct ImplicitTime {
  double time = 0.0;             // T̃
  double residual = 0.0;         // T̃ + aT̃³/3 − πħ/(2ε)
  double relative_residual = 0.0;  // |residual| / (πħ/(2ε))
  double coefficient = 0.0;      // a
  double t_effective = 0.0;      // πħ/(2ε)
  int iterations = 0;
};

/// Root of πħ/(2ε) = T̃ + (a/3)·T̃³ with a = (ω₀²/2)(1 + 2ω/ω₀), by Newton's
/// method on the bracket [0, πħ/(2ε)] with a bisection fallback.
ImplicitTime solve_implicit_time(double epsilon, double omega, double omega0,
                                 double hbar = 1.0);

}  // namespace qgeo

#endif  // QGEO_SPEEDLIMIT_HPP_
