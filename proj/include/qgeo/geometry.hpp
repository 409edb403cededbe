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

#ifndef QGEO_GEOMETRY_HPP_
#define QGEO_GEOMETRY_HPP_

#include <span>

#include "qgeo/propagation.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

/// Result of integrating uniformly spaced samples.
struct Quadrature {
  double value = 0.0;
  /// |I(h) − I(2h)| / 15 when the half-resolution grid admits pure Simpson,
  /// otherwise the raw difference between the two estimates.
  double error_estimate = 0.0;
  /// The last interval was integrated with the trapezoid rule (even sample
  /// count).
  bool trapezoid_tail = false;
};

/// Composite Simpson over samples spaced by `step`.
Quadrature integrate_uniform(std::span<const double> samples, double step);

/// Outcome of comparing an evolution against the shortest path between its
/// endpoints.
struct SpeedLimitReport {
  double s0 = 0.0;              // geodesic distance between endpoints (rad)
  double s = 0.0;               // length of the travelled path (rad)
  double eta = 0.0;             // s0 / s
  double t_effective = 0.0;     // duration of the evolution
  double t_ideal = 0.0;         // ħ·arccos|⟨A|B⟩| / ⟨ΔE⟩
  double avg_dispersion = 0.0;  // ⟨ΔE⟩ over the evolution
  bool bound_satisfied = false;  // eta ≤ 1 + 1e-9
  double quadrature_error = 0.0;  // error estimate on s (rad)
  bool trapezoid_tail = false;
  double overlap = 0.0;  // |⟨A|B⟩|
  // Filled in by verify_bound.
  bool time_bound_satisfied = false;  // ⟨ΔE⟩·T ≥ ħ·arccos|⟨A|B⟩| − tol
  bool orthogonal_endpoints = false;
  bool geodesic = false;
};

/// 2·arccos|⟨a|b⟩|; π for orthogonal states.
double geodesic_distance(const QuantumState& a, const QuantumState& b);

/// s = (2/ħ)·∫ΔE dt over the trace, by composite Simpson on its dispersion
/// samples. The grid must be uniform (GridError otherwise); a single-node
/// trace has length 0. Cyclic traces are allowed.
Quadrature path_length(const EvolutionTrace& trace);

/// s0, s, eta and the ideal time of a trace. Throws DegenerateEndpointsError
/// when the endpoints are the same ray.
SpeedLimitReport efficiency(const EvolutionTrace& trace);

/// True iff path_length(trace) ≤ geodesic_distance(endpoints) + tol.
bool is_geodesic(const EvolutionTrace& trace, double tol);

/// Endpoints of a geodesic line; they must not be phase equivalent.
class GeodesicSpec {
 public:
  GeodesicSpec(QuantumState a, QuantumState b);

  const QuantumState& a() const { return a_; }
  const QuantumState& b() const { return b_; }

 private:
  QuantumState a_;
  QuantumState b_;
};

/// Normalized (1−ξ)|A⟩ + ξ|B⟩ for ξ ∈ [0, 1]. Uses the true norm of the
/// combination, which reduces to [1 − 2ξ(1−ξ)]^{-1/2} for orthogonal
/// endpoints.
QuantumState geodesic_line(const GeodesicSpec& spec, double xi);

/// [1 − 2ξ(1−ξ)]^{-1/2}, the normalization for orthogonal endpoints.
double orthogonal_line_normalization(double xi);

/// ξ(t) = tan(εt/ħ) / (1 + tan(εt/ħ)) on 0 ≤ t ≤ πħ/(2ε), with ξ = 1 at the
/// upper end. Maps the static two-level evolution onto `geodesic_line`.
double xi_of_t(double epsilon, double t, double hbar = 1.0);

}  // namespace qgeo

#endif  // QGEO_GEOMETRY_HPP_
