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

#include "qgeo/speedlimit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr double kDualFormTolerance = 1e-12;
constexpr double kBoundSlack = 1e-9;
constexpr double kOrthogonalOverlap = 1e-12;

void require_overlap(double overlap) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw DomainError("overlap must lie in [0, 1]");
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

double dispersion_or_throw(double dispersion) {
  if (!(dispersion > 0.0)) {
    throw StationaryStateError("minimum time is undefined for zero energy dispersion");
  }
  return dispersion;
}

}  // namespace

BoundQuery BoundQuery::constant(double overlap, double dispersion, double hbar) {
  BoundQuery q;
  q.overlap = overlap;
  q.dispersion = dispersion;
  q.hbar = hbar;
  return q;
}

BoundQuery BoundQuery::time_averaged(double overlap, double avg_dispersion, double hbar) {
  BoundQuery q;
  q.overlap = overlap;
  q.avg_dispersion = avg_dispersion;
  q.hbar = hbar;
  return q;
}

double BoundQuery::energy_scale() const {
  if (dispersion.has_value() == avg_dispersion.has_value()) {
    throw UsageError("set exactly one of dispersion / avg_dispersion");
  }
  return dispersion ? *dispersion : *avg_dispersion;
}

double min_time_arcsin(const BoundQuery& q) {
  require_overlap(q.overlap);
  require_positive(q.hbar, "hbar");
  const double de = dispersion_or_throw(q.energy_scale());
  const double x = q.overlap;
  // sin⁻¹(y) = atan2(y, √(1−y²)) with √(1−y²) = x.
  const double y = std::sqrt((1.0 - x) * (1.0 + x));
  return q.hbar / de * std::atan2(y, x);
}

double min_time(const BoundQuery& q) {
  require_overlap(q.overlap);
  require_positive(q.hbar, "hbar");
  const double de = dispersion_or_throw(q.energy_scale());
  const double angle = std::acos(q.overlap);
  const double dual = min_time_arcsin(q) * de / q.hbar;
  if (std::abs(angle - dual) > kDualFormTolerance) {
    throw FormulaError("arccos and arcsin forms of the minimum time disagree");
  }
  return q.hbar * angle / de;
}

double orthogonal_min_time(double dispersion, double hbar) {
  require_positive(hbar, "hbar");
  return std::numbers::pi * hbar / (2.0 * dispersion_or_throw(dispersion));
}

double min_time_spectral(double e1, double e2, double overlap, double hbar) {
  if (!(e2 > e1)) throw OrderingError("min_time_spectral needs E2 > E1");
  return min_time(BoundQuery::constant(overlap, 0.5 * (e2 - e1), hbar));
}

double min_time_bounded_spectrum(double e_max, double overlap, double hbar) {
  require_positive(e_max, "E_max");
  return min_time(BoundQuery::constant(overlap, e_max, hbar));
}

double avg_dispersion(const EvolutionTrace& trace) {
  validate_trace(trace);
  const double duration = trace.duration();
  if (!(duration > 0.0)) throw DomainError("time average needs a trace of positive duration");
  // path_length = (2/ħ)·∫ΔE dt.
  return path_length(trace).value * trace.hbar / (2.0 * duration);
}

SpeedLimitReport verify_bound(const EvolutionTrace& trace) {
  SpeedLimitReport r = efficiency(trace);
  const double duration = trace.duration();
  const double product = r.avg_dispersion * duration;
  const double ideal = trace.hbar * std::acos(r.overlap);
  // Tolerances in units of s (rad); ⟨ΔE⟩·T = ħs/2.
  const double length_tol = kBoundSlack + 10.0 * r.quadrature_error;
  const double tol = 0.5 * trace.hbar * length_tol;

  r.time_bound_satisfied = product >= ideal - tol;
  if (r.orthogonal_endpoints) {
    const double quarter_h = 0.25 * 2.0 * std::numbers::pi * trace.hbar;
    r.time_bound_satisfied = r.time_bound_satisfied && product >= quarter_h - tol;
  }
  r.geodesic = is_geodesic(trace, length_tol);
  const bool equality = std::abs(product - ideal) <= tol;
  if (equality && !r.geodesic) {
    throw FormulaError("time-energy equality holds but the path is not geodesic");
  }
  return r;
}

ImplicitTime solve_implicit_time(double epsilon, double omega, double omega0, double hbar) {
  require_positive(epsilon, "epsilon");
  require_positive(omega, "omega");
  require_positive(omega0, "omega0");
  require_positive(hbar, "hbar");

  ImplicitTime out;
  out.coefficient = 0.5 * omega0 * omega0 * (1.0 + 2.0 * omega / omega0);
  out.t_effective = std::numbers::pi * hbar / (2.0 * epsilon);
  const double a = out.coefficient;
  const double target = out.t_effective;
  const auto residual = [&](double t) { return t + a * t * t * t / 3.0 - target; };
  const double tolerance = 1e-14 * target;

  double lo = 0.0;
  double hi = target;
  double t = target;
  double f = residual(t);
  int iter = 0;
  for (; iter < 200 && std::abs(f) > tolerance; ++iter) {
    if (f > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    double next = t - f / (1.0 + a * t * t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == t) break;
    t = next;
    f = residual(t);
  }
  out.time = t;
  out.residual = f;
  out.relative_residual = std::abs(f) / target;
  out.iterations = iter;
  return out;
}

}  // namespace qgeo
