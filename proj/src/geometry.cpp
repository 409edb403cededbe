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

#include "qgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qgeo/errors.hpp"
#include "qgeo/speedlimit.hpp"

namespace qgeo {
namespace {

constexpr double kGridTolerance = 1e-9;
constexpr double kEfficiencySlack = 1e-9;
constexpr double kDegenerateTolerance = 1e-12;

// Simpson over an odd number of samples, trapezoid on a trailing interval.
double simpson(std::span<const double> f, double h, bool& tail) {
  const std::size_t n = f.size();
  tail = false;
  if (n < 2) return 0.0;
  std::size_t simpson_nodes = (n % 2 == 1) ? n : n - 1;
  double total = 0.0;
  if (simpson_nodes >= 3) {
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i + 1 < simpson_nodes; ++i) (i % 2 ? odd : even) += f[i];
    total = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[simpson_nodes - 1]);
  } else {
    simpson_nodes = 1;
  }
  if (simpson_nodes < n) {
    tail = true;
    total += 0.5 * h * (f[n - 2] + f[n - 1]);
  }
  return total;
}

double uniform_step(const EvolutionTrace& trace) {
  const std::size_t n = trace.size();
  if (n < 2) return 0.0;
  const double h = trace.duration() / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(trace.times[i] - trace.times[i - 1] - h) > kGridTolerance * h) {
      throw GridError("trace grid is not uniform at node " + std::to_string(i));
    }
  }
  return h;
}

}  // namespace

Quadrature integrate_uniform(std::span<const double> samples, double step) {
  if (samples.size() > 1 && !(step > 0.0 && std::isfinite(step))) {
    throw GridError("quadrature step must be positive and finite");
  }
  Quadrature q;
  q.value = simpson(samples, step, q.trapezoid_tail);
  const std::size_t n = samples.size();
  if (n >= 3) {
    // Half-resolution estimate over the odd-length prefix; an even sample
    // count shares the fine grid's trapezoid tail.
    const bool even = n % 2 == 0;
    const std::size_t prefix = even ? n - 1 : n;
    std::vector<double> coarse;
    coarse.reserve(prefix / 2 + 1);
    for (std::size_t i = 0; i < prefix; i += 2) coarse.push_back(samples[i]);
    bool coarse_tail = false;
    double coarse_value = simpson(coarse, 2.0 * step, coarse_tail);
    if (even) coarse_value += 0.5 * step * (samples[n - 2] + samples[n - 1]);
    const double diff = std::abs(q.value - coarse_value);
    q.error_estimate = coarse_tail ? diff : diff / 15.0;
  }
  return q;
}

double geodesic_distance(const QuantumState& a, const QuantumState& b) {
  return wootters_distance(a, b);
}

Quadrature path_length(const EvolutionTrace& trace) {
  validate_trace(trace);
  const double h = uniform_step(trace);
  Quadrature q = integrate_uniform(trace.energy_dispersion, h);
  q.value *= 2.0 / trace.hbar;
  q.error_estimate *= 2.0 / trace.hbar;
  return q;
}

SpeedLimitReport efficiency(const EvolutionTrace& trace) {
  validate_trace(trace);
  if (phase_equivalent(trace.initial(), trace.final(), kDegenerateTolerance)) {
    throw DegenerateEndpointsError("initial and final states are the same ray");
  }
  const Quadrature length = path_length(trace);

  SpeedLimitReport r;
  r.overlap = overlap_modulus(trace.initial(), trace.final());
  r.s0 = 2.0 * std::acos(r.overlap);
  r.s = length.value;
  r.quadrature_error = length.error_estimate;
  r.trapezoid_tail = length.trapezoid_tail;
  r.eta = r.s0 / r.s;
  r.t_effective = trace.times.back();
  r.avg_dispersion = avg_dispersion(trace);
  r.t_ideal = min_time(BoundQuery::time_averaged(r.overlap, r.avg_dispersion, trace.hbar));
  r.bound_satisfied = r.eta <= 1.0 + kEfficiencySlack;
  r.orthogonal_endpoints = r.overlap <= kDegenerateTolerance;
  return r;
}

bool is_geodesic(const EvolutionTrace& trace, double tol) {
  const double s0 = geodesic_distance(trace.initial(), trace.final());
  return path_length(trace).value <= s0 + tol;
}

GeodesicSpec::GeodesicSpec(QuantumState a, QuantumState b) : a_(std::move(a)), b_(std::move(b)) {
  if (overlap_modulus(a_, b_) >= 1.0 - kDegenerateTolerance) {
    throw DegenerateEndpointsError("geodesic endpoints are phase equivalent");
  }
}

QuantumState geodesic_line(const GeodesicSpec& spec, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
  if (xi == 0.0) return spec.a();
  if (xi == 1.0) return spec.b();
  return QuantumState::normalized((1.0 - xi) * spec.a().amplitudes() +
                                  xi * spec.b().amplitudes());
}

double orthogonal_line_normalization(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
  return 1.0 / std::sqrt(1.0 - 2.0 * xi * (1.0 - xi));
}

double xi_of_t(double epsilon, double t, double hbar) {
  if (!(epsilon > 0.0) || !(hbar > 0.0)) throw DomainError("epsilon and hbar must be positive");
  const double t_end = std::numbers::pi * hbar / (2.0 * epsilon);
  if (!(t >= 0.0 && t <= t_end * (1.0 + 1e-12))) {
    throw DomainError("t outside [0, πħ/(2ε)]");
  }
  const double angle = epsilon * t / hbar;
  // tan/(1 + tan) written as sin/(sin + cos) stays finite at the endpoint.
  const double s = std::sin(angle);
  const double xi = s / (s + std::cos(angle));
  return std::clamp(xi, 0.0, 1.0);
}

}  // namespace qgeo
