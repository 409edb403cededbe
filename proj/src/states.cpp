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

#include "qgeo/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr double kClampWindow = 1e-12;

void check_amplitudes(const CVector& v) {
  if (v.size() < 2) {
    throw DimensionError("quantum state needs dim >= 2, got " + std::to_string(v.size()));
  }
  if (!v.allFinite()) throw NormalizationError("quantum state has non-finite amplitudes");
}

CVector to_vector(std::initializer_list<Complex> amplitudes) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amplitudes) v[i++] = a;
  return v;
}

void require_same_dim(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("state dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

QuantumState QuantumState::normalized(const CVector& amplitudes) {
  check_amplitudes(amplitudes);
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw NormalizationError("cannot normalize the zero vector");
  return QuantumState(amplitudes / norm);
}

QuantumState QuantumState::normalized(std::initializer_list<Complex> amplitudes) {
  return normalized(to_vector(amplitudes));
}

QuantumState QuantumState::exact(const CVector& amplitudes, double tol) {
  check_amplitudes(amplitudes);
  const double deviation = std::abs(amplitudes.squaredNorm() - 1.0);
  if (deviation > tol) {
    throw NormalizationError("state norm deviates from 1 by " + std::to_string(deviation));
  }
  return QuantumState(amplitudes);
}

QuantumState QuantumState::exact(std::initializer_list<Complex> amplitudes, double tol) {
  return exact(to_vector(amplitudes), tol);
}

QuantumState QuantumState::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
  CVector v = CVector::Zero(dim);
  if (dim >= 1) v[index] = 1.0;
  check_amplitudes(v);
  return QuantumState(std::move(v));
}

QuantumState QuantumState::with_global_phase(double phi) const {
  return QuantumState(amplitudes_ * std::polar(1.0, phi));
}

Complex inner(const QuantumState& a, const QuantumState& b) {
  require_same_dim(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

double overlap_modulus(const QuantumState& a, const QuantumState& b) {
  const double m = std::abs(inner(a, b));
  if (m > 1.0 + kClampWindow) {
    throw NormalizationError("overlap modulus " + std::to_string(m) + " exceeds 1");
  }
  return std::min(m, 1.0);
}

double wootters_distance(const QuantumState& a, const QuantumState& b) {
  const Complex ip = inner(a, b);
  const double m = overlap_modulus(a, b);
  if (m == 0.0) return std::numbers::pi;
  // Half-angle form: with b' = b·e^{−i·arg⟨a|b⟩}, ‖a − b'‖ = 2 sin(θ/2) and
  // ‖a + b'‖ = 2 cos(θ/2), θ = arccos|⟨a|b⟩|.
  const CVector aligned = b.amplitudes() * (std::conj(ip) / std::abs(ip));
  const double half = std::atan2((a.amplitudes() - aligned).norm(),
                                 (a.amplitudes() + aligned).norm());
  return 4.0 * half;
}

bool phase_equivalent(const QuantumState& a, const QuantumState& b, double tol) {
  return overlap_modulus(a, b) >= 1.0 - tol;
}

}  // namespace qgeo
