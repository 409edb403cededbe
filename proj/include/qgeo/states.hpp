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

#ifndef QGEO_STATES_HPP_
#define QGEO_STATES_HPP_

#include <initializer_list>
#include <vector>

#include "qgeo/linalg.hpp"

namespace qgeo {

/// Normalized pure state of a finite-dimensional system (dim ≥ 2).
///
/// Instances are immutable. There is no public constructor from raw
/// amplitudes: `normalized` rescales its input, `exact` requires unit norm
/// within a tolerance.
class QuantumState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  static QuantumState normalized(const CVector& amplitudes);
  static QuantumState normalized(std::initializer_list<Complex> amplitudes);
  static QuantumState exact(const CVector& amplitudes, double tol = kNormTolerance);
  static QuantumState exact(std::initializer_list<Complex> amplitudes,
                            double tol = kNormTolerance);
  /// |index⟩ of the computational basis.
  static QuantumState basis(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  /// e^{iφ}|ψ⟩.
  QuantumState with_global_phase(double phi) const;

 private:
  explicit QuantumState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {}

  CVector amplitudes_;
};

/// ⟨a|b⟩ = Σ conj(aᵢ)·bᵢ.
Complex inner(const QuantumState& a, const QuantumState& b);

/// |⟨a|b⟩|, clamped into [0, 1]. A modulus above 1 + 1e-12 is not round-off
/// and raises NormalizationError.
double overlap_modulus(const QuantumState& a, const QuantumState& b);

/// 2·arccos|⟨a|b⟩| in radians, in [0, π], evaluated in half-angle form.
double wootters_distance(const QuantumState& a, const QuantumState& b);

/// True iff a and b describe the same ray: |⟨a|b⟩| ≥ 1 − tol.
bool phase_equivalent(const QuantumState& a, const QuantumState& b, double tol = 1e-12);

}  // namespace qgeo

#endif  // QGEO_STATES_HPP_
