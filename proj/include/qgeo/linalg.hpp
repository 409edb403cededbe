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

#ifndef QGEO_LINALG_HPP_
#define QGEO_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace qgeo {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest entry modulus, ‖M‖_max.
double max_abs(const CMatrix& m);

/// ‖M − M†‖_max. Zero for an exactly Hermitian matrix.
double hermiticity_residual(const CMatrix& m);

/// True when ‖M − M†‖_max ≤ rel_tol·‖M‖_max.
bool is_hermitian(const CMatrix& m, double rel_tol);

/// ‖U†U − I‖_max.
double unitarity_residual(const CMatrix& u);

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

// Scaling-and-squaring Taylor exponential for a skew-Hermitian generator
// A = −(i/ħ)·H·dt. The series is truncated once a term drops below 1e-14
// relative to the partial sum; the scaled argument has ‖A‖₁ ≤ 1/2.
CMatrix expm_skew_hermitian(const CMatrix& generator);

/// exp(−(i/ħ)·H·dt) for a Hermitian 2×2 H, via H = h₀I + h·σ.
CMatrix two_level_exponential(const CMatrix& h, double dt, double hbar);

/// exp(−(i/ħ)·H·dt) for any Hermitian H; dispatches to the closed form when
/// H is 2×2.
CMatrix unitary_step(const CMatrix& h, double dt, double hbar);

}  // namespace qgeo

#endif  // QGEO_LINALG_HPP_
