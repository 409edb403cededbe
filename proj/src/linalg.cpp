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

#include "qgeo/linalg.hpp"

#include <cmath>

namespace qgeo {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_residual(m) <= rel_tol * max_abs(m);
}

double unitarity_residual(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

namespace pauli {
CMatrix identity() { return CMatrix::Identity(2, 2); }
CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}
CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

CMatrix expm_skew_hermitian(const CMatrix& generator) {
  const Eigen::Index n = generator.rows();
  const double norm1 = generator.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const CMatrix scaled = generator / std::ldexp(1.0, squarings);

  CMatrix sum = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k < 64; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= 1e-14 * max_abs(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

CMatrix two_level_exponential(const CMatrix& h, double dt, double hbar) {
  const double h0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double hz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double hx = h(1, 0).real();
  const double hy = h(1, 0).imag();
  const double length = std::sqrt(hx * hx + hy * hy + hz * hz);
  const double angle = length * dt / hbar;
  const Complex phase = std::exp(-kI * (h0 * dt / hbar));

  CMatrix u = std::cos(angle) * pauli::identity();
  if (length > 0.0) {
    const CMatrix n_sigma = (hx * pauli::x() + hy * pauli::y() + hz * pauli::z()) / length;
    u -= kI * std::sin(angle) * n_sigma;
  }
  return phase * u;
}

CMatrix unitary_step(const CMatrix& h, double dt, double hbar) {
  if (h.rows() == 2) return two_level_exponential(h, dt, hbar);
  return expm_skew_hermitian((-kI * (dt / hbar)) * h);
}

}  // namespace qgeo
