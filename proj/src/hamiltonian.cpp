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

#include "qgeo/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kImaginaryResidue = 1e-12;
constexpr double kStationaryThreshold = 1e-12;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

void require_hermitian(const CMatrix& h, double rel_tol) {
  if (h.rows() != h.cols()) throw DimensionError("Hamiltonian matrix is not square");
  if (!h.allFinite()) throw HermiticityError("Hamiltonian has non-finite entries");
  if (!is_hermitian(h, rel_tol)) {
    throw HermiticityError("matrix is not Hermitian: ‖H − H†‖_max = " +
                           std::to_string(hermiticity_residual(h)));
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Hamiltonian Hamiltonian::constant(CMatrix h, double hbar) {
  require_positive(hbar, "hbar");
  require_hermitian(h, kHermitianTolerance);
  if (h.rows() < 2) throw DimensionError("Hamiltonian needs dim >= 2");
  return Hamiltonian(ConstantMatrix{std::move(h)}, hbar);
}

Hamiltonian Hamiltonian::time_dependent(std::function<CMatrix(double)> h, Eigen::Index dim,
                                        double sample_tolerance, double hbar) {
  require_positive(hbar, "hbar");
  require_positive(sample_tolerance, "sample_tolerance");
  if (!h) throw UsageError("time-dependent Hamiltonian needs a callable");
  if (dim < 2) throw DimensionError("Hamiltonian needs dim >= 2");
  return Hamiltonian(TimeDependent{std::move(h), dim, sample_tolerance}, hbar);
}

Hamiltonian Hamiltonian::two_level_static(double epsilon, double hbar) {
  require_positive(hbar, "hbar");
  require_positive(epsilon, "epsilon");
  return Hamiltonian(TwoLevelStatic{epsilon}, hbar);
}

Hamiltonian Hamiltonian::two_level_driven(double epsilon, double omega, double omega0,
                                          double hbar) {
  require_positive(hbar, "hbar");
  require_positive(epsilon, "epsilon");
  require_positive(omega, "omega");
  require_positive(omega0, "omega0");
  return Hamiltonian(TwoLevelDriven{epsilon, omega, omega0}, hbar);
}

CMatrix Hamiltonian::at(double t) const {
  return std::visit(
      Overloaded{
          [](const ConstantMatrix& k) { return k.h; },
          [t](const TimeDependent& k) {
            CMatrix m = k.h(t);
            if (m.rows() != k.dim || m.cols() != k.dim) {
              throw DimensionError("H(t) sample has the wrong shape at t = " +
                                   std::to_string(t));
            }
            require_hermitian(m, k.sample_tolerance);
            return m;
          },
          [](const TwoLevelStatic& k) -> CMatrix { return k.epsilon * pauli::x(); },
          [t, this](const TwoLevelDriven& k) {
            CMatrix m(2, 2);
            const double half_gap = 0.5 * hbar_ * k.omega0;
            m << half_gap, k.epsilon * std::polar(1.0, -k.omega * t),
                k.epsilon * std::polar(1.0, k.omega * t), -half_gap;
            return m;
          },
      },
      kind_);
}

Eigen::Index Hamiltonian::dim() const {
  return std::visit(Overloaded{
                        [](const ConstantMatrix& k) { return k.h.rows(); },
                        [](const TimeDependent& k) { return k.dim; },
                        [](const auto&) -> Eigen::Index { return 2; },
                    },
                    kind_);
}

bool Hamiltonian::is_time_dependent() const {
  return std::holds_alternative<TimeDependent>(kind_) ||
         std::holds_alternative<TwoLevelDriven>(kind_);
}

double detuning(const TwoLevelDriven& drive, double hbar) {
  return hbar * (drive.omega - drive.omega0);
}

double effective_rabi_energy(const TwoLevelDriven& drive, double hbar) {
  const double delta = detuning(drive, hbar);
  return std::sqrt(drive.epsilon * drive.epsilon + 0.25 * delta * delta);
}

EnergyStats energy_stats(const CMatrix& h, const QuantumState& psi) {
  if (h.rows() != psi.dim()) {
    throw DimensionError("Hamiltonian and state dimensions differ");
  }
  const CVector& v = psi.amplitudes();
  const CVector hv = h * v;
  const Complex expectation = v.dot(hv);
  const double scale = std::max(max_abs(h), 1e-300);
  if (std::abs(expectation.imag()) > kImaginaryResidue * scale) {
    throw HermiticityError("⟨ψ|H|ψ⟩ has imaginary part " +
                           std::to_string(expectation.imag()));
  }
  const double mean = expectation.real();
  return {mean, (hv - mean * v).norm()};
}

double energy_mean(const Hamiltonian& h, const QuantumState& psi, double t) {
  return energy_stats(h.at(t), psi).mean;
}

double energy_dispersion(const Hamiltonian& h, const QuantumState& psi, double t) {
  return energy_stats(h.at(t), psi).dispersion;
}

double two_level_dispersion_spectral(double e1, double e2, Complex a1, Complex a2) {
  if (e2 < e1) throw OrderingError("spectral dispersion needs E2 >= E1");
  const double p1 = std::norm(a1);
  const double p2 = std::norm(a2);
  if (std::abs(p1 + p2 - 1.0) > 1e-12) {
    throw NormalizationError("|a1|^2 + |a2|^2 must equal 1");
  }
  const double imbalance = p1 - p2;
  return 0.5 * (e2 - e1) * std::sqrt(std::max(0.0, 1.0 - imbalance * imbalance));
}

Decomposition vaidman_decompose(const CMatrix& q, const QuantumState& psi) {
  require_hermitian(q, kHermitianTolerance);
  if (q.rows() != psi.dim()) throw DimensionError("operator and state dimensions differ");

  const CVector& v = psi.amplitudes();
  const CVector qv = q * v;
  const double mean = v.dot(qv).real();
  const CVector residual = qv - mean * v;
  const double dispersion = residual.norm();
  if (dispersion <= kStationaryThreshold * max_abs(q)) {
    throw StationaryStateError("state is an eigenstate of Q (ΔQ = " +
                               std::to_string(dispersion) + ")");
  }
  return {mean, dispersion, QuantumState::normalized(residual / dispersion)};
}

double overlap_rate_bound(double delta_e, double overlap, double hbar) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw DomainError("overlap must lie in [0, 1]");
  if (!(delta_e >= 0.0)) throw DomainError("energy dispersion must be non-negative");
  require_positive(hbar, "hbar");
  return 2.0 * delta_e / hbar * overlap * std::sqrt((1.0 - overlap) * (1.0 + overlap));
}

}  // namespace qgeo
