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

#ifndef QGEO_HAMILTONIAN_HPP_
#define QGEO_HAMILTONIAN_HPP_

#include <functional>
#include <variant>

#include "qgeo/linalg.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

struct ConstantMatrix {
  CMatrix h;
};

/// User-supplied H(t). The function is called concurrently during sweeps and
/// must therefore be pure in t.
struct TimeDependent {
  std::function<CMatrix(double)> h;
  Eigen::Index dim = 0;
  double sample_tolerance = 1e-12;
};

/// H = ε·σx.
struct TwoLevelStatic {
  double epsilon = 1.0;
};

/// H(t) = ε cos(ωt) σx + ε sin(ωt) σy + (ħω₀/2) σz.
struct TwoLevelDriven {
  double epsilon = 1.0;
  double omega = 1.0;
  double omega0 = 1.0;
};

/// Hermitian generator together with the value of ħ it is expressed against.
/// Every matrix handed out by `at` has passed a Hermiticity check.
class Hamiltonian {
 public:
  using Kind = std::variant<ConstantMatrix, TimeDependent, TwoLevelStatic, TwoLevelDriven>;

  static Hamiltonian constant(CMatrix h, double hbar = 1.0);
  static Hamiltonian time_dependent(std::function<CMatrix(double)> h, Eigen::Index dim,
                                    double sample_tolerance = 1e-12, double hbar = 1.0);
  static Hamiltonian two_level_static(double epsilon, double hbar = 1.0);
  static Hamiltonian two_level_driven(double epsilon, double omega, double omega0,
                                      double hbar = 1.0);

  CMatrix at(double t) const;

  Eigen::Index dim() const;
  double hbar() const { return hbar_; }
  bool is_time_dependent() const;
  const Kind& kind() const { return kind_; }

 private:
  Hamiltonian(Kind kind, double hbar) : kind_(std::move(kind)), hbar_(hbar) {}

  Kind kind_;
  double hbar_;
};

/// Δ = ħ(ω − ω₀).
double detuning(const TwoLevelDriven& drive, double hbar);
/// κ = √(ε² + Δ²/4).
double effective_rabi_energy(const TwoLevelDriven& drive, double hbar);

struct EnergyStats {
  double mean = 0.0;
  double dispersion = 0.0;
};

/// ⟨H⟩ and ΔE for a fixed Hermitian matrix. ΔE is evaluated as
/// ‖Hψ − ⟨H⟩ψ‖, which equals √(⟨H²⟩ − ⟨H⟩²) and cannot go negative.
EnergyStats energy_stats(const CMatrix& h, const QuantumState& psi);

double energy_mean(const Hamiltonian& h, const QuantumState& psi, double t = 0.0);
double energy_dispersion(const Hamiltonian& h, const QuantumState& psi, double t = 0.0);

/// ΔE of a two-level state α₁|E₁⟩ + α₂|E₂⟩ from the spectrum alone:
/// ((E₂−E₁)/2)·√(1 − (|α₁|² − |α₂|²)²).
double two_level_dispersion_spectral(double e1, double e2, Complex a1, Complex a2);

/// Q|ψ⟩ = mean·|ψ⟩ + dispersion·|perp⟩ with ⟨ψ|perp⟩ = 0.
struct Decomposition {
  double mean;
  double dispersion;
  QuantumState perp;
};

/// Splits Q|ψ⟩ into its component along |ψ⟩ and the normalized remainder.
/// Throws StationaryStateError when ΔQ ≤ 1e-12·‖Q‖_max.
Decomposition vaidman_decompose(const CMatrix& q, const QuantumState& psi);

/// Largest possible |d|⟨ψ|A⟩|²/dt| given the current overlap |⟨ψ|A⟩| and ΔE:
/// (2ΔE/ħ)·x·√(1 − x²).
double overlap_rate_bound(double delta_e, double overlap, double hbar = 1.0);

}  // namespace qgeo

#endif  // QGEO_HAMILTONIAN_HPP_
