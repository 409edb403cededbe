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

#ifndef QGEO_UNITS_HPP_
#define QGEO_UNITS_HPP_

#include <numbers>

namespace qgeo::si {

// CODATA 2018 exact / recommended values.
inline constexpr double kHbar = 1.054571817e-34;            // J·s
inline constexpr double kPlanck = 6.62607015e-34;           // J·s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kElectronMass = 9.1093837015e-31;   // kg
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s

/// Electron Rabi angular frequency eB⊥/(2m) in rad/s for a transverse field
/// in tesla (the Gaussian-unit eB/(2mc) read in MKSA).
inline constexpr double rabi_angular_frequency(double b_perp_tesla) {
  return kElementaryCharge * b_perp_tesla / (2.0 * kElectronMass);
}

/// Electron Larmor angular frequency eB∥/m in rad/s.
inline constexpr double larmor_angular_frequency(double b_parallel_tesla) {
  return kElementaryCharge * b_parallel_tesla / kElectronMass;
}

inline constexpr double larmor_frequency_hz(double b_parallel_tesla) {
  return larmor_angular_frequency(b_parallel_tesla) / (2.0 * std::numbers::pi);
}

}  // namespace qgeo::si

#endif  // QGEO_UNITS_HPP_
