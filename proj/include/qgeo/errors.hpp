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

#ifndef QGEO_ERRORS_HPP_
#define QGEO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qgeo {

/// Base of every error raised by the library. Each contract violation has its
/// own subclass so callers (and tests) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct NormalizationError : Error {
  using Error::Error;
};
struct HermiticityError : Error {
  using Error::Error;
};
/// psi is an eigenstate of the relevant operator (zero dispersion).
struct StationaryStateError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct GridError : Error {
  using Error::Error;
};
struct IntegrationError : Error {
  using Error::Error;
};
/// Initial and final states of a trace coincide up to a global phase.
struct DegenerateEndpointsError : Error {
  using Error::Error;
};
struct OrderingError : Error {
  using Error::Error;
};
/// A closed-form expression evaluated to something outside its range.
struct FormulaError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};
/// Wraps (as a nested exception) a module error raised while running a
/// named scenario.
struct ScenarioError : Error {
  using Error::Error;
};

}  // namespace qgeo

#endif  // QGEO_ERRORS_HPP_
