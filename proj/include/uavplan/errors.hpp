// Copyright 2026 The uavplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UAVPLAN_ERRORS_HPP_
#define UAVPLAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uavplan {

// Common base so callers can catch every library failure in one clause.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested ground range lies outside the antenna beam footprint
// h * tan(theta_B / 2).
class BeamFootprintError : public Error {
 public:
  using Error::Error;
};

// Coverage stays below the required probability at every ground range, so
// no coverage radius exists for this configuration.
class NoCoverageError : public Error {
 public:
  using Error::Error;
};

// The coverage requirement cannot be met anywhere inside the transmit-power
// search bracket (interference-limited or geometry-infeasible).
class UnreachableError : public Error {
 public:
  using Error::Error;
};

// Deployment constraints (power or altitude caps) rule out every plan.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// No stored packing layout exists for the requested station count.
class UnsupportedLayoutError : public Error {
 public:
  using Error::Error;
};

// Coverage probability failed the monotonicity pre-check that the power
// bisection relies on; results would be untrustworthy.
class NonMonotoneError : public Error {
 public:
  using Error::Error;
};

// A scenario file could not be parsed; carries the 1-based offending line
// (0 when the failure is a cross-field consistency check).
class ScenarioParseError : public Error {
 public:
  ScenarioParseError(const std::string& message, int line)
      : Error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace uavplan

#endif  // UAVPLAN_ERRORS_HPP_
