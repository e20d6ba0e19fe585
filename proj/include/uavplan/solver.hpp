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

#ifndef UAVPLAN_SOLVER_HPP_
#define UAVPLAN_SOLVER_HPP_

#include <optional>

#include "uavplan/coverage.hpp"

// One-dimensional solvers on top of the coverage model: the largest ground
// radius meeting the coverage requirement, and the smallest transmit power
// that reaches a required radius.

namespace uavplan {

enum class RadiusBinding {
  kPowerLimited,  // the coverage probability crosses eps inside the beam
  kBeamLimited,   // coverage holds all the way to the footprint edge
};

struct RadiusSolution {
  double radius_m;
  RadiusBinding binding;
  double pcov_at_radius;
};

struct SolverOptions {
  int grid_points = 512;       // coarse scan resolution for the radius solve
  double radius_tol_m = 0.1;   // bisection tolerance on the radius
  double power_lo_dbm = -30.0; // transmit-power search bracket
  double power_hi_dbm = 60.0;
  double power_tol_db = 0.01;  // bisection tolerance on the power
};

// Largest r in [0, h*tan(theta_B/2)] with coverage_probability >= eps.
// Coverage need not be monotone in r (path loss fights the elevation-driven
// LoS probability), so a coarse grid scan brackets the outermost crossing
// and bisection refines it. Returns kBeamLimited with the footprint radius
// when coverage holds at the beam edge. Throws NoCoverageError when the
// requirement fails everywhere.
RadiusSolution coverage_radius(const RadioConfig& radio,
                               const EnvironmentParams& env,
                               double altitude_m,
                               const std::optional<InterfererSpec>&
                                   interferer = std::nullopt,
                               const SolverOptions& options = {});

// Smallest transmit power in [power_lo_dbm, power_hi_dbm] whose coverage
// probability at required_radius_m reaches radio_template.coverage_eps,
// by bisection to power_tol_db. The candidate power feeds the interference
// term as well (all stations transmit at the same power). Coverage is
// sampled at 8 bracket points first; NonMonotoneError reports a
// non-monotone profile instead of bisecting it. Throws BeamFootprintError
// when the radius exceeds the footprint, UnreachableError when even the
// top of the bracket cannot cover.
double min_transmit_power_dbm(double required_radius_m,
                              const RadioConfig& radio_template,
                              const EnvironmentParams& env,
                              double altitude_m,
                              const std::optional<InterfererSpec>&
                                  interferer = std::nullopt,
                              const SolverOptions& options = {});

// Normalized endurance proxy: linear power ratio P_ref / P_t. Equals 1 at
// the reference power and grows as the transmit power drops.
double lifetime_metric(double tx_power_dbm, double reference_power_dbm);

}  // namespace uavplan

#endif  // UAVPLAN_SOLVER_HPP_
