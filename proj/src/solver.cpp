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

#include "uavplan/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

namespace uavplan {

namespace {

void check_options(const SolverOptions& options) {
  if (options.grid_points < 2) {
    throw std::domain_error("SolverOptions.grid_points must be >= 2");
  }
  if (!(options.radius_tol_m > 0.0) || !(options.power_tol_db > 0.0)) {
    throw std::domain_error("SolverOptions tolerances must be positive");
  }
  if (!(options.power_lo_dbm < options.power_hi_dbm)) {
    throw std::domain_error("SolverOptions power bracket must be ordered");
  }
}

}  // namespace

RadiusSolution coverage_radius(const RadioConfig& radio,
                               const EnvironmentParams& env,
                               double altitude_m,
                               const std::optional<InterfererSpec>& interferer,
                               const SolverOptions& options) {
  check_options(options);
  const double cap = beam_footprint_radius_m(altitude_m, radio.beamwidth_deg);
  const double eps = radio.coverage_eps;
  auto pcov = [&](double range_m) {
    return coverage_probability(
        {LinkGeometry(range_m, altitude_m), interferer, env, radio});
  };

  const double pcov_cap = pcov(cap);
  if (pcov_cap >= eps) {
    return {cap, RadiusBinding::kBeamLimited, pcov_cap};
  }

  // Coverage may dip and recover along r, so walk the grid inward from the
  // beam edge: the first compliant point brackets the outermost crossing.
  const int n = options.grid_points;
  double lo = -1.0;
  double hi = cap;
  for (int i = n - 1; i >= 0; --i) {
    const double r = cap * i / n;
    if (pcov(r) >= eps) {
      lo = r;
      break;
    }
    hi = r;
  }
  if (lo < 0.0) {
    throw NoCoverageError("coverage stays below " + std::to_string(eps) +
                          " at every range up to the beam footprint");
  }
  while (hi - lo > options.radius_tol_m) {
    const double mid = 0.5 * (lo + hi);
    if (pcov(mid) >= eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, RadiusBinding::kPowerLimited, pcov(lo)};
}

double min_transmit_power_dbm(double required_radius_m,
                              const RadioConfig& radio_template,
                              const EnvironmentParams& env,
                              double altitude_m,
                              const std::optional<InterfererSpec>& interferer,
                              const SolverOptions& options) {
  check_options(options);
  const double cap =
      beam_footprint_radius_m(altitude_m, radio_template.beamwidth_deg);
  if (!(required_radius_m >= 0.0) ||
      required_radius_m > cap * (1.0 + 1e-9)) {
    throw BeamFootprintError("required radius " +
                             std::to_string(required_radius_m) +
                             " m exceeds the beam footprint of " +
                             std::to_string(cap) + " m");
  }
  const double eps = radio_template.coverage_eps;
  // The candidate power drives the interference term too: every station in
  // a symmetric deployment transmits at the same power.
  auto pcov = [&](double tx_power_dbm) {
    RadioConfig radio = radio_template;
    radio.tx_power_dbm = tx_power_dbm;
    return coverage_probability(
        {LinkGeometry(required_radius_m, altitude_m), interferer, env, radio});
  };

  // Bisection needs coverage monotone in power; the noise term inside the
  // threshold guarantees it analytically, but sample the bracket anyway and
  // refuse to bisect a profile that disagrees.
  constexpr int kProbePoints = 8;
  double previous = -1.0;
  for (int i = 0; i < kProbePoints; ++i) {
    const double p = options.power_lo_dbm +
                     (options.power_hi_dbm - options.power_lo_dbm) * i /
                         (kProbePoints - 1);
    const double value = pcov(p);
    if (value < previous - 1e-9) {
      throw NonMonotoneError(
          "coverage probability is not monotone over the power bracket near " +
          std::to_string(p) + " dBm");
    }
    previous = value;
  }

  double lo = options.power_lo_dbm;
  double hi = options.power_hi_dbm;
  if (pcov(lo) >= eps) return lo;
  if (pcov(hi) < eps) {
    throw UnreachableError("coverage " + std::to_string(eps) +
                           " unreachable at " + std::to_string(hi) +
                           " dBm for radius " +
                           std::to_string(required_radius_m) + " m");
  }
  while (hi - lo > options.power_tol_db) {
    const double mid = 0.5 * (lo + hi);
    if (pcov(mid) >= eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // The upper end of the bracket always meets the requirement.
  return hi;
}

double lifetime_metric(double tx_power_dbm, double reference_power_dbm) {
  return dbm_to_mw(reference_power_dbm) / dbm_to_mw(tx_power_dbm);
}

}  // namespace uavplan
