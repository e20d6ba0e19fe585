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

#include "uavplan/planner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

namespace uavplan {

void PlanConstraints::validate() const {
  if (!(coverage_eps > 0.0) || !(coverage_eps < 1.0)) {
    throw std::domain_error("coverage_eps must lie in (0, 1)");
  }
  if (max_altitude_m && !(*max_altitude_m > 0.0)) {
    throw std::domain_error("max_altitude_m must be positive when present");
  }
  if (max_tx_power_dbm && !std::isfinite(*max_tx_power_dbm)) {
    throw std::domain_error("max_tx_power_dbm must be finite when present");
  }
}

namespace {

struct SymmetricSolve {
  double per_uav_radius_m;
  double altitude_m;
  double tx_power_dbm;
};

// Geometry and minimum power of a symmetric count-station deployment,
// before any power cap is applied.
SymmetricSolve solve_symmetric(double area_radius_m, int count,
                               const EnvironmentParams& env,
                               const RadioConfig& radio_template,
                               double coverage_eps,
                               const std::optional<double>& max_altitude_m,
                               const SolverOptions& options) {
  const PackingLayout lay = layout(count);
  const double tan_half =
      std::tan(deg_to_rad(radio_template.beamwidth_deg) / 2.0);

  // The packing fixes the footprint radius; operating at the beam edge
  // puts the station as high as the footprint allows. An altitude cap
  // shrinks every footprint in the same proportion, centers unchanged.
  double radius = lay.radius_norm * area_radius_m;
  if (max_altitude_m && *max_altitude_m * tan_half < radius) {
    radius = *max_altitude_m * tan_half;
  }
  const double altitude = radius / tan_half;

  // Worst-case user: on the serving cell edge, on the segment toward the
  // nearest other station, which then interferes from the shortest
  // possible horizontal distance.
  std::optional<InterfererSpec> interferer;
  if (count >= 2) {
    const double interferer_range =
        min_center_spacing(lay) * area_radius_m - radius;
    interferer = InterfererSpec{LinkGeometry(interferer_range, altitude),
                                std::atan(interferer_range / altitude)};
  }

  RadioConfig radio = radio_template;
  radio.coverage_eps = coverage_eps;
  const double power = min_transmit_power_dbm(radius, radio, env, altitude,
                                              interferer, options);
  return {radius, altitude, power};
}

}  // namespace

DeploymentPlan plan(double area_radius_m, int uav_count,
                    const EnvironmentParams& env,
                    const RadioConfig& radio_template,
                    const PlanConstraints& constraints,
                    const SolverOptions& options) {
  if (!(area_radius_m > 0.0)) {
    throw std::domain_error("area_radius_m must be positive");
  }
  env.validate();
  radio_template.validate();
  constraints.validate();

  SymmetricSolve solve;
  try {
    solve = solve_symmetric(area_radius_m, uav_count, env, radio_template,
                            constraints.coverage_eps,
                            constraints.max_altitude_m, options);
  } catch (const UnreachableError& e) {
    throw InfeasibleError(std::to_string(uav_count) +
                          " stations cannot meet the coverage requirement: " +
                          e.what());
  }
  if (constraints.max_tx_power_dbm &&
      solve.tx_power_dbm > *constraints.max_tx_power_dbm + 1e-9) {
    throw InfeasibleError(
        "minimum power " + std::to_string(solve.tx_power_dbm) +
        " dBm exceeds the cap of " +
        std::to_string(*constraints.max_tx_power_dbm) + " dBm");
  }

  // Lifetime is normalized against the single-station plan under the same
  // altitude cap; the power cap stays out of the reference (a capped
  // reference would be infeasible, not different).
  double reference_power_dbm = solve.tx_power_dbm;
  if (uav_count != 1) {
    try {
      reference_power_dbm =
          solve_symmetric(area_radius_m, 1, env, radio_template,
                          constraints.coverage_eps,
                          constraints.max_altitude_m, options)
              .tx_power_dbm;
    } catch (const UnreachableError& e) {
      throw InfeasibleError(
          std::string("the single-station lifetime reference is itself "
                      "infeasible: ") +
          e.what());
    }
  }

  const PackingLayout lay = layout(uav_count);
  DeploymentPlan result;
  result.uav_count = uav_count;
  result.area_radius_m = area_radius_m;
  result.positions_m.reserve(lay.centers_norm.size());
  for (const Eigen::Vector2d& c : lay.centers_norm) {
    result.positions_m.emplace_back(c.x() * area_radius_m,
                                    c.y() * area_radius_m, solve.altitude_m);
  }
  result.per_uav_radius_m = solve.per_uav_radius_m;
  result.altitude_m = solve.altitude_m;
  result.tx_power_dbm = solve.tx_power_dbm;
  const double radius_norm = solve.per_uav_radius_m / area_radius_m;
  result.total_coverage = uav_count * radius_norm * radius_norm;
  result.lifetime = lifetime_metric(solve.tx_power_dbm, reference_power_dbm);
  return result;
}

std::optional<int> min_uav_count(double area_radius_m,
                                 double coverage_threshold,
                                 const EnvironmentParams& env,
                                 const RadioConfig& radio_template,
                                 const PlanConstraints& constraints,
                                 const SolverOptions& options) {
  if (!(coverage_threshold > 0.0)) {
    throw std::domain_error("coverage_threshold must be positive");
  }
  for (int m = 1; m <= 10; ++m) {
    try {
      const DeploymentPlan p =
          plan(area_radius_m, m, env, radio_template, constraints, options);
      if (p.total_coverage >= coverage_threshold) return m;
    } catch (const InfeasibleError&) {
      // This count cannot meet the requirement under the caps; a larger
      // count may still work (smaller cells need less power).
    }
  }
  return std::nullopt;
}

std::vector<MSweepRow> sweep_vs_m(double area_radius_m, int m_from, int m_to,
                                  const EnvironmentParams& env,
                                  const RadioConfig& radio_template,
                                  const PlanConstraints& constraints,
                                  const SolverOptions& options) {
  if (m_from < 1 || m_to < m_from) {
    throw std::domain_error("sweep range must satisfy 1 <= m_from <= m_to");
  }
  std::vector<MSweepRow> rows;
  rows.reserve(m_to - m_from + 1);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int m = m_from; m <= m_to; ++m) {
    MSweepRow row{m, nan, nan, nan, nan, ""};
    try {
      const DeploymentPlan p =
          plan(area_radius_m, m, env, radio_template, constraints, options);
      row.total_coverage = p.total_coverage;
      row.lifetime = p.lifetime;
      row.altitude_m = p.altitude_m;
      row.tx_power_dbm = p.tx_power_dbm;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RcSweepRow> sweep_vs_rc(const std::vector<double>& area_radii_m,
                                    double coverage_threshold,
                                    const EnvironmentParams& env,
                                    const RadioConfig& radio_template,
                                    const PlanConstraints& constraints,
                                    const SolverOptions& options) {
  std::vector<RcSweepRow> rows;
  rows.reserve(area_radii_m.size());
  for (double rc : area_radii_m) {
    rows.push_back({rc, min_uav_count(rc, coverage_threshold, env,
                                      radio_template, constraints, options)});
  }
  return rows;
}

}  // namespace uavplan
