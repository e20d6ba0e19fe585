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

#ifndef UAVPLAN_PLANNER_HPP_
#define UAVPLAN_PLANNER_HPP_

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "uavplan/packing.hpp"
#include "uavplan/solver.hpp"

// End-to-end deployment planning: scale a packing layout to the target
// area, cap the per-station radius by the altitude ceiling, solve the
// minimum symmetric transmit power against the worst-case cell-edge user,
// and report coverage and lifetime. Sweep drivers reproduce the planning
// curves over station count and area radius.

namespace uavplan {

// Caps and the coverage requirement a deployment must honor.
struct PlanConstraints {
  double coverage_eps = 0.8;
  std::optional<double> max_altitude_m;
  std::optional<double> max_tx_power_dbm;

  // Throws std::domain_error when a present cap is not positive or the
  // coverage requirement leaves (0, 1).
  void validate() const;
};

// A complete symmetric deployment of uav_count stations.
struct DeploymentPlan {
  int uav_count;
  double area_radius_m;
  std::vector<Eigen::Vector3d> positions_m;  // (x, y, altitude), common z
  double per_uav_radius_m;
  double altitude_m;
  double tx_power_dbm;     // minimum power meeting coverage_eps at the edge
  double total_coverage;   // covered fraction of the area
  double lifetime;         // vs the single-station plan, same constraints
};

// Plan uav_count stations over a disk of area_radius_m. The per-station
// radius comes from the packing layout, shrunk when the altitude cap
// binds (all stations shrink together; the layout centers stay put). The
// power solve places the worst-case user at the serving cell edge toward
// the nearest station. radio_template.tx_power_dbm is ignored; the solved
// power replaces it. Throws InfeasibleError when the coverage requirement
// cannot be met under the caps, UnsupportedLayoutError for counts
// without a stored layout.
DeploymentPlan plan(double area_radius_m, int uav_count,
                    const EnvironmentParams& env,
                    const RadioConfig& radio_template,
                    const PlanConstraints& constraints,
                    const SolverOptions& options = {});

// Smallest station count in 1..10 whose plan covers at least
// coverage_threshold of the area; nullopt when none does.
std::optional<int> min_uav_count(double area_radius_m,
                                 double coverage_threshold,
                                 const EnvironmentParams& env,
                                 const RadioConfig& radio_template,
                                 const PlanConstraints& constraints,
                                 const SolverOptions& options = {});

// One sweep row per station count; a row that fails to plan carries the
// failure text instead of aborting the sweep.
struct MSweepRow {
  int uav_count;
  double total_coverage;
  double lifetime;
  double altitude_m;
  double tx_power_dbm;
  std::string error;  // empty on success; numeric fields are NaN otherwise
};

std::vector<MSweepRow> sweep_vs_m(double area_radius_m, int m_from, int m_to,
                                  const EnvironmentParams& env,
                                  const RadioConfig& radio_template,
                                  const PlanConstraints& constraints,
                                  const SolverOptions& options = {});

// One row per area radius: the minimum station count, empty when even ten
// stations cannot reach the threshold.
struct RcSweepRow {
  double area_radius_m;
  std::optional<int> min_uavs;
};

std::vector<RcSweepRow> sweep_vs_rc(const std::vector<double>& area_radii_m,
                                    double coverage_threshold,
                                    const EnvironmentParams& env,
                                    const RadioConfig& radio_template,
                                    const PlanConstraints& constraints,
                                    const SolverOptions& options = {});

}  // namespace uavplan

#endif  // UAVPLAN_PLANNER_HPP_
