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

#ifndef UAVPLAN_PACKING_HPP_
#define UAVPLAN_PACKING_HPP_

#include <Eigen/Core>
#include <string>
#include <vector>

// Optimal packings of M equal circles inside the unit circle, M = 1..10,
// plus the hexagonal-density upper bound on the packed radius and the
// altitude relations tying a coverage radius to the antenna beamwidth.

namespace uavplan {

// One packing, normalized to an enclosing circle of radius 1.
struct PackingLayout {
  int count;
  double radius_norm;  // radius of each packed circle
  std::vector<Eigen::Vector2d> centers_norm;
  double total_coverage;  // count * radius_norm^2
};

// Stored optimal layout for 1 <= count <= 10; larger counts have no
// closed-form optimum and are rejected with UnsupportedLayoutError.
// Every stored layout passes verify_layout.
PackingLayout layout(int count);

// Geometric checker: one message per violated constraint (pairwise center
// distance >= 2*radius - tol, |center| + radius <= 1 + tol), empty when
// the layout is valid.
std::vector<std::string> verify_layout(const PackingLayout& layout,
                                       double tol = 1e-9);

// Smallest pairwise center distance; requires count >= 2.
double min_center_spacing(const PackingLayout& layout);

// Largest q in (0, 2] satisfying the hexagonal-density packing bound
//   pi/asin(q/2) * (q*sqrt(3) + sqrt(4 - q^2))/q + sqrt(12)*(1 - M) >= 0,
// solved by bisection on the monotone-decreasing left-hand side to 1e-9.
// The implied per-circle radius bound is q/(2+q); it is tight for M = 2
// and M = 3. M = 1 is rejected (the bound degenerates there).
double qm_solve(int count);

// Altitude ceiling q_m * R_c / ((2 + q_m) * tan(theta_B/2)) above which
// count stations cannot pack their footprints into the area.
double altitude_upper_bound_m(int count, double area_radius_m,
                              double beamwidth_deg);

// Altitude that places the beam-footprint edge exactly at radius_m:
// radius_m / tan(theta_B/2).
double altitude_for_radius_m(double radius_m, double beamwidth_deg);

}  // namespace uavplan

#endif  // UAVPLAN_PACKING_HPP_
