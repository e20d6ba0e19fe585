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

#include "uavplan/packing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

namespace uavplan {

namespace {

// Ring of `count` circle centers at `distance` from the origin, first
// center at angle `start_deg`.
void append_ring(std::vector<Eigen::Vector2d>* centers, int count,
                 double distance, double start_deg) {
  for (int i = 0; i < count; ++i) {
    const double a = deg_to_rad(start_deg + 360.0 * i / count);
    centers->emplace_back(distance * std::cos(a), distance * std::sin(a));
  }
}

PackingLayout make_layout(int count, double radius,
                          std::vector<Eigen::Vector2d> centers) {
  return {count, radius, std::move(centers), count * radius * radius};
}

// Largest radius of `count` circles on a single ring tangent to the unit
// boundary: sin(pi/count) / (1 + sin(pi/count)).
double ring_radius(int count) {
  const double s = std::sin(kPi / count);
  return s / (1.0 + s);
}

}  // namespace

PackingLayout layout(int count) {
  std::vector<Eigen::Vector2d> centers;
  switch (count) {
    case 1:
      centers.emplace_back(0.0, 0.0);
      return make_layout(1, 1.0, std::move(centers));
    case 2: {
      const double rho = 0.5;
      centers.emplace_back(-rho, 0.0);
      centers.emplace_back(rho, 0.0);
      return make_layout(2, rho, std::move(centers));
    }
    case 3: {
      const double rho = 2.0 * std::sqrt(3.0) - 3.0;
      append_ring(&centers, 3, 1.0 - rho, 90.0);
      return make_layout(3, rho, std::move(centers));
    }
    case 4: {
      const double rho = std::sqrt(2.0) - 1.0;
      append_ring(&centers, 4, 1.0 - rho, 45.0);
      return make_layout(4, rho, std::move(centers));
    }
    case 5: {
      const double rho = ring_radius(5);
      append_ring(&centers, 5, 1.0 - rho, 90.0);
      return make_layout(5, rho, std::move(centers));
    }
    case 6: {
      // Hexagonal ring; each circle touches the boundary and both
      // neighbours (1 - rho and 2*rho coincide at rho = 1/3).
      const double rho = 1.0 / 3.0;
      append_ring(&centers, 6, 1.0 - rho, 90.0);
      return make_layout(6, rho, std::move(centers));
    }
    case 7: {
      // Same hexagon plus a circle in the central void.
      const double rho = 1.0 / 3.0;
      centers.emplace_back(0.0, 0.0);
      append_ring(&centers, 6, 1.0 - rho, 90.0);
      return make_layout(7, rho, std::move(centers));
    }
    case 8: {
      const double rho = ring_radius(7);
      centers.emplace_back(0.0, 0.0);
      append_ring(&centers, 7, 1.0 - rho, 90.0);
      return make_layout(8, rho, std::move(centers));
    }
    case 9: {
      const double rho = ring_radius(8);
      centers.emplace_back(0.0, 0.0);
      append_ring(&centers, 8, 1.0 - rho, 90.0);
      return make_layout(9, rho, std::move(centers));
    }
    case 10: {
      // No closed form is known for ten circles; these coordinates were
      // solved numerically from the tangency graph of the optimal packing
      // (twelve tangent pairs, eight rim circles, mirror symmetry) and are
      // pinned by verify_layout like every other row.
      const double rho = 0.26225892419016583;
      centers = {
          {0.41505561790012485, -0.6099104270190804},
          {-0.41505561790012485, -0.6099104270190804},
          {0.0, -0.28921149138149804},
          {0.7154606862418066, -0.17993860447234403},
          {-0.7154606862418066, -0.17993860447234403},
          {0.0, 0.23530635699883368},
          {0.6542074954905439, 0.34099039250548024},
          {-0.6542074954905439, 0.34099039250548024},
          {0.26225892419016583, 0.6895521384345554},
          {-0.26225892419016583, 0.6895521384345554},
      };
      return make_layout(10, rho, std::move(centers));
    }
    default:
      throw UnsupportedLayoutError("no stored packing for " +
                                   std::to_string(count) +
                                   " circles (supported: 1..10)");
  }
}

std::vector<std::string> verify_layout(const PackingLayout& layout,
                                       double tol) {
  std::vector<std::string> violations;
  const int n = static_cast<int>(layout.centers_norm.size());
  if (n != layout.count) {
    violations.push_back("center count " + std::to_string(n) +
                         " does not match declared count " +
                         std::to_string(layout.count));
  }
  for (int i = 0; i < n; ++i) {
    const double reach = layout.centers_norm[i].norm() + layout.radius_norm;
    if (reach > 1.0 + tol) {
      violations.push_back("containment: circle " + std::to_string(i) +
                           " reaches " + std::to_string(reach) +
                           " outside the unit circle");
    }
    for (int j = i + 1; j < n; ++j) {
      const double spacing =
          (layout.centers_norm[i] - layout.centers_norm[j]).norm();
      if (spacing < 2.0 * layout.radius_norm - tol) {
        violations.push_back(
            "overlap: circles " + std::to_string(i) + " and " +
            std::to_string(j) + " are " + std::to_string(spacing) +
            " apart, need " + std::to_string(2.0 * layout.radius_norm));
      }
    }
  }
  return violations;
}

double min_center_spacing(const PackingLayout& layout) {
  const int n = static_cast<int>(layout.centers_norm.size());
  if (n < 2) {
    throw std::domain_error("min_center_spacing needs at least two circles");
  }
  double spacing = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      spacing = std::min(
          spacing, (layout.centers_norm[i] - layout.centers_norm[j]).norm());
    }
  }
  return spacing;
}

namespace {

// Left-hand side of the hexagonal-density bound; strictly decreasing in q
// on (0, 2].
double density_bound_lhs(double q, int count) {
  return kPi / std::asin(q / 2.0) * (q * std::sqrt(3.0) + std::sqrt(4.0 - q * q)) / q +
         std::sqrt(12.0) * (1.0 - count);
}

}  // namespace

double qm_solve(int count) {
  if (count == 1) {
    throw UnsupportedLayoutError(
        "the packing density bound degenerates for a single circle");
  }
  if (count < 1) {
    throw std::domain_error("count must be >= 1");
  }
  if (density_bound_lhs(2.0, count) >= 0.0) return 2.0;
  double lo = 1e-9;  // LHS diverges to +infinity as q -> 0
  double hi = 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (density_bound_lhs(mid, count) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {

double half_beam_tangent(double beamwidth_deg) {
  if (!(beamwidth_deg > 0.0) || !(beamwidth_deg < 180.0)) {
    throw std::domain_error("beamwidth_deg must lie in (0, 180)");
  }
  return std::tan(deg_to_rad(beamwidth_deg) / 2.0);
}

}  // namespace

double altitude_upper_bound_m(int count, double area_radius_m,
                              double beamwidth_deg) {
  if (!(area_radius_m > 0.0)) {
    throw std::domain_error("area_radius_m must be positive");
  }
  const double q = qm_solve(count);
  return q * area_radius_m / ((2.0 + q) * half_beam_tangent(beamwidth_deg));
}

double altitude_for_radius_m(double radius_m, double beamwidth_deg) {
  if (!(radius_m > 0.0)) {
    throw std::domain_error("radius_m must be positive");
  }
  return radius_m / half_beam_tangent(beamwidth_deg);
}

}  // namespace uavplan
