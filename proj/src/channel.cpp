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

#include "uavplan/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "uavplan/units.hpp"

namespace uavplan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void EnvironmentParams::validate() const {
  require(finite(alpha) && alpha > 0.0, "alpha must be positive");
  require(finite(gamma) && gamma > 0.0, "gamma must be positive");
  require(finite(k1) && k1 >= 0.0, "k1 must be non-negative");
  require(finite(k2) && k2 >= 0.0, "k2 must be non-negative");
  require(finite(g1) && g1 >= 0.0, "g1 must be non-negative");
  require(finite(g2) && g2 >= 0.0, "g2 must be non-negative");
  require(finite(mu_los_db) && finite(mu_nlos_db) &&
              mu_nlos_db >= mu_los_db,
          "mu_nlos_db must be >= mu_los_db");
  require(finite(path_loss_exp) && path_loss_exp >= 2.0,
          "path_loss_exp must be >= 2");
}

EnvironmentParams EnvironmentParams::urban() {
  EnvironmentParams env;
  env.alpha = 0.6;
  env.gamma = 0.11;
  env.k1 = 10.39;
  env.k2 = 0.05;
  env.g1 = 29.06;
  env.g2 = 0.03;
  env.mu_los_db = 1.0;
  env.mu_nlos_db = 20.0;
  env.path_loss_exp = 2.5;
  return env;
}

void RadioConfig::validate() const {
  require(finite(carrier_hz) && carrier_hz > 0.0,
          "carrier_hz must be positive");
  require(finite(tx_power_dbm), "tx_power_dbm must be finite");
  require(finite(beamwidth_deg) && beamwidth_deg > 0.0 &&
              beamwidth_deg < 180.0,
          "beamwidth_deg must lie in (0, 180)");
  require(finite(sidelobe_gain_lin) && sidelobe_gain_lin >= 0.0 &&
              sidelobe_gain_lin < main_lobe_gain(beamwidth_deg),
          "sidelobe_gain_lin must lie in [0, main-lobe gain)");
  require(finite(sinr_threshold_lin) && sinr_threshold_lin > 0.0,
          "sinr_threshold_lin must be positive");
  require(finite(noise_dbm), "noise_dbm must be finite");
  require(finite(coverage_eps) && coverage_eps > 0.0 && coverage_eps < 1.0,
          "coverage_eps must lie in (0, 1)");
}

LinkGeometry::LinkGeometry(double horiz_range_m, double altitude_m)
    : horiz_range_m_(horiz_range_m), altitude_m_(altitude_m) {
  require(finite(horiz_range_m) && horiz_range_m >= 0.0,
          "horiz_range_m must be >= 0");
  require(finite(altitude_m) && altitude_m > 0.0,
          "altitude_m must be positive");
  distance_m_ = std::hypot(horiz_range_m_, altitude_m_);
  elevation_rad_ = std::asin(altitude_m_ / distance_m_);
}

double main_lobe_gain(double beamwidth_deg) {
  require(finite(beamwidth_deg) && beamwidth_deg > 0.0 &&
              beamwidth_deg < 180.0,
          "beamwidth_deg must lie in (0, 180)");
  return 29000.0 / (beamwidth_deg * beamwidth_deg);
}

double main_lobe_gain_db(double beamwidth_deg) {
  return linear_to_db(main_lobe_gain(beamwidth_deg));
}

double antenna_gain(double sector_angle_rad, const RadioConfig& radio) {
  require(finite(sector_angle_rad) && std::abs(sector_angle_rad) <= kPi,
          "sector_angle_rad must lie in [-pi, pi]");
  const double half_beam_rad = deg_to_rad(radio.beamwidth_deg) / 2.0;
  if (std::abs(sector_angle_rad) <= half_beam_rad) {
    return main_lobe_gain(radio.beamwidth_deg);
  }
  return radio.sidelobe_gain_lin;
}

double path_loss_db(double distance_m, double carrier_hz,
                    double path_loss_exp) {
  require(finite(distance_m) && distance_m > 0.0,
          "distance_m must be positive");
  require(finite(carrier_hz) && carrier_hz > 0.0,
          "carrier_hz must be positive");
  return 10.0 * path_loss_exp *
         std::log10(4.0 * kPi * carrier_hz * distance_m / kSpeedOfLightMps);
}

double los_probability(double elevation_rad, const EnvironmentParams& env) {
  require(finite(elevation_rad) && elevation_rad > 0.0 &&
              elevation_rad <= kPi / 2.0,
          "elevation_rad must lie in (0, pi/2]");
  const double base = rad_to_deg(elevation_rad) - 15.0;
  if (base <= 0.0) return 0.0;
  const double p = env.alpha * std::pow(base, env.gamma);
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

double shadow_sigma_db(double elevation_rad, const EnvironmentParams& env,
                       LinkState state) {
  require(finite(elevation_rad) && elevation_rad > 0.0 &&
              elevation_rad <= kPi / 2.0,
          "elevation_rad must lie in (0, pi/2]");
  const double theta_deg = rad_to_deg(elevation_rad);
  if (state == LinkState::kLos) {
    return env.k1 * std::exp(-env.k2 * theta_deg);
  }
  return env.g1 * std::exp(-env.g2 * theta_deg);
}

double mean_excess_loss_db(const EnvironmentParams& env, LinkState state) {
  return state == LinkState::kLos ? env.mu_los_db : env.mu_nlos_db;
}

double beam_footprint_radius_m(double altitude_m, double beamwidth_deg) {
  require(finite(altitude_m) && altitude_m > 0.0,
          "altitude_m must be positive");
  require(finite(beamwidth_deg) && beamwidth_deg > 0.0 &&
              beamwidth_deg < 180.0,
          "beamwidth_deg must lie in (0, 180)");
  return altitude_m * std::tan(deg_to_rad(beamwidth_deg) / 2.0);
}

}  // namespace uavplan
