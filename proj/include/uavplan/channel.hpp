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

#ifndef UAVPLAN_CHANNEL_HPP_
#define UAVPLAN_CHANNEL_HPP_

// Air-to-ground channel primitives: directional antenna gain, distance
// path loss, elevation-dependent line-of-sight probability, and the
// shadow-fading statistics of the LoS/NLoS states.

namespace uavplan {

// Propagation statistics of one environment class (urban, suburban, ...).
// The shadowing decay constants k2/g2 are calibrated for elevation angles
// expressed in degrees; conversion happens inside shadow_sigma_db.
struct EnvironmentParams {
  double alpha;          // LoS probability coefficient
  double gamma;          // LoS probability exponent
  double k1;             // LoS shadowing scale (dB)
  double k2;             // LoS shadowing decay (1/degree)
  double g1;             // NLoS shadowing scale (dB)
  double g2;             // NLoS shadowing decay (1/degree)
  double mu_los_db;      // mean LoS excess loss (dB)
  double mu_nlos_db;     // mean NLoS excess loss (dB)
  double path_loss_exp;  // distance power-law exponent n

  // Throws std::domain_error when a field is out of range. k1/g1 may be
  // zero: a zero-shadowing environment degenerates to a deterministic
  // channel, which the simulator uses as a fixture.
  void validate() const;

  // Dense-urban preset at 2 GHz-class carriers.
  static EnvironmentParams urban();
};

// Transmitter/receiver parameters shared by every link in a deployment.
struct RadioConfig {
  double carrier_hz;          // f_c
  double tx_power_dbm;        // P_t
  double beamwidth_deg;       // theta_B, full half-power beamwidth
  double sidelobe_gain_lin;   // flat linear gain outside the main lobe
  double sinr_threshold_lin;  // beta
  double noise_dbm;           // N
  double coverage_eps;        // required coverage probability, in (0,1)

  // Throws std::domain_error when a field is out of range.
  void validate() const;
};

// Geometry of one UAV-to-user link. distance_m and elevation_rad are
// derived in the constructor and kept consistent by construction.
class LinkGeometry {
 public:
  // horiz_range_m >= 0 (ground distance from the UAV nadir), altitude_m > 0.
  LinkGeometry(double horiz_range_m, double altitude_m);

  double horiz_range_m() const { return horiz_range_m_; }
  double altitude_m() const { return altitude_m_; }
  // Slant range sqrt(r^2 + h^2).
  double distance_m() const { return distance_m_; }
  // asin(h / d), in (0, pi/2]; pi/2 directly under the UAV.
  double elevation_rad() const { return elevation_rad_; }

 private:
  double horiz_range_m_;
  double altitude_m_;
  double distance_m_;
  double elevation_rad_;
};

enum class LinkState { kLos, kNlos };

// Boresight gain 29000 / theta_B^2 of the directional antenna, linear.
// Valid for 0 < beamwidth_deg < 180; throws std::domain_error otherwise.
double main_lobe_gain(double beamwidth_deg);
double main_lobe_gain_db(double beamwidth_deg);

// Two-level antenna pattern: main-lobe gain for |phi| <= theta_B/2
// (boundary included), the configured side-lobe floor outside.
// sector_angle_rad must lie in [-pi, pi].
double antenna_gain(double sector_angle_rad, const RadioConfig& radio);

// 10 * n * log10(4 pi f_c d / c) in dB. distance_m and carrier_hz > 0.
double path_loss_db(double distance_m, double carrier_hz,
                    double path_loss_exp);

// alpha * (theta_deg - 15)^gamma clamped to [0, 1]; zero at or below 15
// degrees of elevation where the power-law base is non-positive.
double los_probability(double elevation_rad, const EnvironmentParams& env);
inline double nlos_probability(double elevation_rad,
                               const EnvironmentParams& env) {
  return 1.0 - los_probability(elevation_rad, env);
}

// Shadow-fading standard deviation k1*exp(-k2*theta_deg) for the LoS state,
// g1*exp(-g2*theta_deg) for NLoS. Strictly decreasing in elevation for
// positive decay constants.
double shadow_sigma_db(double elevation_rad, const EnvironmentParams& env,
                       LinkState state);

// Mean excess loss of the given state (mu_los_db or mu_nlos_db).
double mean_excess_loss_db(const EnvironmentParams& env, LinkState state);

// Ground radius h * tan(theta_B/2) illuminated by the main lobe.
double beam_footprint_radius_m(double altitude_m, double beamwidth_deg);

}  // namespace uavplan

#endif  // UAVPLAN_CHANNEL_HPP_
