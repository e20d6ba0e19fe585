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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavplan/coverage.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

using namespace uavplan;

namespace {

RadioConfig make_radio() {
  RadioConfig radio;
  radio.carrier_hz = 2.0e9;
  radio.tx_power_dbm = 35.0;
  radio.beamwidth_deg = 80.0;
  radio.sidelobe_gain_lin = 0.1;
  radio.sinr_threshold_lin = 5.0;
  radio.noise_dbm = -120.0;
  radio.coverage_eps = 0.8;
  return radio;
}

}  // namespace

TEST_CASE("q function hits pinned reference points") {
  CHECK(q_function(0.0) == 0.5);
  CHECK(q_function(1.2816) ==
        doctest::Approx(0.09999150009767517).epsilon(1e-13));
  CHECK(q_function(-8.0) >= 1.0 - 1e-14);
  CHECK(q_function(8.0) <= 1e-14);
  CHECK(q_function(8.0) > 0.0);
}

TEST_CASE("q function symmetry and limits") {
  for (double x = -8.0; x <= 8.0; x += 0.173) {
    const double sum = q_function(x) + q_function(-x);
    CHECK(std::fabs(sum - 1.0) <= 1e-14);
  }
  CHECK(q_function(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(q_function(-std::numeric_limits<double>::infinity()) == 1.0);
  CHECK_THROWS_AS(q_function(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  // Deep tail stays finite and positive well past double's comfort zone.
  CHECK(q_function(30.0) > 0.0);
  CHECK(q_function(30.0) < 1e-190);
}

TEST_CASE("q function agrees with the library erfc route") {
  // The production path uses a rational approximation; std::erfc is the
  // independent second route. Dense grid over the working range.
  const double inv_sqrt2 = 0.70710678118654752440;
  for (double x = -8.0; x <= 8.0; x += 1.0 / 64.0) {
    const double mine = q_function(x);
    const double ref = 0.5 * std::erfc(x * inv_sqrt2);
    CHECK(std::fabs(mine - ref) <= 1e-9);
    if (ref > 1e-300) {
      CHECK(std::fabs(mine - ref) <= 1e-12 * ref + 1e-15);
    }
  }
}

TEST_CASE("mean interference follows the side-lobe budget") {
  const EnvironmentParams env = EnvironmentParams::urban();
  RadioConfig radio = make_radio();

  // Slant range 5000 m at altitude 2000 m.
  const double horiz = std::sqrt(5000.0 * 5000.0 - 2000.0 * 2000.0);
  LinkGeometry geom(horiz, 2000.0);
  CHECK(rad_to_deg(geom.elevation_rad()) ==
        doctest::Approx(23.578178478201835).epsilon(1e-12));
  InterfererSpec spec{geom, std::atan2(horiz, 2000.0)};

  const double ibar = mean_interference_mw(spec, env, radio);
  CHECK(std::fabs(ibar - 1.6849024469053877e-12) <=
        1e-12 * 1.6849024469053877e-12);

  // No side lobe, no interference.
  RadioConfig quiet = radio;
  quiet.sidelobe_gain_lin = 0.0;
  CHECK(mean_interference_mw(spec, env, quiet) == 0.0);

  // Linear in the transmit power (3 dB = factor 2 within rounding).
  RadioConfig loud = radio;
  loud.tx_power_dbm = radio.tx_power_dbm + 10.0;
  CHECK(mean_interference_mw(spec, env, loud) ==
        doctest::Approx(10.0 * ibar).epsilon(1e-12));

  // With no excess losses the LoS/NLoS mix collapses to 1.
  EnvironmentParams flat = env;
  flat.mu_los_db = 0.0;
  flat.mu_nlos_db = 0.0;
  const double collapsed = mean_interference_mw(spec, flat, radio);
  const double expect = dbm_to_mw(radio.tx_power_dbm) * 0.1 *
                        std::pow(4.0 * kPi * radio.carrier_hz *
                                     geom.distance_m() / kSpeedOfLightMps,
                                 -env.path_loss_exp);
  CHECK(collapsed == doctest::Approx(expect).epsilon(1e-12));

  // Farther interferer, weaker interference.
  LinkGeometry far(2.0 * horiz, 2000.0);
  InterfererSpec far_spec{far, std::atan2(2.0 * horiz, 2000.0)};
  CHECK(mean_interference_mw(far_spec, env, radio) < ibar);
}

TEST_CASE("detection threshold") {
  RadioConfig radio = make_radio();

  CHECK(p_min_dbm(radio, 0.0) ==
        doctest::Approx(-113.01029995663981).epsilon(1e-13));

  // Interference equal to the noise floor costs exactly 3.01 dB:
  // 10*log10(beta*2*N_lin) = noise + 10*log10(2*beta).
  const double n_lin = dbm_to_mw(radio.noise_dbm);
  CHECK(p_min_dbm(radio, n_lin) ==
        doctest::Approx(-110.0).epsilon(1e-13));

  // Unit threshold reduces to the noise floor.
  RadioConfig unit = radio;
  unit.sinr_threshold_lin = 1.0;
  CHECK(p_min_dbm(unit, 0.0) == doctest::Approx(-120.0).epsilon(1e-13));

  // Strictly increasing in the interference power.
  CHECK(p_min_dbm(radio, 2.0 * n_lin) > p_min_dbm(radio, n_lin));
  CHECK(p_min_dbm(radio, n_lin) > p_min_dbm(radio, 0.0));

  CHECK_THROWS_AS(p_min_dbm(radio, -1e-15), std::domain_error);
}

TEST_CASE("coverage probability reference point") {
  CoverageQuery query{LinkGeometry(1500.0, 2000.0), std::nullopt,
                      EnvironmentParams::urban(), make_radio()};
  CHECK(coverage_probability(query) ==
        doctest::Approx(0.9585143712104209).epsilon(1e-13));
}

TEST_CASE("coverage probability equals the assembled mixture") {
  const EnvironmentParams env = EnvironmentParams::urban();
  const RadioConfig radio = make_radio();
  LinkGeometry geom(900.0, 1400.0);
  CoverageQuery query{geom, std::nullopt, env, radio};

  const double theta = geom.elevation_rad();
  const double p_los = los_probability(theta, env);
  const double gain_db = main_lobe_gain_db(radio.beamwidth_deg);
  const double loss_db =
      path_loss_db(geom.distance_m(), radio.carrier_hz, env.path_loss_exp);
  const double pmin = p_min_dbm(radio, 0.0);
  const double base = pmin + loss_db - radio.tx_power_dbm - gain_db;
  const double t_los =
      q_function((base + env.mu_los_db) /
                 shadow_sigma_db(theta, env, LinkState::kLos));
  const double t_nlos =
      q_function((base + env.mu_nlos_db) /
                 shadow_sigma_db(theta, env, LinkState::kNlos));
  const double expect = p_los * t_los + (1.0 - p_los) * t_nlos;

  CHECK(coverage_probability(query) ==
        doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("zero shadowing takes the deterministic limit") {
  EnvironmentParams env = EnvironmentParams::urban();
  env.k1 = 0.0;
  env.g1 = 0.0;
  RadioConfig radio = make_radio();

  // Comfortable link: both states succeed.
  CoverageQuery easy{LinkGeometry(100.0, 500.0), std::nullopt, env, radio};
  CHECK(coverage_probability(easy) == 1.0);

  // Hopeless link: drop the power until both states fail.
  RadioConfig mute = radio;
  mute.tx_power_dbm = -80.0;
  CoverageQuery dead{LinkGeometry(100.0, 500.0), std::nullopt, env, mute};
  CHECK(coverage_probability(dead) == 0.0);

  // Between the two excess-loss levels only the LoS state survives, so the
  // mixture is exactly the LoS probability.
  RadioConfig between = radio;
  LinkGeometry geom(1200.0, 2000.0);
  const double loss_db =
      path_loss_db(geom.distance_m(), radio.carrier_hz, env.path_loss_exp);
  const double pmin = p_min_dbm(radio, 0.0);
  const double gain_db = main_lobe_gain_db(radio.beamwidth_deg);
  // Choose the power so the LoS margin is +5 dB; NLoS is then 14 dB short.
  between.tx_power_dbm = pmin + loss_db - gain_db + env.mu_los_db + 5.0;
  CoverageQuery split{geom, std::nullopt, env, between};
  CHECK(coverage_probability(split) ==
        los_probability(geom.elevation_rad(), env));
}

TEST_CASE("coverage probability monotonicity") {
  const EnvironmentParams env = EnvironmentParams::urban();
  RadioConfig radio = make_radio();
  LinkGeometry geom(1500.0, 2000.0);

  double prev = 0.0;
  for (double p = 0.0; p <= 50.0; p += 5.0) {
    RadioConfig r = radio;
    r.tx_power_dbm = p;
    const double cur = coverage_probability({geom, std::nullopt, env, r});
    CHECK(cur >= prev);
    prev = cur;
  }

  // A tougher detection threshold cannot help.
  RadioConfig hard = radio;
  hard.sinr_threshold_lin = 50.0;
  CHECK(coverage_probability({geom, std::nullopt, env, hard}) <=
        coverage_probability({geom, std::nullopt, env, radio}));

  // Interference cannot help either.
  const double horiz = std::sqrt(5000.0 * 5000.0 - 2000.0 * 2000.0);
  InterfererSpec spec{LinkGeometry(horiz, 2000.0),
                      std::atan2(horiz, 2000.0)};
  CHECK(coverage_probability({geom, spec, env, radio}) <=
        coverage_probability({geom, std::nullopt, env, radio}));
}

TEST_CASE("users outside the beam footprint are rejected") {
  const EnvironmentParams env = EnvironmentParams::urban();
  const RadioConfig radio = make_radio();
  // Footprint at h=2000, 80 deg beam: 2000*tan(40 deg) ~= 1678.2 m.
  CHECK_THROWS_AS(
      coverage_probability({LinkGeometry(1700.0, 2000.0), std::nullopt, env,
                            radio}),
      BeamFootprintError);
  // The exact edge is inside the cone.
  const double edge = beam_footprint_radius_m(2000.0, radio.beamwidth_deg);
  CHECK_NOTHROW(coverage_probability(
      {LinkGeometry(edge, 2000.0), std::nullopt, env, radio}));
}
