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
#include <stdexcept>

#include "uavplan/channel.hpp"
#include "uavplan/units.hpp"

using namespace uavplan;

TEST_CASE("main lobe gain follows the 29000/theta^2 aperture rule") {
  // 29000 / 80^2 and 29000 / 40^2 are exact in binary-friendly arithmetic.
  CHECK(main_lobe_gain(80.0) == doctest::Approx(4.53125).epsilon(1e-15));
  CHECK(main_lobe_gain(40.0) == doctest::Approx(18.125).epsilon(1e-15));
  CHECK(main_lobe_gain_db(80.0) ==
        doctest::Approx(6.562180239150689).epsilon(1e-13));
  // Unit gain at beamwidth sqrt(29000) deg (hypothetical, out of the
  // physical range, so compute through the formula only).
  const double unity = 29000.0 / (170.29386365926402 * 170.29386365926402);
  CHECK(unity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(main_lobe_gain(0.0), std::domain_error);
  CHECK_THROWS_AS(main_lobe_gain(-10.0), std::domain_error);
}

TEST_CASE("antenna gain switches to the side lobe outside the cone") {
  RadioConfig radio;
  radio.carrier_hz = 2.0e9;
  radio.tx_power_dbm = 35.0;
  radio.beamwidth_deg = 80.0;
  radio.sidelobe_gain_lin = 0.1;
  radio.sinr_threshold_lin = 5.0;
  radio.noise_dbm = -120.0;
  radio.coverage_eps = 0.8;

  const double half = deg_to_rad(40.0);
  CHECK(antenna_gain(0.0, radio) == doctest::Approx(4.53125).epsilon(1e-15));
  // The cone boundary itself still sees the main lobe.
  CHECK(antenna_gain(half, radio) == doctest::Approx(4.53125).epsilon(1e-15));
  CHECK(antenna_gain(-half, radio) == doctest::Approx(4.53125).epsilon(1e-15));
  CHECK(antenna_gain(half * (1.0 + 1e-9), radio) == doctest::Approx(0.1));
  CHECK(antenna_gain(deg_to_rad(90.0), radio) == doctest::Approx(0.1));
  // Symmetric in the sector angle.
  for (double a : {0.1, 0.5, 1.0, 1.5}) {
    CHECK(antenna_gain(a, radio) == antenna_gain(-a, radio));
  }
}

TEST_CASE("path loss matches the log-distance form") {
  // Reference distance where the spreading term is exactly unity.
  const double d0 = kSpeedOfLightMps / (4.0 * kPi * 2.0e9);
  CHECK(d0 == doctest::Approx(0.011928362898092355).epsilon(1e-15));
  CHECK(path_loss_db(d0, 2.0e9, 2.5) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(path_loss_db(1000.0, 2.0e9, 2.0) ==
        doctest::Approx(98.468383135163).epsilon(1e-12));
  CHECK(path_loss_db(1000.0, 2.0e9, 2.5) ==
        doctest::Approx(123.08547891895374).epsilon(1e-12));

  // Scaling: the dB loss is linear in the exponent.
  const double l2 = path_loss_db(500.0, 2.0e9, 2.0);
  const double l4 = path_loss_db(500.0, 2.0e9, 4.0);
  CHECK(l4 == doctest::Approx(2.0 * l2).epsilon(1e-13));

  // Doubling the distance adds 10 n log10(2) dB.
  const double step = path_loss_db(2000.0, 2.0e9, 2.5) -
                      path_loss_db(1000.0, 2.0e9, 2.5);
  CHECK(step == doctest::Approx(25.0 * std::log10(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(path_loss_db(0.0, 2.0e9, 2.5), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(-5.0, 2.0e9, 2.5), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(100.0, 0.0, 2.5), std::domain_error);
}

TEST_CASE("line of sight probability in the urban profile") {
  const EnvironmentParams env = EnvironmentParams::urban();

  // Below and at the 15 degree pivot the probability is zero.
  CHECK(los_probability(deg_to_rad(10.0), env) == 0.0);
  CHECK(los_probability(deg_to_rad(15.0), env) == 0.0);

  CHECK(los_probability(deg_to_rad(80.0), env) ==
        doctest::Approx(0.9496678148854603).epsilon(1e-14));
  CHECK(los_probability(deg_to_rad(90.0), env) ==
        doctest::Approx(0.9647348991637159).epsilon(1e-14));

  // Complement is exact.
  const double p = los_probability(deg_to_rad(47.0), env);
  CHECK(nlos_probability(deg_to_rad(47.0), env) == 1.0 - p);

  // Non-decreasing in elevation.
  double prev = 0.0;
  for (int deg = 16; deg <= 90; ++deg) {
    const double cur = los_probability(deg_to_rad(double(deg)), env);
    CHECK(cur >= prev);
    CHECK(cur <= 1.0);
    prev = cur;
  }

  // Saturation: a steep growth profile clamps at one.
  EnvironmentParams hot = env;
  hot.alpha = 2.0;
  CHECK(los_probability(deg_to_rad(89.0), hot) == 1.0);
}

TEST_CASE("shadowing spread decays exponentially with elevation") {
  const EnvironmentParams env = EnvironmentParams::urban();

  CHECK(shadow_sigma_db(deg_to_rad(80.0), env, LinkState::kLos) ==
        doctest::Approx(0.19029948805394814).epsilon(1e-14));

  // Near-zero elevation recovers the scale coefficients.
  CHECK(shadow_sigma_db(1e-15, env, LinkState::kLos) ==
        doctest::Approx(10.39).epsilon(1e-12));
  CHECK(shadow_sigma_db(1e-15, env, LinkState::kNlos) ==
        doctest::Approx(29.06).epsilon(1e-12));

  double prev_los = 1e9;
  double prev_nlos = 1e9;
  for (int deg = 1; deg <= 90; ++deg) {
    const double s_los = shadow_sigma_db(deg_to_rad(double(deg)), env,
                                         LinkState::kLos);
    const double s_nlos = shadow_sigma_db(deg_to_rad(double(deg)), env,
                                          LinkState::kNlos);
    CHECK(s_los > 0.0);
    CHECK(s_nlos > s_los);
    CHECK(s_los < prev_los);
    CHECK(s_nlos < prev_nlos);
    prev_los = s_los;
    prev_nlos = s_nlos;
  }
}

TEST_CASE("mean excess loss per link state") {
  const EnvironmentParams env = EnvironmentParams::urban();
  CHECK(mean_excess_loss_db(env, LinkState::kLos) == 1.0);
  CHECK(mean_excess_loss_db(env, LinkState::kNlos) == 20.0);
}

TEST_CASE("link geometry derives distance and elevation") {
  LinkGeometry g(300.0, 400.0);
  CHECK(g.horiz_range_m() == 300.0);
  CHECK(g.altitude_m() == 400.0);
  CHECK(g.distance_m() == doctest::Approx(500.0).epsilon(1e-15));
  CHECK(g.elevation_rad() ==
        doctest::Approx(std::asin(400.0 / 500.0)).epsilon(1e-15));

  // Directly underneath the antenna the elevation is 90 degrees.
  LinkGeometry below(0.0, 1200.0);
  CHECK(below.elevation_rad() == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(below.distance_m() == 1200.0);

  CHECK_THROWS_AS(LinkGeometry(-1.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(LinkGeometry(100.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(LinkGeometry(100.0, -5.0), std::domain_error);
}

TEST_CASE("beam footprint radius") {
  CHECK(beam_footprint_radius_m(5000.0, 80.0) ==
        doctest::Approx(4195.498155886399).epsilon(1e-12));
  CHECK(beam_footprint_radius_m(2500.0, 90.0) ==
        doctest::Approx(2500.0).epsilon(1e-15));
  CHECK_THROWS_AS(beam_footprint_radius_m(0.0, 80.0), std::domain_error);
  CHECK_THROWS_AS(beam_footprint_radius_m(1000.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(beam_footprint_radius_m(1000.0, 180.0), std::domain_error);
}

TEST_CASE("parameter validation rejects broken inputs") {
  EnvironmentParams env = EnvironmentParams::urban();
  CHECK_NOTHROW(env.validate());

  EnvironmentParams bad = env;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = env;
  bad.gamma = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = env;
  bad.mu_nlos_db = 0.5;  // below the line of sight mean
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = env;
  bad.path_loss_exp = 1.9;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  // Degenerate (zero) shadowing scales are allowed: they model the
  // no-fading limit used by the deterministic tests.
  bad = env;
  bad.k1 = 0.0;
  bad.g1 = 0.0;
  CHECK_NOTHROW(bad.validate());

  RadioConfig radio;
  radio.carrier_hz = 2.0e9;
  radio.tx_power_dbm = 35.0;
  radio.beamwidth_deg = 80.0;
  radio.sidelobe_gain_lin = 0.1;
  radio.sinr_threshold_lin = 5.0;
  radio.noise_dbm = -120.0;
  radio.coverage_eps = 0.8;
  CHECK_NOTHROW(radio.validate());

  RadioConfig rbad = radio;
  rbad.beamwidth_deg = 0.0;
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
  rbad = radio;
  rbad.beamwidth_deg = 180.0;
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
  rbad = radio;
  rbad.sidelobe_gain_lin = main_lobe_gain(radio.beamwidth_deg);
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
  rbad = radio;
  rbad.coverage_eps = 0.0;
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
  rbad = radio;
  rbad.coverage_eps = 1.0;
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
  rbad = radio;
  rbad.sinr_threshold_lin = 0.0;
  CHECK_THROWS_AS(rbad.validate(), std::domain_error);
}
