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

#include "uavplan/coverage.hpp"

#include <cmath>
#include <stdexcept>

#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

namespace uavplan {

namespace {

// Complementary error function from Cody's rational Chebyshev
// approximations (Math. Comp. 23, 1969; netlib SPECFUN coefficient set),
// accurate to ~1e-16 relative for positive arguments. Kept independent of
// std::erfc on purpose: the test suite uses the standard-library function
// as a second route to cross-check this one.
double erfc_rational(double x) {
  static constexpr double kErfNum[5] = {
      3.16112374387056560e0, 1.13864154151050156e2, 3.77485237685302021e2,
      3.20937758913846947e3, 1.85777706184603153e-1};
  static constexpr double kErfDen[4] = {
      2.36012909523441209e1, 2.44024637934444173e2, 1.28261652607737228e3,
      2.84423683343917062e3};
  static constexpr double kMidNum[9] = {
      5.64188496988670089e-1, 8.88314979438837594e0, 6.61191906371416295e1,
      2.98635138197400131e2,  8.81952221241769090e2, 1.71204761263407058e3,
      2.05107837782607147e3,  1.23033935479799725e3, 2.15311535474403846e-8};
  static constexpr double kMidDen[8] = {
      1.57449261107098347e1, 1.17693950891312499e2, 5.37181101862009858e2,
      1.62138957456669019e3, 3.29079923573345963e3, 4.36261909014324716e3,
      3.43936767414372164e3, 1.23033935480374942e3};
  static constexpr double kFarNum[6] = {
      3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
      1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
  static constexpr double kFarDen[5] = {
      2.56852019228982242e0, 1.87295284992346047e0, 5.27905102951428412e-1,
      6.05183413124413191e-2, 2.33520497626869185e-3};
  static constexpr double kInvSqrtPi = 5.6418958354775628695e-1;
  // erfc underflows to zero above this argument in double precision.
  static constexpr double kArgBig = 26.543;

  const double y = std::abs(x);
  double result;
  if (y <= 0.46875) {
    // erfc = 1 - erf; the erf rational form keeps full accuracy near zero.
    const double ysq = (y > 1.11e-16) ? y * y : 0.0;
    double num = kErfNum[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
      num = (num + kErfNum[i]) * ysq;
      den = (den + kErfDen[i]) * ysq;
    }
    return 1.0 - x * (num + kErfNum[3]) / (den + kErfDen[3]);
  }
  if (y <= 4.0) {
    double num = kMidNum[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kMidNum[i]) * y;
      den = (den + kMidDen[i]) * y;
    }
    result = (num + kMidNum[7]) / (den + kMidDen[7]);
  } else if (y < kArgBig) {
    const double ysq = 1.0 / (y * y);
    double num = kFarNum[5] * ysq;
    double den = ysq;
    for (int i = 0; i < 4; ++i) {
      num = (num + kFarNum[i]) * ysq;
      den = (den + kFarDen[i]) * ysq;
    }
    result = ysq * (num + kFarNum[4]) / (den + kFarDen[4]);
    result = (kInvSqrtPi - result) / y;
  } else {
    result = 0.0;
  }
  if (result != 0.0) {
    // exp(-y^2) split into an exactly representable part and a small
    // correction; cancellation in the exponent stays harmless this way.
    const double ytrunc = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ytrunc) * (y + ytrunc);
    result *= std::exp(-ytrunc * ytrunc) * std::exp(-del);
  }
  return (x < 0.0) ? 2.0 - result : result;
}

}  // namespace

double q_function(double x) {
  if (std::isnan(x)) throw std::domain_error("q_function: NaN argument");
  if (std::isinf(x)) return x > 0.0 ? 0.0 : 1.0;
  return 0.5 * erfc_rational(x * 0.7071067811865475244);  // x / sqrt(2)
}

double mean_interference_mw(const InterfererSpec& interferer,
                            const EnvironmentParams& env,
                            const RadioConfig& radio) {
  const double p_los = los_probability(interferer.geometry.elevation_rad(),
                                       env);
  const double mix = db_to_linear(-env.mu_los_db) * p_los +
                     db_to_linear(-env.mu_nlos_db) * (1.0 - p_los);
  const double spreading =
      std::pow(4.0 * kPi * radio.carrier_hz * interferer.geometry.distance_m() /
                   kSpeedOfLightMps,
               -env.path_loss_exp);
  return dbm_to_mw(radio.tx_power_dbm) * radio.sidelobe_gain_lin * mix *
         spreading;
}

double p_min_dbm(const RadioConfig& radio, double interference_mw) {
  if (!(interference_mw >= 0.0)) {
    throw std::domain_error("p_min_dbm: interference_mw must be >= 0");
  }
  const double noise_mw = dbm_to_mw(radio.noise_dbm);
  return mw_to_dbm(radio.sinr_threshold_lin * (noise_mw + interference_mw));
}

namespace {

// Q((numerator)/sigma) with the deterministic sigma -> 0 limit.
double gaussian_tail(double numerator_db, double sigma_db) {
  if (sigma_db <= 0.0) return numerator_db <= 0.0 ? 1.0 : 0.0;
  return q_function(numerator_db / sigma_db);
}

}  // namespace

double coverage_probability(const CoverageQuery& query) {
  const LinkGeometry& link = query.serving;
  const double footprint =
      beam_footprint_radius_m(link.altitude_m(), query.radio.beamwidth_deg);
  // Relative slack forgives the one-ulp wobble of r == h*tan(theta_B/2)
  // computed along different routes.
  if (link.horiz_range_m() > footprint * (1.0 + 1e-9)) {
    throw BeamFootprintError(
        "user at range " + std::to_string(link.horiz_range_m()) +
        " m lies outside the beam footprint of " +
        std::to_string(footprint) + " m");
  }

  double interference_mw = 0.0;
  if (query.interferer) {
    interference_mw =
        mean_interference_mw(*query.interferer, query.env, query.radio);
  }
  const double threshold_dbm = p_min_dbm(query.radio, interference_mw);
  const double loss_db = path_loss_db(link.distance_m(), query.radio.carrier_hz,
                                      query.env.path_loss_exp);
  const double gain_db = main_lobe_gain_db(query.radio.beamwidth_deg);
  const double elevation = link.elevation_rad();
  const double p_los = los_probability(elevation, query.env);

  // Coverage holds when the shadow loss psi ~ N(mu, sigma) of the drawn
  // state leaves P_t + G - L - psi above the threshold.
  const double deficit_db =
      threshold_dbm + loss_db - query.radio.tx_power_dbm - gain_db;
  const double term_los =
      gaussian_tail(deficit_db + query.env.mu_los_db,
                    shadow_sigma_db(elevation, query.env, LinkState::kLos));
  const double term_nlos =
      gaussian_tail(deficit_db + query.env.mu_nlos_db,
                    shadow_sigma_db(elevation, query.env, LinkState::kNlos));
  return p_los * term_los + (1.0 - p_los) * term_nlos;
}

}  // namespace uavplan
