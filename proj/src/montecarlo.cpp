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

#include "uavplan/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "uavplan/errors.hpp"
#include "uavplan/units.hpp"

namespace uavplan {

namespace rng {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t lane) {
  // Two mixing rounds decorrelate the structured (index, lane) lattice;
  // the golden-ratio multiplier separates lanes of the same index.
  return mix64(mix64(index + lane * 0x9E3779B97F4A7C15ull) ^ seed);
}

double unit_half_open(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double unit_left_open(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace rng

SimResult simulate_coverage(const CoverageQuery& query,
                            std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::domain_error("n_samples must be >= 1");
  }
  const LinkGeometry& link = query.serving;
  const double footprint =
      beam_footprint_radius_m(link.altitude_m(), query.radio.beamwidth_deg);
  if (link.horiz_range_m() > footprint * (1.0 + 1e-9)) {
    throw BeamFootprintError("user at range " +
                             std::to_string(link.horiz_range_m()) +
                             " m lies outside the beam footprint of " +
                             std::to_string(footprint) + " m");
  }

  // Fixed per-query quantities; only the LoS state and the shadow loss are
  // random. Interference stays at its analytic mean inside the threshold:
  // that is the exact claim the analytic model makes.
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
  const double sigma_los =
      shadow_sigma_db(elevation, query.env, LinkState::kLos);
  const double sigma_nlos =
      shadow_sigma_db(elevation, query.env, LinkState::kNlos);

  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    const double u_state =
        rng::unit_half_open(rng::counter_hash(seed, index, 0));
    const bool los = u_state < p_los;
    // Box-Muller; the log argument is in (0, 1] by construction.
    const double u1 = rng::unit_left_open(rng::counter_hash(seed, index, 1));
    const double u2 = rng::unit_half_open(rng::counter_hash(seed, index, 2));
    const double normal =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    const double mu = los ? query.env.mu_los_db : query.env.mu_nlos_db;
    const double sigma = los ? sigma_los : sigma_nlos;
    const double shadow_db = mu + sigma * normal;
    const double rx_power_dbm =
        query.radio.tx_power_dbm + gain_db - loss_db - shadow_db;
    if (rx_power_dbm >= threshold_dbm) ++successes;
  }

  SimResult result;
  result.n_samples = n_samples;
  result.seed = seed;
  result.empirical_pcov =
      static_cast<double>(successes) / static_cast<double>(n_samples);
  result.std_error =
      std::sqrt(result.empirical_pcov * (1.0 - result.empirical_pcov) /
                static_cast<double>(n_samples));
  return result;
}

}  // namespace uavplan
