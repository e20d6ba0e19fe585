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

#ifndef UAVPLAN_COVERAGE_HPP_
#define UAVPLAN_COVERAGE_HPP_

#include <optional>

#include "uavplan/channel.hpp"

// Downlink coverage probability of one user served by one UAV, as the
// LoS/NLoS mixture of Gaussian tail probabilities over the shadow fading,
// with the dominant neighbouring UAV contributing a mean interference
// power to the detection threshold.

namespace uavplan {

// The nearest interfering UAV as seen from the user under study.
struct InterfererSpec {
  LinkGeometry geometry;   // interferer-to-user link
  double sector_angle_rad; // user angle off the interferer boresight
};

// Everything needed to evaluate one coverage probability.
struct CoverageQuery {
  LinkGeometry serving;
  std::optional<InterfererSpec> interferer;
  EnvironmentParams env;
  RadioConfig radio;
};

// Standard normal tail probability P[Z > x]. Absolute error below 1e-9
// (in practice ~1e-15); evaluated through a rational-minimax complementary
// error function, not through std::erfc, so the two can cross-check each
// other. Accepts +/-infinity and returns the limits 0/1; throws
// std::domain_error on NaN.
double q_function(double x);

// Mean interference power at the user in mW:
//   P_t,lin * g_sl * (10^(-mu_los/10) P_LoS + 10^(-mu_nlos/10) P_NLoS)
//         * (4 pi f_c d_k / c)^(-n).
// Inter-cell interference arrives through the side-lobe floor; the stored
// sector angle documents the geometry but does not select the main lobe.
double mean_interference_mw(const InterfererSpec& interferer,
                            const EnvironmentParams& env,
                            const RadioConfig& radio);

// Detection threshold 10*log10(beta*N_lin + beta*Ibar) in dBm.
// Strictly increasing in the interference power.
double p_min_dbm(const RadioConfig& radio, double interference_mw);

// Coverage probability of the query, in [0, 1]:
//   P_LoS * Q((P_min + L - P_t - G + mu_LoS) / sigma_LoS)
//     + P_NLoS * Q((P_min + L - P_t - G + mu_NLoS) / sigma_NLoS)
// with all terms in dB/dBm. A zero sigma takes the deterministic limit
// (success exactly when the Q-argument numerator is <= 0).
// Throws BeamFootprintError when the user sits outside the main-lobe
// footprint of the serving UAV.
double coverage_probability(const CoverageQuery& query);

}  // namespace uavplan

#endif  // UAVPLAN_COVERAGE_HPP_
