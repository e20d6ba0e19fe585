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

#ifndef UAVPLAN_SCENARIO_HPP_
#define UAVPLAN_SCENARIO_HPP_

#include <string>

#include "uavplan/channel.hpp"
#include "uavplan/planner.hpp"

// Scenario files bundle one planning setup: environment, radio, area and
// caps. Format: one `key = value` per line, `#` comments, blank lines
// ignored. Unknown or duplicate keys are errors so typos in physics
// constants cannot pass silently. Angles in degrees, distances in meters,
// powers in dBm.
//
// Keys:
//   environment                 preset name ("urban"), optional
//   alpha gamma k1 k2 g1 g2 mu_los_db mu_nlos_db path_loss_exp
//                               environment fields; override the preset,
//                               required as a group without one
//   carrier_hz tx_power_dbm beamwidth_deg sinr_threshold_lin noise_dbm
//   coverage_eps area_radius_m  required
//   sidelobe_gain_lin           optional, default 0.1
//   max_altitude_m max_tx_power_dbm
//                               optional caps

namespace uavplan {

struct Scenario {
  EnvironmentParams env;
  RadioConfig radio;
  double area_radius_m;
  PlanConstraints constraints;
};

// Parses and validates; throws ScenarioParseError with the offending line.
Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin = "<string>");

// Reads the file and delegates to parse_scenario_text.
Scenario load_scenario_file(const std::string& path);

}  // namespace uavplan

#endif  // UAVPLAN_SCENARIO_HPP_
