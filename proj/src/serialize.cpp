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

#include "uavplan/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace uavplan {

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

double round_to_printed(double value) {
  const std::string text = format_number(value);
  double parsed = value;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return parsed;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace {

using json = nlohmann::ordered_json;

// Every float leaves through here so JSON and CSV carry identical
// 6-significant-digit precision.
json num(double value) { return json(round_to_printed(value)); }

const char* binding_name(RadiusBinding binding) {
  return binding == RadiusBinding::kBeamLimited ? "beam_limited"
                                                : "power_limited";
}

}  // namespace

json to_json(const PackingLayout& layout) {
  json centers = json::array();
  for (const Eigen::Vector2d& c : layout.centers_norm) {
    centers.push_back(json::array({num(c.x()), num(c.y())}));
  }
  return json{{"count", layout.count},
              {"radius_norm", num(layout.radius_norm)},
              {"centers_norm", centers},
              {"total_coverage", num(layout.total_coverage)}};
}

json to_json(const RadiusSolution& solution) {
  return json{{"radius_m", num(solution.radius_m)},
              {"binding", binding_name(solution.binding)},
              {"pcov_at_radius", num(solution.pcov_at_radius)}};
}

json to_json(const DeploymentPlan& plan) {
  json positions = json::array();
  for (const Eigen::Vector3d& p : plan.positions_m) {
    positions.push_back(json::array({num(p.x()), num(p.y()), num(p.z())}));
  }
  return json{{"uav_count", plan.uav_count},
              {"area_radius_m", num(plan.area_radius_m)},
              {"per_uav_radius_m", num(plan.per_uav_radius_m)},
              {"altitude_m", num(plan.altitude_m)},
              {"tx_power_dbm", num(plan.tx_power_dbm)},
              {"total_coverage", num(plan.total_coverage)},
              {"lifetime", num(plan.lifetime)},
              {"positions_m", positions}};
}

json to_json(const SimResult& result) {
  return json{{"empirical_pcov", num(result.empirical_pcov)},
              {"std_error", num(result.std_error)},
              {"n_samples", result.n_samples},
              {"seed", result.seed}};
}

json to_json(const std::vector<MSweepRow>& rows) {
  json out = json::array();
  for (const MSweepRow& row : rows) {
    json r{{"uav_count", row.uav_count}};
    if (row.error.empty()) {
      r["total_coverage"] = num(row.total_coverage);
      r["lifetime"] = num(row.lifetime);
      r["altitude_m"] = num(row.altitude_m);
      r["tx_power_dbm"] = num(row.tx_power_dbm);
    } else {
      r["error"] = row.error;
    }
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const std::vector<RcSweepRow>& rows) {
  json out = json::array();
  for (const RcSweepRow& row : rows) {
    json r{{"area_radius_m", num(row.area_radius_m)}};
    r["min_uavs"] = row.min_uavs ? json(*row.min_uavs) : json(nullptr);
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_csv(const PackingLayout& layout) {
  std::string out = "count,radius_norm,total_coverage,center_index,x_norm,y_norm\n";
  for (size_t i = 0; i < layout.centers_norm.size(); ++i) {
    out += std::to_string(layout.count) + ',' +
           format_number(layout.radius_norm) + ',' +
           format_number(layout.total_coverage) + ',' + std::to_string(i) +
           ',' + format_number(layout.centers_norm[i].x()) + ',' +
           format_number(layout.centers_norm[i].y()) + '\n';
  }
  return out;
}

std::string to_csv(const RadiusSolution& solution) {
  return "radius_m,binding,pcov_at_radius\n" +
         format_number(solution.radius_m) + ',' +
         binding_name(solution.binding) + ',' +
         format_number(solution.pcov_at_radius) + '\n';
}

std::string to_csv(const DeploymentPlan& plan) {
  std::string out =
      "station,x_m,y_m,altitude_m,radius_m,tx_power_dbm,total_coverage,"
      "lifetime\n";
  for (size_t i = 0; i < plan.positions_m.size(); ++i) {
    const Eigen::Vector3d& p = plan.positions_m[i];
    out += std::to_string(i) + ',' + format_number(p.x()) + ',' +
           format_number(p.y()) + ',' + format_number(p.z()) + ',' +
           format_number(plan.per_uav_radius_m) + ',' +
           format_number(plan.tx_power_dbm) + ',' +
           format_number(plan.total_coverage) + ',' +
           format_number(plan.lifetime) + '\n';
  }
  return out;
}

std::string to_csv(const SimResult& result) {
  return "empirical_pcov,std_error,n_samples,seed\n" +
         format_number(result.empirical_pcov) + ',' +
         format_number(result.std_error) + ',' +
         std::to_string(result.n_samples) + ',' +
         std::to_string(result.seed) + '\n';
}

std::string to_csv(const std::vector<MSweepRow>& rows) {
  std::string out = "uav_count,total_coverage,lifetime,altitude_m,tx_power_dbm,error\n";
  for (const MSweepRow& row : rows) {
    out += std::to_string(row.uav_count) + ',';
    if (row.error.empty()) {
      out += format_number(row.total_coverage) + ',' +
             format_number(row.lifetime) + ',' +
             format_number(row.altitude_m) + ',' +
             format_number(row.tx_power_dbm) + ',';
    } else {
      out += ",,,,";
    }
    out += csv_escape(row.error) + '\n';
  }
  return out;
}

std::string to_csv(const std::vector<RcSweepRow>& rows) {
  std::string out = "area_radius_m,min_uavs\n";
  for (const RcSweepRow& row : rows) {
    out += format_number(row.area_radius_m) + ',';
    if (row.min_uavs) out += std::to_string(*row.min_uavs);
    out += '\n';
  }
  return out;
}

}  // namespace uavplan
