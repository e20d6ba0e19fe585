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

#include "uavplan/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "uavplan/errors.hpp"

namespace uavplan {

namespace {

const std::set<std::string>& numeric_keys() {
  static const std::set<std::string> keys = {
      "alpha",          "gamma",           "k1",
      "k2",             "g1",              "g2",
      "mu_los_db",      "mu_nlos_db",      "path_loss_exp",
      "carrier_hz",     "tx_power_dbm",    "beamwidth_deg",
      "sidelobe_gain_lin", "sinr_threshold_lin", "noise_dbm",
      "coverage_eps",   "area_radius_m",   "max_altitude_m",
      "max_tx_power_dbm"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& message) {
  std::string where = origin;
  if (line > 0) where += ":" + std::to_string(line);
  throw ScenarioParseError(where + ": " + message, line);
}

double parse_double(const std::string& origin, int line,
                    const std::string& key, const std::string& value) {
  double parsed = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, parsed);
  if (ec != std::errc() || ptr != last) {
    fail(origin, line, "value '" + value + "' for key '" + key +
                           "' is not a number");
  }
  return parsed;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin) {
  std::map<std::string, double> values;
  std::string preset;
  int preset_line = 0;

  std::istringstream input(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(input, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(origin, lineno, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "missing key before '='");
    if (value.empty()) {
      fail(origin, lineno, "missing value for key '" + key + "'");
    }

    if (key == "environment") {
      if (!preset.empty()) {
        fail(origin, lineno, "duplicate key 'environment'");
      }
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        value = value.substr(1, value.size() - 2);
      }
      if (value != "urban") {
        fail(origin, lineno,
             "unknown environment preset '" + value + "' (known: urban)");
      }
      preset = value;
      preset_line = lineno;
      continue;
    }
    if (numeric_keys().count(key) == 0) {
      fail(origin, lineno, "unknown key '" + key + "'");
    }
    if (values.count(key) != 0) {
      fail(origin, lineno, "duplicate key '" + key + "'");
    }
    values.emplace(key, parse_double(origin, lineno, key, value));
  }
  (void)preset_line;

  // Environment: preset first, individual keys override.
  static const char* kEnvKeys[] = {"alpha",      "gamma",      "k1",
                                   "k2",         "g1",         "g2",
                                   "mu_los_db",  "mu_nlos_db",
                                   "path_loss_exp"};
  Scenario scenario;
  EnvironmentParams env{};
  if (preset == "urban") {
    env = EnvironmentParams::urban();
  } else {
    for (const char* key : kEnvKeys) {
      if (values.count(key) == 0) {
        fail(origin, 0, std::string("missing required key '") + key +
                            "' (no environment preset given)");
      }
    }
  }
  auto take = [&values](const char* key, double* slot) {
    const auto it = values.find(key);
    if (it != values.end()) *slot = it->second;
  };
  take("alpha", &env.alpha);
  take("gamma", &env.gamma);
  take("k1", &env.k1);
  take("k2", &env.k2);
  take("g1", &env.g1);
  take("g2", &env.g2);
  take("mu_los_db", &env.mu_los_db);
  take("mu_nlos_db", &env.mu_nlos_db);
  take("path_loss_exp", &env.path_loss_exp);
  scenario.env = env;

  static const char* kRequired[] = {"carrier_hz",    "tx_power_dbm",
                                    "beamwidth_deg", "sinr_threshold_lin",
                                    "noise_dbm",     "coverage_eps",
                                    "area_radius_m"};
  for (const char* key : kRequired) {
    if (values.count(key) == 0) {
      fail(origin, 0, std::string("missing required key '") + key + "'");
    }
  }
  RadioConfig radio{};
  radio.carrier_hz = values.at("carrier_hz");
  radio.tx_power_dbm = values.at("tx_power_dbm");
  radio.beamwidth_deg = values.at("beamwidth_deg");
  radio.sidelobe_gain_lin = 0.1;
  take("sidelobe_gain_lin", &radio.sidelobe_gain_lin);
  radio.sinr_threshold_lin = values.at("sinr_threshold_lin");
  radio.noise_dbm = values.at("noise_dbm");
  radio.coverage_eps = values.at("coverage_eps");
  scenario.radio = radio;

  scenario.area_radius_m = values.at("area_radius_m");
  scenario.constraints.coverage_eps = radio.coverage_eps;
  if (values.count("max_altitude_m")) {
    scenario.constraints.max_altitude_m = values.at("max_altitude_m");
  }
  if (values.count("max_tx_power_dbm")) {
    scenario.constraints.max_tx_power_dbm = values.at("max_tx_power_dbm");
  }

  try {
    scenario.env.validate();
    scenario.radio.validate();
    scenario.constraints.validate();
    if (!(scenario.area_radius_m > 0.0)) {
      throw std::domain_error("area_radius_m must be positive");
    }
  } catch (const std::domain_error& e) {
    fail(origin, 0, e.what());
  }
  return scenario;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ScenarioParseError("cannot open scenario file '" + path + "'", 0);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_scenario_text(buffer.str(), path);
}

}  // namespace uavplan
