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

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "uavplan/serialize.hpp"

using namespace uavplan;

namespace {

// Splits one CSV line on commas (no quoted fields in numeric tables).
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

double parse(const std::string& text) {
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

}  // namespace

TEST_CASE("numbers print with six significant digits") {
  CHECK(format_number(0.9585143712104209) == "0.958514");
  CHECK(format_number(4195.498155886399) == "4195.5");
  CHECK(format_number(-113.01029995663981) == "-113.01");
  CHECK(format_number(2e9) == "2e+09");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
}

TEST_CASE("round to printed matches its own rendering") {
  for (double v : {0.9585143712104209, 4195.498155886399, 1.6849024469e-12,
                   -27.887, 0.3333333333333333}) {
    const double rounded = round_to_printed(v);
    CHECK(format_number(rounded) == format_number(v));
    CHECK(round_to_printed(rounded) == rounded);  // idempotent
    CHECK(std::fabs(rounded - v) <= 1e-5 * std::fabs(v));
  }
}

TEST_CASE("csv escaping quotes only when needed") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("12.5") == "12.5");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("json and csv carry identical values") {
  const PackingLayout lay = layout(7);
  const auto j = to_json(lay);
  CHECK(j["count"] == 7);
  CHECK(j["centers_norm"].size() == 7);

  const std::string csv = to_csv(lay);
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "count,radius_norm,total_coverage,center_index,x_norm,y_norm");
  std::getline(ss, line);
  const auto fields = split(line);
  REQUIRE(fields.size() == 6);
  // The JSON doubles are pre-rounded to the printed precision, so the CSV
  // text re-parses to exactly the JSON value.
  CHECK(parse(fields[1]) == j["radius_norm"].get<double>());
  CHECK(parse(fields[2]) == j["total_coverage"].get<double>());
  CHECK(parse(fields[4]) == j["centers_norm"][0][0].get<double>());
}

TEST_CASE("radius solution serialization") {
  const RadiusSolution sol{4195.498155886399, RadiusBinding::kBeamLimited,
                           0.896790673007126};
  const auto j = to_json(sol);
  CHECK(j["binding"] == "beam_limited");
  CHECK(format_number(j["radius_m"].get<double>()) == "4195.5");
  const std::string csv = to_csv(sol);
  CHECK(csv == "radius_m,binding,pcov_at_radius\n4195.5,beam_limited,"
               "0.896791\n");

  const RadiusSolution pl{1234.5, RadiusBinding::kPowerLimited, 0.8};
  CHECK(to_json(pl)["binding"] == "power_limited");
}

TEST_CASE("sim result serialization") {
  const SimResult r{0.95832, 0.000632, 100000, 42};
  const auto j = to_json(r);
  CHECK(j["n_samples"] == 100000);
  CHECK(j["seed"] == 42);
  CHECK(to_csv(r) ==
        "empirical_pcov,std_error,n_samples,seed\n0.95832,0.000632,100000,"
        "42\n");
}

TEST_CASE("sweep rows serialize errors and blanks") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<MSweepRow> rows;
  rows.push_back({1, 1.0, 1.0, 5958.0, 27.887, ""});
  rows.push_back({2, nan, nan, nan, nan, "minimum power 20.9 dBm, cap 15"});

  const auto j = to_json(rows);
  REQUIRE(j.size() == 2);
  CHECK(j[0].contains("lifetime"));
  CHECK(!j[0].contains("error"));
  CHECK(j[1].contains("error"));
  CHECK(!j[1].contains("lifetime"));

  const std::string csv = to_csv(rows);
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "uav_count,total_coverage,lifetime,altitude_m,tx_power_dbm,"
                "error");
  std::getline(ss, line);
  CHECK(line == "1,1,1,5958,27.887,");
  std::getline(ss, line);
  // The error message holds a comma, so the field arrives quoted.
  CHECK(line == "2,,,,,\"minimum power 20.9 dBm, cap 15\"");

  std::vector<RcSweepRow> rc;
  rc.push_back({5000.0, 1});
  rc.push_back({9000.0, std::nullopt});
  const auto jr = to_json(rc);
  CHECK(jr[0]["min_uavs"] == 1);
  CHECK(jr[1]["min_uavs"].is_null());
  CHECK(to_csv(rc) == "area_radius_m,min_uavs\n5000,1\n9000,\n");
}

TEST_CASE("json output is deterministic and ordered") {
  const PackingLayout lay = layout(3);
  const std::string a = to_json(lay).dump(2);
  const std::string b = to_json(lay).dump(2);
  CHECK(a == b);
  // Insertion order is part of the contract: count leads.
  CHECK(a.find("\"count\"") < a.find("\"radius_norm\""));
  CHECK(a.find("\"radius_norm\"") < a.find("\"centers_norm\""));
}
