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

// uavplan: plan multi-station UAV coverage deployments and validate the
// analytic coverage model. Units: meters, degrees, dBm, Hz. Exit codes:
// 0 success, 2 argument/scenario parse error, 3 infeasible request,
// 4 numeric failure.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "uavplan/errors.hpp"
#include "uavplan/montecarlo.hpp"
#include "uavplan/planner.hpp"
#include "uavplan/scenario.hpp"
#include "uavplan/serialize.hpp"
#include "uavplan/solver.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string scenario_path;
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;
};

uavplan::Scenario need_scenario(const GlobalOptions& global) {
  if (global.scenario_path.empty()) {
    throw uavplan::ScenarioParseError(
        "this command needs --scenario FILE", 0);
  }
  return uavplan::load_scenario_file(global.scenario_path);
}

std::string render(const ordered_json& as_json, const std::string& as_csv,
                   const GlobalOptions& global) {
  if (global.format == "csv") return as_csv;
  return as_json.dump(2) + "\n";
}

void emit(const std::string& payload, const GlobalOptions& global) {
  if (global.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream file(global.out_path, std::ios::binary);
  if (!file) {
    throw uavplan::ScenarioParseError(
        "cannot open output file '" + global.out_path + "'", 0);
  }
  file << payload;
}

ordered_json scalar_json(const char* key, double value) {
  return ordered_json{{key, uavplan::round_to_printed(value)}};
}

std::string scalar_csv(const char* key, double value) {
  return std::string(key) + "\n" + uavplan::format_number(value) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "UAV base-station deployment planner.\n"
      "Distances in meters, angles in degrees, powers in dBm."};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--scenario", global.scenario_path,
                 "Scenario file (key = value lines; see README)");
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", global.out_path,
                 "Write output to this file instead of stdout");
  app.add_option("--seed", global.seed, "Random seed for validate")
      ->capture_default_str();

  double range_m = 0.0;
  double altitude_m = 0.0;
  int uav_count = 1;
  double threshold = 0.0;
  std::int64_t n_samples = 100000;
  std::string sweep_axis;
  int m_from = 1;
  int m_to = 10;
  double rc_from = 0.0;
  double rc_to = 0.0;
  double rc_step = 0.0;

  CLI::App* cmd_coverage = app.add_subcommand(
      "coverage", "Coverage probability at one range and altitude");
  cmd_coverage->add_option("-r,--range", range_m, "User ground range (m)")
      ->required();
  cmd_coverage->add_option("-a,--altitude", altitude_m, "Station altitude (m)")
      ->required();

  CLI::App* cmd_radius = app.add_subcommand(
      "radius", "Largest radius meeting the coverage requirement");
  cmd_radius->add_option("-a,--altitude", altitude_m, "Station altitude (m)")
      ->required();

  CLI::App* cmd_power = app.add_subcommand(
      "power", "Minimum transmit power covering a required radius");
  cmd_power->add_option("-r,--range", range_m, "Required radius (m)")
      ->required();
  cmd_power->add_option("-a,--altitude", altitude_m, "Station altitude (m)")
      ->required();

  CLI::App* cmd_plan =
      app.add_subcommand("plan", "Full deployment plan for one station count");
  cmd_plan->add_option("-m,--uavs", uav_count, "Station count")
      ->required()
      ->check(CLI::Range(1, 10));

  CLI::App* cmd_min_uavs = app.add_subcommand(
      "min-uavs", "Smallest station count reaching a coverage threshold");
  cmd_min_uavs
      ->add_option("-t,--threshold", threshold, "Required covered fraction")
      ->required();

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Planning curves over station count or area radius");
  cmd_sweep->add_option("--axis", sweep_axis, "Sweep variable")
      ->required()
      ->check(CLI::IsMember({"m", "rc"}));
  cmd_sweep->add_option("--from", m_from, "First station count (axis m)")
      ->capture_default_str();
  cmd_sweep->add_option("--to", m_to, "Last station count (axis m)")
      ->capture_default_str();
  cmd_sweep->add_option("--rc-from", rc_from, "First area radius (axis rc)");
  cmd_sweep->add_option("--rc-to", rc_to, "Last area radius (axis rc)");
  cmd_sweep->add_option("--rc-step", rc_step, "Radius step (axis rc)");
  cmd_sweep->add_option("-t,--threshold", threshold,
                        "Covered fraction for axis rc");

  CLI::App* cmd_validate = app.add_subcommand(
      "validate", "Monte-Carlo check of the analytic coverage probability");
  cmd_validate->add_option("-r,--range", range_m, "User ground range (m)")
      ->required();
  cmd_validate->add_option("-a,--altitude", altitude_m, "Station altitude (m)")
      ->required();
  cmd_validate
      ->add_option("-n,--samples", n_samples, "Monte-Carlo sample count")
      ->capture_default_str();

  CLI::App* cmd_layout = app.add_subcommand(
      "layout", "Normalized circle packing for one station count");
  cmd_layout->add_option("-m,--uavs", uav_count, "Station count")
      ->required()
      ->check(CLI::Range(1, 10));

  // Let global flags appear after the subcommand name as well.
  for (CLI::App* sub : {cmd_coverage, cmd_radius, cmd_power, cmd_plan,
                        cmd_min_uavs, cmd_sweep, cmd_validate, cmd_layout}) {
    sub->fallthrough();
  }

  cmd_coverage->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const double p = uavplan::coverage_probability(
        {uavplan::LinkGeometry(range_m, altitude_m), std::nullopt, sc.env,
         sc.radio});
    emit(render(scalar_json("p_cov", p), scalar_csv("p_cov", p), global),
         global);
  });

  cmd_radius->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const uavplan::RadiusSolution sol =
        uavplan::coverage_radius(sc.radio, sc.env, altitude_m);
    emit(render(uavplan::to_json(sol), uavplan::to_csv(sol), global), global);
  });

  cmd_power->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const double p = uavplan::min_transmit_power_dbm(range_m, sc.radio,
                                                     sc.env, altitude_m);
    emit(render(scalar_json("tx_power_dbm", p),
                scalar_csv("tx_power_dbm", p), global),
         global);
  });

  cmd_plan->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const uavplan::DeploymentPlan p = uavplan::plan(
        sc.area_radius_m, uav_count, sc.env, sc.radio, sc.constraints);
    emit(render(uavplan::to_json(p), uavplan::to_csv(p), global), global);
  });

  cmd_min_uavs->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const std::optional<int> m = uavplan::min_uav_count(
        sc.area_radius_m, threshold, sc.env, sc.radio, sc.constraints);
    if (!m) {
      throw uavplan::InfeasibleError(
          "no supported station count reaches coverage " +
          uavplan::format_number(threshold));
    }
    emit(render(ordered_json{{"min_uavs", *m}},
                "min_uavs\n" + std::to_string(*m) + "\n", global),
         global);
  });

  cmd_sweep->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    if (sweep_axis == "m") {
      if (m_from < 1 || m_to < m_from) {
        throw CLI::ValidationError("sweep",
                                   "--from/--to must satisfy 1 <= from <= to");
      }
      const std::vector<uavplan::MSweepRow> rows = uavplan::sweep_vs_m(
          sc.area_radius_m, m_from, m_to, sc.env, sc.radio, sc.constraints);
      emit(render(uavplan::to_json(rows), uavplan::to_csv(rows), global),
           global);
      return;
    }
    if (cmd_sweep->count("--rc-from") == 0 ||
        cmd_sweep->count("--rc-to") == 0 ||
        cmd_sweep->count("--rc-step") == 0 ||
        cmd_sweep->count("--threshold") == 0) {
      throw CLI::ValidationError(
          "sweep", "axis rc needs --rc-from, --rc-to, --rc-step, --threshold");
    }
    if (!(rc_from > 0.0) || !(rc_step > 0.0) || rc_to < rc_from) {
      throw CLI::ValidationError(
          "sweep", "radius range must satisfy 0 < rc-from <= rc-to, step > 0");
    }
    std::vector<double> radii;
    for (double rc = rc_from; rc <= rc_to + rc_step * 1e-9; rc += rc_step) {
      radii.push_back(rc);
    }
    const std::vector<uavplan::RcSweepRow> rows = uavplan::sweep_vs_rc(
        radii, threshold, sc.env, sc.radio, sc.constraints);
    emit(render(uavplan::to_json(rows), uavplan::to_csv(rows), global),
         global);
  });

  cmd_validate->callback([&]() {
    const uavplan::Scenario sc = need_scenario(global);
    const uavplan::CoverageQuery query{
        uavplan::LinkGeometry(range_m, altitude_m), std::nullopt, sc.env,
        sc.radio};
    const uavplan::SimResult result =
        uavplan::simulate_coverage(query, n_samples, global.seed);
    ordered_json j = uavplan::to_json(result);
    j["analytic_pcov"] =
        uavplan::round_to_printed(uavplan::coverage_probability(query));
    emit(render(j, uavplan::to_csv(result), global), global);
  });

  cmd_layout->callback([&]() {
    const uavplan::PackingLayout l = uavplan::layout(uav_count);
    emit(render(uavplan::to_json(l), uavplan::to_csv(l), global), global);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const uavplan::ScenarioParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const uavplan::InfeasibleError& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 3;
  } catch (const uavplan::NoCoverageError& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 3;
  } catch (const uavplan::UnreachableError& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
