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

#ifndef UAVPLAN_SERIALIZE_HPP_
#define UAVPLAN_SERIALIZE_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "uavplan/montecarlo.hpp"
#include "uavplan/packing.hpp"
#include "uavplan/planner.hpp"
#include "uavplan/solver.hpp"

// Machine-readable output: JSON objects and RFC-4180-style CSV (header
// row, \n line endings). All floating-point values are printed with 6
// significant digits in both formats; serialization is locale-independent
// and byte-deterministic for identical inputs.

namespace uavplan {

// %.6g rendering used for every floating-point value we emit.
std::string format_number(double value);

// The double nearest to the 6-significant-digit decimal rendering of
// value; JSON emits these so both formats carry the same precision.
double round_to_printed(double value);

// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

nlohmann::ordered_json to_json(const PackingLayout& layout);
nlohmann::ordered_json to_json(const RadiusSolution& solution);
nlohmann::ordered_json to_json(const DeploymentPlan& plan);
nlohmann::ordered_json to_json(const SimResult& result);
nlohmann::ordered_json to_json(const std::vector<MSweepRow>& rows);
nlohmann::ordered_json to_json(const std::vector<RcSweepRow>& rows);

std::string to_csv(const PackingLayout& layout);
std::string to_csv(const RadiusSolution& solution);
std::string to_csv(const DeploymentPlan& plan);
std::string to_csv(const SimResult& result);
std::string to_csv(const std::vector<MSweepRow>& rows);
std::string to_csv(const std::vector<RcSweepRow>& rows);

}  // namespace uavplan

#endif  // UAVPLAN_SERIALIZE_HPP_
