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

#ifndef UAVPLAN_MONTECARLO_HPP_
#define UAVPLAN_MONTECARLO_HPP_

#include <cstdint>

#include "uavplan/coverage.hpp"

// Stochastic oracle for the analytic coverage probability: samples the
// two-state LoS/NLoS channel with Gaussian shadow fading and counts
// received-power successes against the same detection threshold the
// analytic model uses.

namespace uavplan {

struct SimResult {
  double empirical_pcov;
  double std_error;  // sqrt(p * (1 - p) / n_samples)
  std::int64_t n_samples;
  std::uint64_t seed;
};

// Empirical coverage probability from n_samples independent channel draws.
// Each sample draws the LoS state by the elevation-dependent probability
// and the shadow loss from the Gaussian of the drawn state; interference
// enters through its analytic mean inside the threshold (the claim under
// test says nothing about interference fading). Deterministic given
// (query, n_samples, seed): sample i is a pure function of (seed, i), so
// any batching or execution order reproduces the same count.
// Throws BeamFootprintError outside the serving footprint and
// std::domain_error for n_samples < 1.
SimResult simulate_coverage(const CoverageQuery& query,
                            std::int64_t n_samples, std::uint64_t seed);

// Counter-based generator primitives behind simulate_coverage, exposed so
// tests can pin the stream-splitting contract.
namespace rng {

// 64-bit finalizing mix (splitmix64 increment + finalizer).
std::uint64_t mix64(std::uint64_t x);

// Decorrelated bits for one (seed, sample index, lane) triple.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t lane);

// Top 53 bits mapped to [0, 1).
double unit_half_open(std::uint64_t bits);

// Top 53 bits mapped to (0, 1]; safe as a logarithm argument.
double unit_left_open(std::uint64_t bits);

}  // namespace rng

}  // namespace uavplan

#endif  // UAVPLAN_MONTECARLO_HPP_
