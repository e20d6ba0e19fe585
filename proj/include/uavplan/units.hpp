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

#ifndef UAVPLAN_UNITS_HPP_
#define UAVPLAN_UNITS_HPP_

#include <cmath>

// Unit conventions used throughout the library:
//   distances in meters, frequencies in Hz, angles in radians unless a
//   parameter name says _deg, powers in dBm at API boundaries and in
//   milliwatts for linear arithmetic.

namespace uavplan {

inline constexpr double kSpeedOfLightMps = 299792458.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// dBm <-> mW carry the same arithmetic; named separately so call sites
// say which convention a value is in.
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace uavplan

#endif  // UAVPLAN_UNITS_HPP_
