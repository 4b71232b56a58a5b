// Copyright 2026 The gatemonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEMONLAB_CONSTANTS_HPP
#define GATEMONLAB_CONSTANTS_HPP

#include <cmath>

namespace gatemonlab {

// CODATA-2018 exact values. All energies in this codebase are stored as E/h
// in frequency units (GHz or MHz), times in ns, so these constants appear
// only in the closed-form unit conversions.
inline constexpr double kElementaryChargeC = 1.602176634e-19;
inline constexpr double kPlanckJs = 6.62607015e-34;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

inline double mw_from_dbm(double p_dbm) { return std::pow(10.0, p_dbm / 10.0); }

inline double dbm_from_mw(double p_mw) { return 10.0 * std::log10(p_mw); }

}  // namespace gatemonlab

#endif  // GATEMONLAB_CONSTANTS_HPP
