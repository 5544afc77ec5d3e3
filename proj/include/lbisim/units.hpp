// Copyright 2026 The lbisim Authors
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

#pragma once

#include <numbers>

namespace lbisim {

// Matrices store energies as frequencies in GHz (angular frequency / 2pi).
// Multiplying by kTwoPi and a time in ns gives a phase in radians.
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kMhzPerGhz = 1e3;
inline constexpr double kKhzPerGhz = 1e6;
inline constexpr double kKhzPerMhz = 1e3;

// Perturbative denominators closer to zero than this are treated as resonant.
inline constexpr double kSingularityToleranceGhz = 1e-3;

inline constexpr double mhz_to_ghz(double mhz) { return mhz / kMhzPerGhz; }
inline constexpr double ghz_to_mhz(double ghz) { return ghz * kMhzPerGhz; }

}  // namespace lbisim
