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

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lbisim/design.hpp"
#include "lbisim/dispersive.hpp"
#include "lbisim/ripsim.hpp"

namespace lbisim::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitDomain = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

/// Runs `lbisim <validate|report|sweep|rip|fit> [flags]`; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Rounds to 12 significant digits; non-finite values pass through.
double round12(double v);
std::string format12(double v);

nlohmann::ordered_json report_json(const DispersiveReport &report);
nlohmann::ordered_json gate_result_json(const GateResult &result);

/// Header `freq_ghz,value,is_pole`; the value is empty at poles.
std::string curve_csv(const SweepCurve &curve);

}  // namespace lbisim::cli
