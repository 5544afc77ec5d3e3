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

#include <cmath>
#include <string>
#include <vector>

#include "lbisim/dispersive.hpp"
#include "lbisim/model.hpp"
#include "lbisim/ripsim.hpp"

namespace lbisim::testing {

// Values frozen from tests/oracle/derive_constants.py (numpy, independent of this library).
inline constexpr double kChiK1Example = 3.146046379912527;    // MHz; 4.9 GHz, -0.3, 5.942 GHz, g = 77
inline constexpr double kChiK0Example = 5.690019193857967;    // MHz
inline constexpr double kSplittingExactExample = -2.50023927664067;  // MHz, 4 levels / 6 photons
inline constexpr double kBus25JMode1At45 = 4.1114040870138435;       // MHz
inline constexpr double kBus25JAt45 = 0.40753668369892626;           // MHz
inline constexpr double kBus25RootLow = 4.938197702546791;           // GHz
inline constexpr double kBus25RootHigh = 5.4120165831674925;         // GHz
inline constexpr double kZzReference = 46.089030005802556;           // kHz, two_by_two_device()
inline constexpr double kZzJ0Only = 596.9138996695378;               // kHz, 4.5/4.7 GHz, J0 = 5 MHz

inline DeviceSpec two_qubits(double wa, double wb, double delta = -0.3) {
    DeviceSpec d;
    d.qudits = {{"a", wa, delta}, {"b", wb, delta}};
    d.pairs = {{"a", "b", {}, ""}};
    return d;
}

// Bus 2_5 measured couplings with both qubits placed at `omega`.
inline DeviceSpec bus25_device(double omega_ghz = 4.5) {
    DeviceSpec d;
    d.qudits = {{"q2", omega_ghz, -0.3}, {"q5", omega_ghz, -0.3}};
    d.modes = {{"m1", 6.017}, {"m2", 6.310}};
    d.couplings = {{"q2", "m1", 81}, {"q5", "m1", -77}, {"q2", "m2", 109}, {"q5", "m2", 108}};
    d.direct = {{"q2", "q5", 2.8}};
    d.pairs = {{"q2", "q5", {"m1", "m2"}, "2_5"}};
    return d;
}

// Two qubits, two modes, opposite-parity mode 1, J0 = 1.5 MHz.
inline DeviceSpec two_by_two_device() {
    DeviceSpec d;
    d.qudits = {{"a", 4.50, -0.3, 4}, {"b", 4.55, -0.3, 4}};
    d.modes = {{"m1", 6.0, 4}, {"m2", 6.3, 4}};
    d.couplings = {{"a", "m1", 60}, {"b", "m1", -60}, {"a", "m2", 60}, {"b", "m2", 60}};
    d.direct = {{"a", "b", 1.5}};
    d.pairs = {{"a", "b", {"m1", "m2"}, ""}};
    return d;
}

// Single-mode RIP test device: qubits 4.50 / 4.51 GHz, mode 6.0 GHz, J0 cancelling
// the mode-mediated exchange. g is scaled until the RIP chi equals chi_mhz.
inline DeviceSpec rip_device(double chi_mhz = 1.0, double wb = 4.51) {
    DeviceSpec d;
    d.qudits = {{"a", 4.50, -0.3}, {"b", wb, -0.3}};
    d.modes = {{"m", 6.0}};
    d.pairs = {{"a", "b", {"m"}, ""}};
    double g = 95.0;
    for (int it = 0; it < 60; ++it) {
        d.couplings = {{"a", "m", g}, {"b", "m", g}};
        d.direct = {{"a", "b", -j_mode_qubit_mhz(d, d.pairs[0], "m")}};
        double chi = rip_chi_mhz(d, d.pairs[0], "m");
        if (std::abs(chi - chi_mhz) < 1e-10 * chi_mhz) break;
        g *= std::sqrt(chi_mhz / chi);
    }
    return d;
}

}  // namespace lbisim::testing
