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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lbisim/model.hpp"

namespace lbisim {

// Grid points closer than this to a bus mode are skipped as poles.
inline constexpr double kPoleExclusionGhz = 5e-3;
// |J| threshold that defines the broadband window.
inline constexpr double kBroadbandThresholdMhz = 0.5;
// Bisection stops once the bracket is narrower than this.
inline constexpr double kRootToleranceGhz = 1e-12;

struct SweepCurve {
    std::string quantity;  // "j" (MHz) or "zz" (kHz)
    std::vector<double> freq_ghz;
    std::vector<double> value;  // NaN at poles
    std::vector<bool> is_pole;
    // Exact evaluation at an arbitrary degenerate frequency, used for root refinement.
    std::function<double(double)> evaluate;

    std::vector<double> poles() const;
};

struct Window {
    double lo_ghz = 0.0;
    double hi_ghz = 0.0;
    double width_mhz() const { return (hi_ghz - lo_ghz) * 1e3; }
};

std::vector<double> linear_grid(double from_ghz, double to_ghz, int points);

/// Device copy with both qubits of the pair at omega (degenerate sweep convention).
DeviceSpec at_degenerate_frequency(const DeviceSpec &spec, const PairSpec &pair, double omega_ghz);

SweepCurve j_vs_frequency(const DeviceSpec &spec, const PairSpec &pair, const std::vector<double> &grid_ghz,
                          int threads = 0);
SweepCurve zz_vs_frequency(const DeviceSpec &spec, const PairSpec &pair, const std::vector<double> &grid_ghz,
                           int threads = 0);

/// Sign changes between adjacent non-pole points, refined by bisection on the curve's
/// evaluator (linear interpolation when it has none) to kRootToleranceGhz.
std::vector<double> find_zero_crossings(const SweepCurve &curve);

/// Widest run of consecutive non-pole points with |value| <= threshold.
std::optional<Window> widest_window(const SweepCurve &curve, double threshold);
/// Run of consecutive non-pole points with |value| <= threshold that contains `at_ghz`.
std::optional<Window> window_around(const SweepCurve &curve, double at_ghz, double threshold);

enum class SchemeVariant { SingleMode, Narrow, Broadband, Lbi };
std::string to_string(SchemeVariant variant);

struct SchemeSpec {
    SchemeVariant variant = SchemeVariant::Lbi;
    std::vector<double> mode_ghz;
    // Per mode: (g to qubit a, g to qubit b), MHz.
    std::vector<std::array<double, 2>> g_mhz;
    double j0_mhz = 0.0;
    double delta_ghz = -0.3;

    std::vector<std::string> violations() const;
    /// Two-qubit device with pair "a_b"; qubit frequencies are placeholders for sweeps.
    DeviceSpec device() const;
};

/// Shipped examples with every zero placed at 4.5 GHz.
std::vector<SchemeSpec> example_schemes();

struct SchemeSignature {
    SchemeVariant variant;
    SweepCurve curve;
    std::vector<double> roots;
    std::optional<Window> window;  // widest |J| <= 0.5 MHz interval
    double max_abs_j_mhz = 0.0;
    // Largest sum over modes of |J_l| on the grid: the coupler's uncancelled strength.
    double mode_coupling_scale_mhz = 0.0;
    // |dJ/domega| at the first root divided by mode_coupling_scale, 1/GHz; 0 without a root.
    double normalized_slope_per_ghz = 0.0;
    bool one_signed = false;
};

std::vector<SchemeSignature> scheme_comparison(const std::vector<SchemeSpec> &schemes,
                                               const std::vector<double> &grid_ghz);

}  // namespace lbisim
