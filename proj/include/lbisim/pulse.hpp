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

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace lbisim {

enum class PulseShape {
    // sin^2 rise, flat top, cos^2 fall.
    CosineSquared,
    // Gaussian edges with sigma = rise / 4, truncated at 4 sigma and lifted to start at zero.
    GaussianFlatTop,
};

PulseShape parse_pulse_shape(std::string_view name);
std::string to_string(PulseShape shape);

struct PulseEnvelope {
    double epsilon0_mhz = 0.0;
    // Delta = omega_d - omega_r. Negative drives below the mode.
    double detuning_mhz = -30.0;
    double t_g_ns = 228.0;
    double rise_ns = 57.0;
    PulseShape shape = PulseShape::CosineSquared;
    // Global phase of the drive; enters as eps e^{i phase} c^dag + h.c.
    double phase_rad = 0.0;

    /// Unit-peak envelope shape s(t) in [0, 1]; zero outside [0, t_g].
    double shape_at(double t_ns) const;
    /// Real envelope eps(t) = epsilon0 * s(t), MHz.
    double amplitude_mhz(double t_ns) const { return epsilon0_mhz * shape_at(t_ns); }
    std::complex<double> complex_amplitude_mhz(double t_ns) const;

    /// Integral of s(t)^2 over the pulse, ns.
    double shape_square_integral_ns() const;

    std::vector<std::string> violations() const;
    /// Throws std::invalid_argument listing the violations.
    void check() const;
};

}  // namespace lbisim
