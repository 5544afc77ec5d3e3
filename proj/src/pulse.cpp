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

#include "lbisim/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lbisim {

namespace {

constexpr double kGaussCut = 4.0;

double gaussian_edge(double s, double sigma) {
    const double floor = std::exp(-0.5 * kGaussCut * kGaussCut);
    double v = std::exp(-0.5 * (s / sigma) * (s / sigma));
    return (v - floor) / (1.0 - floor);
}

}  // namespace

PulseShape parse_pulse_shape(std::string_view name) {
    if (name == "cos2" || name == "cosine-squared") return PulseShape::CosineSquared;
    if (name == "gaussian" || name == "gaussian-flattop") return PulseShape::GaussianFlatTop;
    throw std::invalid_argument("unknown pulse shape '" + std::string(name) + "' (use cos2 or gaussian)");
}

std::string to_string(PulseShape shape) {
    return shape == PulseShape::CosineSquared ? "cos2" : "gaussian";
}

double PulseEnvelope::shape_at(double t) const {
    if (!(t > 0.0) || !(t < t_g_ns)) return 0.0;
    double edge = std::min(t, t_g_ns - t);
    if (edge >= rise_ns) return 1.0;
    if (shape == PulseShape::CosineSquared) {
        double s = std::sin(0.5 * std::numbers::pi * edge / rise_ns);
        return s * s;
    }
    return gaussian_edge(edge - rise_ns, rise_ns / kGaussCut);
}

std::complex<double> PulseEnvelope::complex_amplitude_mhz(double t) const {
    return std::polar(amplitude_mhz(t), phase_rad);
}

double PulseEnvelope::shape_square_integral_ns() const {
    // Composite Simpson on each ramp; the flat top is exact.
    const int n = 4000;
    double h = rise_ns / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        double s = shape_at(i * h);
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * s * s;
    }
    double ramp = acc * h / 3.0;
    return 2.0 * ramp + (t_g_ns - 2.0 * rise_ns);
}

std::vector<std::string> PulseEnvelope::violations() const {
    std::vector<std::string> out;
    if (!(t_g_ns > 0)) out.push_back("t_g must be positive");
    if (!(rise_ns > 0)) out.push_back("rise must be positive");
    if (!(2.0 * rise_ns <= t_g_ns * (1.0 + 1e-12))) out.push_back("2 * rise must not exceed t_g");
    if (detuning_mhz == 0.0 || !std::isfinite(detuning_mhz)) out.push_back("detuning must be nonzero");
    if (!std::isfinite(epsilon0_mhz) || epsilon0_mhz < 0) out.push_back("epsilon0 must be finite and >= 0");
    return out;
}

void PulseEnvelope::check() const {
    auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid pulse:";
    for (const auto &s : v) msg += " " + s + ";";
    throw std::invalid_argument(msg);
}

}  // namespace lbisim
