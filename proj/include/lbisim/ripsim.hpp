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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbisim/dispersive.hpp"
#include "lbisim/model.hpp"
#include "lbisim/propagator.hpp"
#include "lbisim/pulse.hpp"

namespace lbisim {

struct RipOptions {
    int levels = 3;
    // Fock states of the driven mode, counted in the frame displaced by the classical field.
    int driven_photons = 6;
    int spectator_photons = 3;
    PropagatorOptions propagator;
    double amplitude_cap_mhz = 500.0;
    // Calibration stops once |phase - target| falls below this.
    double calibration_tolerance_rad = 1e-4;
    int max_calibration_iterations = 16;
    int threads = 0;
    // Integrate with the Dormand-Prince reference path instead (slow; for cross-checks).
    bool reference_integrator = false;
};

struct GateResult {
    // Drive-induced conditional phase relative to free evolution under the static
    // Hamiltonian, wrapped to (-pi, pi], plus its continuously tracked value.
    double conditional_phase_rad = 0.0;
    double conditional_phase_unwrapped_rad = 0.0;
    // Virtual Z angles (qubit a, qubit b) that maximize the fidelity to CZ.
    std::array<double, 2> single_qubit_phases_rad{0.0, 0.0};
    std::vector<std::pair<std::string, double>> residual_photons;
    double leakage = 0.0;
    double fidelity = 0.0;
    // Drive frequency and the dressed mode frequency the detuning refers to.
    double drive_frequency_ghz = 0.0;
    double dressed_mode_ghz = 0.0;
    double max_norm_error = 0.0;
    long steps = 0;
    PulseEnvelope pulse;
};

/// Simulates the four computational states of `pair` under a detuned drive on `mode`.
/// The pulse detuning refers to the dressed frequency of `mode` with both qubits in |0>.
GateResult simulate_rip(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                        const PulseEnvelope &pulse, const RipOptions &options = {});

/// Closed-form RIP rate -eps^2 chi^2 / [8 D (D + 2 chi)(D + 4 chi)], MHz inputs, rad/ns.
double analytic_rip_rate(double epsilon0_mhz, double chi_mhz, double detuning_mhz);

/// Conditional-phase rate in this library's conventions (drive term (eps/2)(c + c^dag),
/// phase arg11 - arg10 - arg01 + arg00): the adiabatic dispersive limit gives
/// -2 eps^2 chi^2 / [D (D + 2 chi)(D + 4 chi)], which is kRipConventionFactor times
/// analytic_rip_rate.
inline constexpr double kRipConventionFactor = 16.0;
double conditional_phase_rate(double epsilon0_mhz, double chi_mhz, double detuning_mhz);

/// Time integral of conditional_phase_rate over the pulse envelope, rad.
double predicted_conditional_phase(const PulseEnvelope &pulse, double chi_mhz);

/// Peak amplitude for which analytic_rip_rate integrated over a flat pulse of length
/// t_g gives |target|.
double analytic_epsilon_for_phase(double target_rad, double chi_mhz, double detuning_mhz, double t_g_ns);

/// chi entering the RIP rate: minus half the exact number-splitting shift of `mode`,
/// averaged over the two qubits of the pair, MHz.
double rip_chi_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                   const RipOptions &options = {});

/// Finds epsilon0 so that |conditional phase| = target. `shape_of` supplies t_g,
/// detuning, rise and shape; its amplitude is ignored.
PulseEnvelope calibrate_amplitude(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                                  const PulseEnvelope &shape_of, double target_rad, const RipOptions &options = {},
                                  GateResult *result = nullptr);

struct BandwidthRule {
    // detuning = sign * c / t_g when scale_detuning, else fixed_detuning_mhz.
    double c_mhz_ns = 24000.0;
    double sign = -1.0;
    bool scale_detuning = true;
    double fixed_detuning_mhz = -30.0;
    double rise_fraction = 0.25;
    PulseShape shape = PulseShape::CosineSquared;

    PulseEnvelope pulse_for(double t_g_ns) const;
};

struct ScalingFit {
    std::vector<double> t_g_ns;
    std::vector<double> epsilon0_mhz;
    // Least-squares slope of log eps0^2 against log t_g.
    double exponent = 0.0;
};

double fit_log_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Calibrates a pi gate at every t_g and fits the power law.
ScalingFit power_scaling_sweep(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                               const std::vector<double> &t_g_list, const BandwidthRule &rule,
                               double target_rad = 3.141592653589793, const RipOptions &options = {});

/// Same sweep with the closed-form rate in place of simulation.
ScalingFit analytic_power_scaling(double chi_mhz, const std::vector<double> &t_g_list, const BandwidthRule &rule,
                                  double target_rad = 3.141592653589793);

/// Largest population of |01> (modes traced out) seen while driving from |10> x vacuum.
double drive_induced_swap_check(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                                const PulseEnvelope &pulse, const RipOptions &options = {});

/// 1 - prod_q (1/6)(3 + exp(-t/T1) + 2 exp(-t/T2)); times in us, gate time in ns.
double coherence_limited_epg(double t1_a_us, double t2_a_us, double t1_b_us, double t2_b_us, double t_g_ns,
                             Diagnostics *diag = nullptr);

}  // namespace lbisim
