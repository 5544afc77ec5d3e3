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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbisim/model.hpp"

namespace lbisim {

/// Collects non-fatal warnings (weak dispersive validity, skipped terms).
struct Diagnostics {
    std::vector<std::string> warnings;
};

// |g / denominator| at or above this is rejected; above kDispersiveWarn it is flagged.
inline constexpr double kDispersiveLimit = 0.3;
inline constexpr double kDispersiveWarn = 0.1;

/// Per-photon dispersive slope of qudit level k against `mode`:
/// chi_k = g^2 (delta - a) / [(a + k delta)(a + (k-1) delta)], a = omega_q - omega_r.
double chi_mhz(const QuditSpec &qubit, int k, const ModeSpec &mode, double g_mhz, Diagnostics *diag = nullptr);

/// Number-splitting shift chi_1 - chi_0 = 2 g^2 delta / [a (a + delta)]: how far the
/// mode line moves when the qubit goes from |0> to |1>. This is what a measured
/// "2 chi" refers to.
double number_splitting_mhz(const QuditSpec &qubit, const ModeSpec &mode, double g_mhz, Diagnostics *diag = nullptr);

/// Lamb-shifted energy of level k of `qubit`, summed over every mode it couples to.
double dressed_frequency_ghz(const DeviceSpec &spec, std::string_view qubit, int k, Diagnostics *diag = nullptr);

/// Mode-mediated exchange between level transitions j->j+1 on qubit a and k->k+1 on b.
double j_mode_levels_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, int j, int k);

/// j_mode_levels_mhz at j = k = 0.
double j_mode_qubit_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode);

/// J0 plus every bus-mode contribution of the pair.
double j_total_mhz(const DeviceSpec &spec, const PairSpec &pair);

/// zeta = -2 J^2 (d1 + d2) / [(d1 + D12)(d2 - D12)], inputs in MHz, result in kHz.
double static_zz_khz(double j_mhz, double delta1_mhz, double delta2_mhz, double detuning12_mhz);

/// static_zz_khz with J = j_total and qubit parameters from the device; D12 = omega_a - omega_b.
double static_zz_khz(const DeviceSpec &spec, const PairSpec &pair);

struct Estimate {
    double value = 0.0;
    double sigma = 0.0;
};

/// |g| from a signed number-splitting shift (chi_1 - chi_0), signed by `sign`.
/// Uncertainty is first-order in the shift and, optionally, the qubit frequency.
Estimate infer_g_from_chi(double measured_2chi_mhz, double sigma_2chi_mhz, const QuditSpec &qubit,
                          const ModeSpec &mode, int sign, double sigma_omega_q_ghz = 0.0);

/// |g| from a single level's slope chi_k.
double infer_g_from_level_shift(double chi_k_mhz, int k, const QuditSpec &qubit, const ModeSpec &mode, int sign);

/// |J| (MHz) reproducing a measured static ZZ (kHz).
double infer_j_from_zz_mhz(double zz_khz, double delta1_mhz, double delta2_mhz, double detuning12_mhz);

/// J0 = J - sum_l J_l.
double infer_j0_mhz(const DeviceSpec &spec, const PairSpec &pair, double measured_j_mhz);

struct ChiEntry {
    std::string qubit;
    std::string mode;
    int level = 0;
    double chi_mhz = 0.0;
};

struct SplittingEntry {
    std::string qubit;
    std::string mode;
    double two_chi_mhz = 0.0;
};

struct PairReport {
    std::string pair;
    std::string qubit_a;
    std::string qubit_b;
    std::vector<std::pair<std::string, double>> j_modes_mhz;
    double j0_mhz = 0.0;
    double j_total_mhz = 0.0;
    double zz_static_khz = 0.0;
    double detuning_mhz = 0.0;
    bool singular = false;
    std::vector<std::string> errors;
};

struct DispersiveReport {
    std::vector<ChiEntry> chi;
    std::vector<SplittingEntry> splitting;
    std::map<std::string, double> dressed_freq_ghz;
    std::vector<PairReport> pairs;
    std::vector<std::string> warnings;
};

/// Every pair of the device (or only `pair_name`); singular terms are flagged per pair.
DispersiveReport dispersive_report(const DeviceSpec &spec, std::string_view pair_name = {});

}  // namespace lbisim
