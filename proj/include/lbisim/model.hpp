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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lbisim {

inline constexpr int kDefaultQuditLevels = 3;
inline constexpr int kDefaultModePhotons = 4;

struct QuditSpec {
    std::string label;
    double omega_q_ghz = 0.0;
    double delta_ghz = 0.0;
    int levels = kDefaultQuditLevels;
    bool assumed = false;

    bool operator==(const QuditSpec &) const = default;
};

struct ModeSpec {
    std::string label;
    double omega_r_ghz = 0.0;
    // Fock-space dimension (number of photon states kept).
    int photons = kDefaultModePhotons;
    bool assumed = false;

    bool operator==(const ModeSpec &) const = default;
};

struct CouplingSpec {
    std::string qubit;
    std::string mode;
    double g_mhz = 0.0;
    bool assumed = false;

    bool operator==(const CouplingSpec &) const = default;
};

struct DirectCouplingSpec {
    std::string qubit_a;
    std::string qubit_b;
    double j0_mhz = 0.0;
    bool assumed = false;

    bool operator==(const DirectCouplingSpec &) const = default;
};

struct PairSpec {
    std::string qubit_a;
    std::string qubit_b;
    std::vector<std::string> modes;
    // Empty means "<a>_<b>".
    std::string label;

    std::string name() const { return label.empty() ? qubit_a + "_" + qubit_b : label; }
    bool operator==(const PairSpec &) const = default;
};

struct DeviceSpec {
    std::string name;
    std::vector<QuditSpec> qudits;
    std::vector<ModeSpec> modes;
    std::vector<CouplingSpec> couplings;
    std::vector<DirectCouplingSpec> direct;
    std::vector<PairSpec> pairs;

    const QuditSpec &qudit(std::string_view label) const;
    const ModeSpec &mode(std::string_view label) const;
    QuditSpec &qudit(std::string_view label);
    ModeSpec &mode(std::string_view label);
    std::optional<std::size_t> qudit_index(std::string_view label) const;
    std::optional<std::size_t> mode_index(std::string_view label) const;

    /// Signed g for (qubit, mode); 0 when no coupling is declared.
    double g_mhz(std::string_view qubit, std::string_view mode) const;
    /// Sum of direct couplings declared between a and b in either order.
    double j0_mhz(std::string_view a, std::string_view b) const;

    /// Pair by name ("<a>_<b>" or explicit label); the reversed "<b>_<a>" also resolves.
    const PairSpec &pair(std::string_view name) const;

    bool operator==(const DeviceSpec &) const = default;
};

/// Parses device JSON without cross-reference checks.
DeviceSpec parse_device(std::string_view text, std::string_view source = "<string>");

/// Reads, parses and validates; throws ParseError or ValidationError.
DeviceSpec load_device(const std::filesystem::path &path);

/// One line per broken invariant, each naming the offending element.
std::vector<std::string> validate(const DeviceSpec &spec);

/// Inverse of parse_device; stable key order and full double precision.
std::string serialize_device(const DeviceSpec &spec);

/// The two qudits of `pair`, its bus modes, their couplings and the pair's direct coupling.
DeviceSpec pair_subdevice(const DeviceSpec &spec, const PairSpec &pair);

/// Overrides every truncation in place; values <= 0 leave that kind untouched.
void set_truncation(DeviceSpec &spec, int levels, int photons);

}  // namespace lbisim
