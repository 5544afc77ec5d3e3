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
#include <string_view>
#include <vector>

#include "lbisim/hamiltonian.hpp"
#include "lbisim/model.hpp"

namespace lbisim {

// A bare state labels a dressed state only when their overlap exceeds this.
inline constexpr double kLabelThreshold = 0.5;

struct DressedSpectrum {
    BasisLayout layout;
    Eigen::VectorXd eigenvalues;  // GHz, ascending
    Matrix eigenvectors;          // columns match eigenvalues
    // bare index -> eigen index, -1 where no dressed state overlaps > threshold
    std::vector<int> label_of_bare;
    std::vector<double> overlap_of_bare;

    /// Eigen index labeled by the bare occupation tuple; throws LabelingError.
    std::size_t index_of(const std::vector<int> &occupation) const;
    double energy(const std::vector<int> &occupation) const { return eigenvalues[index_of(occupation)]; }
    double overlap(const std::vector<int> &occupation) const;
};

DressedSpectrum eigensystem(const OperatorMatrix &h);

/// Diagonalizes the static Hamiltonian of `spec` one excitation-number sector at a time.
/// The static Hamiltonian conserves total excitation number, so each sector is exact.
class SectorOracle {
   public:
    explicit SectorOracle(const DeviceSpec &spec);

    const BasisLayout &layout() const { return layout_; }

    /// Dressed energy (GHz, lab frame) of the state labeled by `occupation`.
    double energy(const std::vector<int> &occupation);
    /// Dressed eigenvector in the full basis.
    Vector state(const std::vector<int> &occupation);
    /// Overlap |<bare|dressed>|^2 of the labeled state.
    double overlap(const std::vector<int> &occupation);

    struct Sector {
        std::vector<std::size_t> basis;  // full-basis indices
        Eigen::VectorXd energies;
        Matrix vectors;                  // in sector basis
        std::vector<int> label;          // position in `basis` -> eigen column or -1
        std::vector<double> weight;
    };
    const Sector &sector(int n);

   private:
    std::size_t locate(const std::vector<int> &occupation, int *n, std::size_t *pos);

    BasisLayout layout_;
    SparseMatrix h_;
    std::map<int, Sector> sectors_;
};

struct OracleOptions {
    int levels = 4;
    int photons = 5;
};

/// E11 - E10 - E01 + E00 of the pair subsystem with all modes in vacuum, kHz.
double exact_zz_khz(const DeviceSpec &spec, const PairSpec &pair, OracleOptions options = {});

struct AvoidedCrossing {
    double j_mhz = 0.0;
    double omega_a_ghz = 0.0;
    double min_splitting_mhz = 0.0;
};

/// Sweeps the first qubit of the pair across the second (+/- window) and returns half
/// the minimum single-excitation splitting, signed by the character of the lower state.
AvoidedCrossing exact_crossing(const DeviceSpec &spec, const PairSpec &pair, double window_mhz = 50.0,
                               OracleOptions options = {});

inline double exact_j_mhz(const DeviceSpec &spec, const PairSpec &pair, double window_mhz = 50.0,
                          OracleOptions options = {}) {
    return exact_crossing(spec, pair, window_mhz, options).j_mhz;
}

/// Dressed frequency of `mode` (one-photon minus zero-photon energy) with the pair's
/// qudits in the given levels and every other mode empty, GHz.
double exact_mode_frequency_ghz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, int level_a,
                                int level_b, OracleOptions options = {});

/// Exact number-splitting shift of `mode` when the given qubit of the pair goes 0 -> 1, MHz.
double exact_number_splitting_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view qubit,
                                  std::string_view mode, OracleOptions options = {});

}  // namespace lbisim
