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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lbisim/model.hpp"
#include "lbisim/pulse.hpp"

namespace lbisim {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<cdouble>;

// Dense builders refuse bases larger than this.
inline constexpr std::size_t kMaxDenseDimension = 4096;

struct Subsystem {
    std::string label;
    int dim = 1;
    bool is_mode = false;
};

/// Tensor-product basis. Subsystems are ordered qudits first, then modes, each in
/// declaration order. The flat index is row-major in the occupation tuple: the last
/// subsystem varies fastest, so index = sum_k n_k * stride_k with
/// stride_k = prod_{m > k} dim_m.
class BasisLayout {
   public:
    BasisLayout() = default;
    explicit BasisLayout(std::vector<Subsystem> subsystems);
    static BasisLayout of(const DeviceSpec &spec);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return subsystems_.size(); }
    const Subsystem &operator[](std::size_t k) const { return subsystems_[k]; }
    const std::vector<Subsystem> &subsystems() const { return subsystems_; }
    std::size_t stride(std::size_t k) const { return strides_[k]; }
    std::optional<std::size_t> find(std::string_view label) const;

    std::size_t index(const std::vector<int> &occupation) const;
    std::vector<int> occupation(std::size_t index) const;
    int occupation_of(std::size_t index, std::size_t k) const {
        return static_cast<int>((index / strides_[k]) % subsystems_[k].dim);
    }
    int excitations(std::size_t index) const;

    bool operator==(const BasisLayout &other) const;

   private:
    std::vector<Subsystem> subsystems_;
    std::vector<std::size_t> strides_;
    std::size_t dimension_ = 1;
};

/// Entries are frequencies in GHz (energy / h).
struct OperatorMatrix {
    BasisLayout layout;
    Matrix entries;
};

/// Lowering operator on a single subsystem; dim >= 2.
OperatorMatrix annihilation(int dim);

/// Lowering operator allowing dim == 1 (the zero operator).
SparseMatrix ladder(int dim);

/// Identity on every subsystem except `k`, which gets `local`.
SparseMatrix embed(const BasisLayout &layout, std::size_t k, const SparseMatrix &local);

/// Total excitation number, diagonal.
SparseMatrix total_number(const BasisLayout &layout);

/// Static Hamiltonian in the frame rotating at `frame_ghz` for every excitation
/// (frame 0 gives the lab frame).
SparseMatrix build_static_sparse(const DeviceSpec &spec, double frame_ghz = 0.0);

/// c^dag of `mode` embedded in the full basis.
SparseMatrix mode_creation(const DeviceSpec &spec, std::string_view mode);

OperatorMatrix build_static(const DeviceSpec &spec);

/// Full rotating-frame Hamiltonian at time t: the static part in the frame of the
/// drive plus (eps(t)/2)(e^{i phi} c^dag + e^{-i phi} c). Without an explicit drive
/// frequency, omega_d = omega_r(mode) + detuning with the bare mode frequency.
OperatorMatrix build_drive(const DeviceSpec &spec, std::string_view mode, const PulseEnvelope &envelope,
                           double t_ns, std::optional<double> drive_frequency_ghz = std::nullopt);

/// max |H - H^dag| entry.
double hermiticity_error(const Matrix &h);

}  // namespace lbisim
