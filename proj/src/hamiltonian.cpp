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

#include "lbisim/hamiltonian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "lbisim/errors.hpp"
#include "lbisim/units.hpp"

namespace lbisim {

namespace {

SparseMatrix identity(int dim) {
    SparseMatrix id(dim, dim);
    id.setIdentity();
    return id;
}

SparseMatrix diagonal(const std::vector<double> &values) {
    SparseMatrix d(values.size(), values.size());
    std::vector<Eigen::Triplet<cdouble>> t;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0.0) t.emplace_back(i, i, values[i]);
    }
    d.setFromTriplets(t.begin(), t.end());
    return d;
}

void check_dense(const BasisLayout &layout) {
    if (layout.dimension() > kMaxDenseDimension) {
        throw DimensionError("basis dimension " + std::to_string(layout.dimension()) + " exceeds dense limit " +
                             std::to_string(kMaxDenseDimension));
    }
}

}  // namespace

BasisLayout::BasisLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    strides_.assign(subsystems_.size(), 1);
    dimension_ = 1;
    for (std::size_t k = subsystems_.size(); k-- > 0;) {
        if (subsystems_[k].dim < 1) throw DimensionError("subsystem '" + subsystems_[k].label + "' has dimension < 1");
        strides_[k] = dimension_;
        dimension_ *= static_cast<std::size_t>(subsystems_[k].dim);
    }
}

BasisLayout BasisLayout::of(const DeviceSpec &spec) {
    std::vector<Subsystem> subs;
    for (const auto &q : spec.qudits) subs.push_back({q.label, q.levels, false});
    for (const auto &m : spec.modes) subs.push_back({m.label, m.photons, true});
    return BasisLayout(std::move(subs));
}

std::optional<std::size_t> BasisLayout::find(std::string_view label) const {
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        if (subsystems_[k].label == label) return k;
    }
    return std::nullopt;
}

std::size_t BasisLayout::index(const std::vector<int> &occupation) const {
    if (occupation.size() != subsystems_.size()) throw DimensionError("occupation tuple has wrong length");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        if (occupation[k] < 0 || occupation[k] >= subsystems_[k].dim) {
            throw DimensionError("occupation out of range for '" + subsystems_[k].label + "'");
        }
        idx += static_cast<std::size_t>(occupation[k]) * strides_[k];
    }
    return idx;
}

std::vector<int> BasisLayout::occupation(std::size_t index) const {
    std::vector<int> occ(subsystems_.size());
    for (std::size_t k = 0; k < subsystems_.size(); ++k) occ[k] = occupation_of(index, k);
    return occ;
}

int BasisLayout::excitations(std::size_t index) const {
    int n = 0;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) n += occupation_of(index, k);
    return n;
}

bool BasisLayout::operator==(const BasisLayout &other) const {
    if (subsystems_.size() != other.subsystems_.size()) return false;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        const auto &a = subsystems_[k];
        const auto &b = other.subsystems_[k];
        if (a.label != b.label || a.dim != b.dim || a.is_mode != b.is_mode) return false;
    }
    return true;
}

SparseMatrix ladder(int dim) {
    if (dim < 1) throw DimensionError("ladder dimension must be >= 1");
    SparseMatrix a(dim, dim);
    std::vector<Eigen::Triplet<cdouble>> t;
    for (int k = 0; k + 1 < dim; ++k) t.emplace_back(k, k + 1, std::sqrt(double(k + 1)));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

OperatorMatrix annihilation(int dim) {
    if (dim < 2) throw DimensionError("annihilation operator needs dim >= 2, got " + std::to_string(dim));
    return {BasisLayout({{"", dim, false}}), Matrix(ladder(dim))};
}

SparseMatrix embed(const BasisLayout &layout, std::size_t k, const SparseMatrix &local) {
    std::size_t left = 1, right = 1;
    for (std::size_t m = 0; m < k; ++m) left *= layout[m].dim;
    for (std::size_t m = k + 1; m < layout.size(); ++m) right *= layout[m].dim;
    SparseMatrix tmp = Eigen::kroneckerProduct(identity(int(left)), local).eval();
    return Eigen::kroneckerProduct(tmp, identity(int(right))).eval();
}

SparseMatrix total_number(const BasisLayout &layout) {
    std::vector<double> n(layout.dimension());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = layout.excitations(i);
    return diagonal(n);
}

SparseMatrix build_static_sparse(const DeviceSpec &spec, double frame_ghz) {
    BasisLayout layout = BasisLayout::of(spec);
    const std::size_t nq = spec.qudits.size();

    std::vector<double> diag(layout.dimension(), 0.0);
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
        double e = 0.0;
        for (std::size_t q = 0; q < nq; ++q) {
            const auto &qd = spec.qudits[q];
            double n = layout.occupation_of(i, q);
            e += (qd.omega_q_ghz - frame_ghz) * n + 0.5 * qd.delta_ghz * n * (n - 1.0);
        }
        for (std::size_t m = 0; m < spec.modes.size(); ++m) {
            e += (spec.modes[m].omega_r_ghz - frame_ghz) * layout.occupation_of(i, nq + m);
        }
        diag[i] = e;
    }
    SparseMatrix h = diagonal(diag);

    std::vector<SparseMatrix> a(nq);
    for (std::size_t q = 0; q < nq; ++q) a[q] = embed(layout, q, ladder(spec.qudits[q].levels));

    for (const auto &c : spec.couplings) {
        std::size_t q = *spec.qudit_index(c.qubit);
        std::size_t m = *spec.mode_index(c.mode);
        SparseMatrix cl = embed(layout, nq + m, ladder(spec.modes[m].photons));
        SparseMatrix term = a[q] * SparseMatrix(cl.adjoint());
        h += mhz_to_ghz(c.g_mhz) * (term + SparseMatrix(term.adjoint()));
    }
    for (const auto &d : spec.direct) {
        std::size_t qa = *spec.qudit_index(d.qubit_a);
        std::size_t qb = *spec.qudit_index(d.qubit_b);
        SparseMatrix term = a[qa] * SparseMatrix(a[qb].adjoint());
        h += mhz_to_ghz(d.j0_mhz) * (term + SparseMatrix(term.adjoint()));
    }
    h.prune(cdouble(0.0));
    return h;
}

SparseMatrix mode_creation(const DeviceSpec &spec, std::string_view mode) {
    auto m = spec.mode_index(mode);
    if (!m) throw LabelError("unknown mode '" + std::string(mode) + "'");
    BasisLayout layout = BasisLayout::of(spec);
    return SparseMatrix(embed(layout, spec.qudits.size() + *m, ladder(spec.modes[*m].photons)).adjoint());
}

OperatorMatrix build_static(const DeviceSpec &spec) {
    BasisLayout layout = BasisLayout::of(spec);
    check_dense(layout);
    return {layout, Matrix(build_static_sparse(spec, 0.0))};
}

OperatorMatrix build_drive(const DeviceSpec &spec, std::string_view mode, const PulseEnvelope &envelope,
                           double t_ns, std::optional<double> drive_frequency_ghz) {
    const ModeSpec &m = spec.mode(mode);
    BasisLayout layout = BasisLayout::of(spec);
    check_dense(layout);
    double wd = drive_frequency_ghz ? *drive_frequency_ghz : m.omega_r_ghz + mhz_to_ghz(envelope.detuning_mhz);
    SparseMatrix h = build_static_sparse(spec, wd);
    cdouble eps = mhz_to_ghz(1.0) * envelope.complex_amplitude_mhz(t_ns);
    if (eps != 0.0) {
        SparseMatrix cdag = mode_creation(spec, mode);
        h += 0.5 * eps * cdag + 0.5 * std::conj(eps) * SparseMatrix(cdag.adjoint());
    }
    return {layout, Matrix(h)};
}

double hermiticity_error(const Matrix &h) { return (h - h.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace lbisim
