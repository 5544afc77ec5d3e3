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

#include "lbisim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "lbisim/errors.hpp"
#include "lbisim/units.hpp"

namespace lbisim {

namespace {

std::string describe(const std::vector<int> &occ) {
    std::string s = "|";
    for (int n : occ) s += std::to_string(n);
    return s + ">";
}

DeviceSpec oracle_device(const DeviceSpec &spec, const PairSpec &pair, const OracleOptions &options) {
    DeviceSpec sub = pair_subdevice(spec, pair);
    set_truncation(sub, options.levels, options.photons);
    return sub;
}

std::vector<int> pair_state(const BasisLayout &layout, int a, int b) {
    std::vector<int> occ(layout.size(), 0);
    occ[0] = a;
    occ[1] = b;
    return occ;
}

}  // namespace

std::size_t DressedSpectrum::index_of(const std::vector<int> &occupation) const {
    std::size_t bare = layout.index(occupation);
    if (label_of_bare[bare] < 0) {
        throw LabelingError("no dressed state overlaps " + describe(occupation) + " by more than " +
                            std::to_string(kLabelThreshold) + " (best " + std::to_string(overlap_of_bare[bare]) + ")");
    }
    return static_cast<std::size_t>(label_of_bare[bare]);
}

double DressedSpectrum::overlap(const std::vector<int> &occupation) const {
    index_of(occupation);
    return overlap_of_bare[layout.index(occupation)];
}

DressedSpectrum eigensystem(const OperatorMatrix &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
    DressedSpectrum out;
    out.layout = h.layout;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    const auto dim = static_cast<Eigen::Index>(h.layout.dimension());
    out.label_of_bare.assign(dim, -1);
    out.overlap_of_bare.assign(dim, 0.0);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Eigen::Index best = 0;
        double w = out.eigenvectors.col(j).cwiseAbs2().maxCoeff(&best);
        if (w > out.overlap_of_bare[best]) out.overlap_of_bare[best] = w;
        if (w > kLabelThreshold) out.label_of_bare[best] = static_cast<int>(j);
    }
    return out;
}

SectorOracle::SectorOracle(const DeviceSpec &spec) : layout_(BasisLayout::of(spec)), h_(build_static_sparse(spec)) {}

const SectorOracle::Sector &SectorOracle::sector(int n) {
    auto it = sectors_.find(n);
    if (it != sectors_.end()) return it->second;

    Sector s;
    std::vector<int> pos(layout_.dimension(), -1);
    for (std::size_t i = 0; i < layout_.dimension(); ++i) {
        if (layout_.excitations(i) == n) {
            pos[i] = static_cast<int>(s.basis.size());
            s.basis.push_back(i);
        }
    }
    const auto d = static_cast<Eigen::Index>(s.basis.size());
    Matrix block = Matrix::Zero(d, d);
    for (int k = 0; k < h_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator e(h_, k); e; ++e) {
            int r = pos[e.row()], c = pos[e.col()];
            if (r >= 0 && c >= 0) block(r, c) = e.value();
        }
    }
    if (d > 0) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(block);
        if (solver.info() != Eigen::Success) throw Error("sector eigensolver failed");
        s.energies = solver.eigenvalues();
        s.vectors = solver.eigenvectors();
    }
    s.label.assign(d, -1);
    s.weight.assign(d, 0.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::Index best = 0;
        double w = s.vectors.col(j).cwiseAbs2().maxCoeff(&best);
        s.weight[best] = std::max(s.weight[best], w);
        if (w > kLabelThreshold) s.label[best] = static_cast<int>(j);
    }
    return sectors_.emplace(n, std::move(s)).first->second;
}

std::size_t SectorOracle::locate(const std::vector<int> &occupation, int *n, std::size_t *pos) {
    std::size_t bare = layout_.index(occupation);
    *n = layout_.excitations(bare);
    const Sector &s = sector(*n);
    auto it = std::lower_bound(s.basis.begin(), s.basis.end(), bare);
    *pos = static_cast<std::size_t>(it - s.basis.begin());
    if (s.label[*pos] < 0) {
        throw LabelingError("no dressed state overlaps " + describe(occupation) + " by more than " +
                            std::to_string(kLabelThreshold) + " (best " + std::to_string(s.weight[*pos]) + ")");
    }
    return static_cast<std::size_t>(s.label[*pos]);
}

double SectorOracle::energy(const std::vector<int> &occupation) {
    int n;
    std::size_t pos;
    std::size_t col = locate(occupation, &n, &pos);
    return sectors_.at(n).energies[col];
}

double SectorOracle::overlap(const std::vector<int> &occupation) {
    int n;
    std::size_t pos;
    std::size_t col = locate(occupation, &n, &pos);
    return std::norm(sectors_.at(n).vectors(pos, col));
}

Vector SectorOracle::state(const std::vector<int> &occupation) {
    int n;
    std::size_t pos;
    std::size_t col = locate(occupation, &n, &pos);
    const Sector &s = sectors_.at(n);
    Vector v = Vector::Zero(layout_.dimension());
    for (std::size_t i = 0; i < s.basis.size(); ++i) v[s.basis[i]] = s.vectors(i, col);
    // Fix the gauge so the labeling component is real and positive.
    cdouble ref = v[s.basis[pos]];
    return v * (std::abs(ref) / ref);
}

double exact_zz_khz(const DeviceSpec &spec, const PairSpec &pair, OracleOptions options) {
    SectorOracle oracle(oracle_device(spec, pair, options));
    const auto &L = oracle.layout();
    double e00 = oracle.energy(pair_state(L, 0, 0));
    double e10 = oracle.energy(pair_state(L, 1, 0));
    double e01 = oracle.energy(pair_state(L, 0, 1));
    double e11 = oracle.energy(pair_state(L, 1, 1));
    return kKhzPerGhz * (e11 - e10 - e01 + e00);
}

AvoidedCrossing exact_crossing(const DeviceSpec &spec, const PairSpec &pair, double window_mhz,
                               OracleOptions options) {
    DeviceSpec sub = oracle_device(spec, pair, options);
    const double center = sub.qudits[1].omega_q_ghz;
    const double w = mhz_to_ghz(window_mhz);

    struct Point {
        double splitting;
        double sign;
    };
    auto evaluate = [&](double omega_a) {
        DeviceSpec d = sub;
        d.qudits[0].omega_q_ghz = omega_a;
        SectorOracle oracle(d);
        const auto &s = oracle.sector(1);
        const auto &L = oracle.layout();
        auto find = [&](std::size_t bare) {
            return static_cast<Eigen::Index>(std::lower_bound(s.basis.begin(), s.basis.end(), bare) - s.basis.begin());
        };
        Eigen::Index p10 = find(L.index(pair_state(L, 1, 0)));
        Eigen::Index p01 = find(L.index(pair_state(L, 0, 1)));
        Eigen::Index first = -1, second = -1;
        double w1 = -1, w2 = -1;
        for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) {
            double wj = std::norm(s.vectors(p10, j)) + std::norm(s.vectors(p01, j));
            if (wj > w1) {
                second = first;
                w2 = w1;
                first = j;
                w1 = wj;
            } else if (wj > w2) {
                second = j;
                w2 = wj;
            }
        }
        Eigen::Index lower = s.energies[first] < s.energies[second] ? first : second;
        double character = std::real(s.vectors(p10, lower) * std::conj(s.vectors(p01, lower)));
        return Point{std::abs(s.energies[first] - s.energies[second]), character < 0 ? 1.0 : -1.0};
    };

    const int n = 101;
    std::vector<double> xs(n), fs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = center - w + 2.0 * w * i / (n - 1);
        fs[i] = evaluate(xs[i]).splitting;
    }
    int best = static_cast<int>(std::min_element(fs.begin(), fs.end()) - fs.begin());
    if (best == 0 || best == n - 1) {
        throw WindowError("splitting minimum at the edge of the +/-" + std::to_string(window_mhz) +
                          " MHz window; widen it");
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = xs[best - 1], hi = xs[best + 1];
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = evaluate(x1).splitting, f2 = evaluate(x2).splitting;
    while (hi - lo > 1e-11) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = evaluate(x1).splitting;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = evaluate(x2).splitting;
        }
    }
    double x = 0.5 * (lo + hi);
    Point p = evaluate(x);
    AvoidedCrossing out;
    out.omega_a_ghz = x;
    out.min_splitting_mhz = ghz_to_mhz(p.splitting);
    out.j_mhz = p.sign * 0.5 * out.min_splitting_mhz;
    return out;
}

double exact_mode_frequency_ghz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, int level_a,
                                int level_b, OracleOptions options) {
    DeviceSpec sub = oracle_device(spec, pair, options);
    SectorOracle oracle(sub);
    const auto &L = oracle.layout();
    auto k = L.find(mode);
    if (!k) throw LabelError("mode '" + std::string(mode) + "' is not on pair " + pair.name());
    std::vector<int> occ = pair_state(L, level_a, level_b);
    double e0 = oracle.energy(occ);
    occ[*k] = 1;
    return oracle.energy(occ) - e0;
}

double exact_number_splitting_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view qubit,
                                  std::string_view mode, OracleOptions options) {
    bool first = qubit == pair.qubit_a;
    if (!first && qubit != pair.qubit_b) throw LabelError("qubit '" + std::string(qubit) + "' not in pair");
    double w0 = exact_mode_frequency_ghz(spec, pair, mode, 0, 0, options);
    double w1 = exact_mode_frequency_ghz(spec, pair, mode, first ? 1 : 0, first ? 0 : 1, options);
    return ghz_to_mhz(w1 - w0);
}

}  // namespace lbisim
