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

#include "lbisim/design.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lbisim/dispersive.hpp"
#include "lbisim/errors.hpp"
#include "lbisim/parallel.hpp"

namespace lbisim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool near_pole(const DeviceSpec &spec, const PairSpec &pair, double omega) {
    for (const auto &m : pair.modes) {
        if (std::abs(omega - spec.mode(m).omega_r_ghz) < kPoleExclusionGhz) return true;
    }
    return false;
}

SweepCurve sweep(const DeviceSpec &spec, const PairSpec &pair, const std::vector<double> &grid,
                 const std::string &quantity, int threads) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("sweep grid must be strictly increasing");
    }
    SweepCurve c;
    c.quantity = quantity;
    c.freq_ghz = grid;
    const bool zz = quantity == "zz";
    c.evaluate = [spec, pair, zz](double omega) {
        DeviceSpec d = at_degenerate_frequency(spec, pair, omega);
        return zz ? static_zz_khz(d, pair) : j_total_mhz(d, pair);
    };
    auto values = parallel_map(
        grid.size(),
        [&](std::size_t i) -> double {
            if (near_pole(spec, pair, grid[i])) return kNaN;
            try {
                return c.evaluate(grid[i]);
            } catch (const SingularityError &) {
                return kNaN;
            }
        },
        threads);
    c.value = values;
    for (double v : values) c.is_pole.push_back(std::isnan(v));
    return c;
}

template <typename Pred>
std::vector<Window> runs(const SweepCurve &c, Pred &&inside) {
    std::vector<Window> out;
    std::optional<std::size_t> start;
    for (std::size_t i = 0; i <= c.freq_ghz.size(); ++i) {
        bool in = i < c.freq_ghz.size() && !c.is_pole[i] && inside(c.value[i]);
        if (in && !start) start = i;
        if (!in && start) {
            out.push_back({c.freq_ghz[*start], c.freq_ghz[i - 1]});
            start.reset();
        }
    }
    return out;
}

}  // namespace

std::vector<double> SweepCurve::poles() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < freq_ghz.size(); ++i) {
        if (is_pole[i]) out.push_back(freq_ghz[i]);
    }
    return out;
}

std::vector<double> linear_grid(double from_ghz, double to_ghz, int points) {
    if (points < 2 || !(to_ghz > from_ghz)) throw std::invalid_argument("grid needs from < to and >= 2 points");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = from_ghz + (to_ghz - from_ghz) * i / (points - 1);
    return g;
}

DeviceSpec at_degenerate_frequency(const DeviceSpec &spec, const PairSpec &pair, double omega_ghz) {
    DeviceSpec d = spec;
    d.qudit(pair.qubit_a).omega_q_ghz = omega_ghz;
    d.qudit(pair.qubit_b).omega_q_ghz = omega_ghz;
    return d;
}

SweepCurve j_vs_frequency(const DeviceSpec &spec, const PairSpec &pair, const std::vector<double> &grid_ghz,
                          int threads) {
    return sweep(spec, pair, grid_ghz, "j", threads);
}

SweepCurve zz_vs_frequency(const DeviceSpec &spec, const PairSpec &pair, const std::vector<double> &grid_ghz,
                           int threads) {
    return sweep(spec, pair, grid_ghz, "zz", threads);
}

std::vector<double> find_zero_crossings(const SweepCurve &curve) {
    std::vector<double> roots;
    const auto &x = curve.freq_ghz;
    const auto &v = curve.value;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (curve.is_pole[i]) continue;
        if (v[i] == 0.0) {
            roots.push_back(x[i]);
            continue;
        }
        if (curve.is_pole[i + 1] || !(v[i] * v[i + 1] < 0.0)) continue;
        if (!curve.evaluate) {
            roots.push_back(x[i] - v[i] * (x[i + 1] - x[i]) / (v[i + 1] - v[i]));
            continue;
        }
        double lo = x[i], hi = x[i + 1], flo = v[i];
        while (hi - lo > kRootToleranceGhz) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            double fm = curve.evaluate(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    if (!x.empty() && !curve.is_pole.back() && v.back() == 0.0) roots.push_back(x.back());
    return roots;
}

std::optional<Window> widest_window(const SweepCurve &curve, double threshold) {
    std::optional<Window> best;
    for (const auto &w : runs(curve, [&](double y) { return std::abs(y) <= threshold; })) {
        if (!best || w.width_mhz() > best->width_mhz()) best = w;
    }
    return best;
}

std::optional<Window> window_around(const SweepCurve &curve, double at_ghz, double threshold) {
    for (const auto &w : runs(curve, [&](double y) { return std::abs(y) <= threshold; })) {
        double step = curve.freq_ghz.size() > 1 ? curve.freq_ghz[1] - curve.freq_ghz[0] : 0.0;
        if (at_ghz >= w.lo_ghz - step && at_ghz <= w.hi_ghz + step) return w;
    }
    return std::nullopt;
}

std::string to_string(SchemeVariant variant) {
    switch (variant) {
        case SchemeVariant::SingleMode:
            return "single_mode";
        case SchemeVariant::Narrow:
            return "narrow";
        case SchemeVariant::Broadband:
            return "broadband";
        case SchemeVariant::Lbi:
            return "lbi";
    }
    return "?";
}

std::vector<std::string> SchemeSpec::violations() const {
    std::vector<std::string> out;
    const bool one = variant == SchemeVariant::SingleMode || variant == SchemeVariant::Narrow;
    const bool wants_j0 = variant == SchemeVariant::Narrow || variant == SchemeVariant::Lbi;
    std::string who = to_string(variant) + ": ";
    if (mode_ghz.size() != (one ? 1u : 2u)) out.push_back(who + "wrong number of modes");
    if (g_mhz.size() != mode_ghz.size()) out.push_back(who + "need one coupling pair per mode");
    if (wants_j0 && j0_mhz == 0.0) out.push_back(who + "J0 must be nonzero");
    if (!wants_j0 && j0_mhz != 0.0) out.push_back(who + "J0 must be zero");
    for (double w : mode_ghz) {
        if (!(w > 0)) out.push_back(who + "mode frequency must be positive");
    }
    return out;
}

DeviceSpec SchemeSpec::device() const {
    auto v = violations();
    if (!v.empty()) throw std::invalid_argument(v.front());
    DeviceSpec d;
    d.name = to_string(variant);
    d.qudits = {{"a", 4.5, delta_ghz, 3, false}, {"b", 4.5, delta_ghz, 3, false}};
    PairSpec p{"a", "b", {}, ""};
    for (std::size_t l = 0; l < mode_ghz.size(); ++l) {
        std::string label = "m" + std::to_string(l + 1);
        d.modes.push_back({label, mode_ghz[l], kDefaultModePhotons, false});
        d.couplings.push_back({"a", label, g_mhz[l][0], false});
        d.couplings.push_back({"b", label, g_mhz[l][1], false});
        p.modes.push_back(label);
    }
    if (j0_mhz != 0.0) d.direct.push_back({"a", "b", j0_mhz, false});
    d.pairs.push_back(p);
    return d;
}

std::vector<SchemeSpec> example_schemes() {
    const double target = 4.5;
    auto cancel = [&](SchemeSpec s) {
        s.j0_mhz = 0.0;
        SchemeVariant keep = s.variant;
        s.variant = keep == SchemeVariant::Narrow ? SchemeVariant::SingleMode : SchemeVariant::Broadband;
        DeviceSpec d = at_degenerate_frequency(s.device(), PairSpec{"a", "b", {}, ""}, target);
        s.j0_mhz = -j_total_mhz(d, d.pairs.front());
        s.variant = keep;
        return s;
    };
    SchemeSpec single{SchemeVariant::SingleMode, {6.0}, {{95.0, 95.0}}, 0.0};
    SchemeSpec narrow = cancel({SchemeVariant::Narrow, {6.0}, {{95.0, 95.0}}, 0.0});
    SchemeSpec broad{SchemeVariant::Broadband, {6.0, 6.3}, {{60.0, -60.0}, {60.0, 60.0}}, 0.0};
    SchemeSpec lbi = cancel({SchemeVariant::Lbi, {6.017, 6.310}, {{81.0, -77.0}, {109.0, 108.0}}, 0.0});
    return {single, narrow, broad, lbi};
}

std::vector<SchemeSignature> scheme_comparison(const std::vector<SchemeSpec> &schemes,
                                               const std::vector<double> &grid_ghz) {
    std::vector<SchemeSignature> out;
    for (const auto &s : schemes) {
        DeviceSpec d = s.device();
        const PairSpec &pair = d.pairs.front();
        SchemeSignature sig{s.variant, j_vs_frequency(d, pair, grid_ghz, 1), {}, {}, 0.0, 0.0, 0.0, false};
        sig.roots = find_zero_crossings(sig.curve);
        sig.window = widest_window(sig.curve, kBroadbandThresholdMhz);
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < grid_ghz.size(); ++i) {
            if (sig.curve.is_pole[i]) continue;
            double j = sig.curve.value[i];
            sig.max_abs_j_mhz = std::max(sig.max_abs_j_mhz, std::abs(j));
            pos |= j > 0;
            neg |= j < 0;
            DeviceSpec at = at_degenerate_frequency(d, pair, grid_ghz[i]);
            double scale = 0.0;
            for (const auto &m : pair.modes) scale += std::abs(j_mode_qubit_mhz(at, pair, m));
            sig.mode_coupling_scale_mhz = std::max(sig.mode_coupling_scale_mhz, scale);
        }
        sig.one_signed = !(pos && neg);
        if (!sig.roots.empty() && sig.mode_coupling_scale_mhz > 0) {
            double r = sig.roots.front(), h = 1e-4;
            double slope = (sig.curve.evaluate(r + h) - sig.curve.evaluate(r - h)) / (2 * h);
            sig.normalized_slope_per_ghz = std::abs(slope) / sig.mode_coupling_scale_mhz;
        }
        out.push_back(std::move(sig));
    }
    return out;
}

}  // namespace lbisim
