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

#include "lbisim/dispersive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lbisim/errors.hpp"
#include "lbisim/units.hpp"

namespace lbisim {

namespace {

double checked(double denom_ghz, const std::string &what) {
    if (std::abs(denom_ghz) < kSingularityToleranceGhz) {
        throw SingularityError("resonant denominator " + what + " (" + std::to_string(ghz_to_mhz(denom_ghz)) +
                               " MHz)");
    }
    return denom_ghz;
}

void check_validity(double g_ghz, double denom_ghz, const std::string &what, Diagnostics *diag) {
    double ratio = std::abs(g_ghz / denom_ghz);
    if (ratio >= kDispersiveLimit) {
        throw ValidityError("dispersive expansion invalid for " + what + ": |g/detuning| = " + std::to_string(ratio));
    }
    if (ratio > kDispersiveWarn && diag) {
        diag->warnings.push_back("weak dispersive validity for " + what + ": |g/detuning| = " + std::to_string(ratio));
    }
}

std::string level_name(const QuditSpec &q, int k, const ModeSpec &m) {
    return q.label + " level " + std::to_string(k) + " / mode " + m.label;
}

}  // namespace

double chi_mhz(const QuditSpec &qubit, int k, const ModeSpec &mode, double g_mhz, Diagnostics *diag) {
    if (g_mhz == 0.0) return 0.0;
    const double g = mhz_to_ghz(g_mhz);
    const double a = qubit.omega_q_ghz - mode.omega_r_ghz;
    const double d = qubit.delta_ghz;
    std::string who = level_name(qubit, k, mode);
    double upper = checked(a + k * d, who);
    double lower = checked(a + (k - 1) * d, who + " (lower neighbour)");
    check_validity(g, upper, who, diag);
    return ghz_to_mhz(g * g * (d - a) / (upper * lower));
}

double number_splitting_mhz(const QuditSpec &qubit, const ModeSpec &mode, double g_mhz, Diagnostics *diag) {
    return chi_mhz(qubit, 1, mode, g_mhz, diag) - chi_mhz(qubit, 0, mode, g_mhz, diag);
}

double dressed_frequency_ghz(const DeviceSpec &spec, std::string_view qubit, int k, Diagnostics *diag) {
    const QuditSpec &q = spec.qudit(qubit);
    double e = k * q.omega_q_ghz + 0.5 * q.delta_ghz * k * (k - 1);
    if (k == 0) return e;
    for (const auto &c : spec.couplings) {
        if (c.qubit != qubit || c.g_mhz == 0.0) continue;
        const ModeSpec &m = spec.mode(c.mode);
        const double g = mhz_to_ghz(c.g_mhz);
        std::string who = level_name(q, k, m);
        double denom = checked(q.omega_q_ghz + (k - 1) * q.delta_ghz - m.omega_r_ghz, who);
        check_validity(g, denom, who, diag);
        e += k * g * g / denom;
    }
    return e;
}

double j_mode_levels_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, int j, int k) {
    const double ga = spec.g_mhz(pair.qubit_a, mode);
    const double gb = spec.g_mhz(pair.qubit_b, mode);
    if (ga == 0.0 || gb == 0.0) return 0.0;
    const QuditSpec &qa = spec.qudit(pair.qubit_a);
    const QuditSpec &qb = spec.qudit(pair.qubit_b);
    const double wr = spec.mode(mode).omega_r_ghz;
    std::string who = "pair " + pair.name() + " via mode " + std::string(mode);
    double da = checked(qa.omega_q_ghz + j * qa.delta_ghz - wr, who + " (" + qa.label + ")");
    double db = checked(qb.omega_q_ghz + k * qb.delta_ghz - wr, who + " (" + qb.label + ")");
    double num = qa.omega_q_ghz + qb.omega_q_ghz + j * qa.delta_ghz + k * qb.delta_ghz - 2.0 * wr;
    return ga * gb * num / (2.0 * da * db) / kMhzPerGhz;
}

double j_mode_qubit_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode) {
    return j_mode_levels_mhz(spec, pair, mode, 0, 0);
}

double j_total_mhz(const DeviceSpec &spec, const PairSpec &pair) {
    double j = spec.j0_mhz(pair.qubit_a, pair.qubit_b);
    for (const auto &m : pair.modes) j += j_mode_qubit_mhz(spec, pair, m);
    return j;
}

double static_zz_khz(double j_mhz, double delta1_mhz, double delta2_mhz, double detuning12_mhz) {
    if (j_mhz == 0.0) return 0.0;
    const double tol = ghz_to_mhz(kSingularityToleranceGhz);
    double d1 = delta1_mhz + detuning12_mhz;
    double d2 = delta2_mhz - detuning12_mhz;
    if (std::abs(d1) < tol || std::abs(d2) < tol) {
        throw SingularityError("straddling collision: (delta1 + D12) = " + std::to_string(d1) +
                               " MHz, (delta2 - D12) = " + std::to_string(d2) + " MHz");
    }
    return kKhzPerMhz * (-2.0 * j_mhz * j_mhz * (delta1_mhz + delta2_mhz) / (d1 * d2));
}

double static_zz_khz(const DeviceSpec &spec, const PairSpec &pair) {
    const QuditSpec &qa = spec.qudit(pair.qubit_a);
    const QuditSpec &qb = spec.qudit(pair.qubit_b);
    return static_zz_khz(j_total_mhz(spec, pair), ghz_to_mhz(qa.delta_ghz), ghz_to_mhz(qb.delta_ghz),
                         ghz_to_mhz(qa.omega_q_ghz - qb.omega_q_ghz));
}

Estimate infer_g_from_chi(double measured_2chi_mhz, double sigma_2chi_mhz, const QuditSpec &qubit,
                          const ModeSpec &mode, int sign, double sigma_omega_q_ghz) {
    const double a = qubit.omega_q_ghz - mode.omega_r_ghz;
    const double d = qubit.delta_ghz;
    std::string who = qubit.label + " / mode " + mode.label;
    checked(a, who);
    checked(a + d, who);
    if (d == 0.0) throw SingularityError("zero anharmonicity for " + who + ": number splitting vanishes");
    // g^2 = s a (a + d) / (2 d)
    const double scale = a * (a + d) / (2.0 * d);
    const double s = mhz_to_ghz(measured_2chi_mhz);
    const double g2 = s * scale;
    if (g2 < 0.0) {
        throw InconsistentMeasurement("number-splitting shift " + std::to_string(measured_2chi_mhz) + " MHz for " +
                                      who + " has the wrong sign for these frequencies");
    }
    Estimate out;
    const double g = std::sqrt(g2);
    out.value = (sign < 0 ? -1.0 : 1.0) * ghz_to_mhz(g);
    double var = 0.0;
    if (s != 0.0) {
        double dg_ds = g / (2.0 * s);
        var += std::pow(dg_ds * mhz_to_ghz(sigma_2chi_mhz), 2);
        double dg_da = g * (2.0 * a + d) / (2.0 * a * (a + d));
        var += std::pow(dg_da * sigma_omega_q_ghz, 2);
    } else {
        var += std::abs(mhz_to_ghz(sigma_2chi_mhz) * scale);
    }
    out.sigma = ghz_to_mhz(std::sqrt(var));
    return out;
}

double infer_g_from_level_shift(double chi_k_mhz, int k, const QuditSpec &qubit, const ModeSpec &mode, int sign) {
    const double a = qubit.omega_q_ghz - mode.omega_r_ghz;
    const double d = qubit.delta_ghz;
    std::string who = level_name(qubit, k, mode);
    double upper = checked(a + k * d, who);
    double lower = checked(a + (k - 1) * d, who);
    double num = d - a;
    if (num == 0.0) throw SingularityError("level shift independent of g for " + who);
    double g2 = mhz_to_ghz(chi_k_mhz) * upper * lower / num;
    if (g2 < 0.0) throw InconsistentMeasurement("level shift has the wrong sign for " + who);
    return (sign < 0 ? -1.0 : 1.0) * ghz_to_mhz(std::sqrt(g2));
}

double infer_j_from_zz_mhz(double zz_khz, double delta1_mhz, double delta2_mhz, double detuning12_mhz) {
    if (zz_khz == 0.0) return 0.0;
    double d1 = delta1_mhz + detuning12_mhz;
    double d2 = delta2_mhz - detuning12_mhz;
    double sum = delta1_mhz + delta2_mhz;
    if (sum == 0.0) throw SingularityError("delta1 + delta2 = 0: static ZZ independent of J");
    double j2 = -(zz_khz / kKhzPerMhz) * d1 * d2 / (2.0 * sum);
    if (j2 < 0.0) {
        throw InconsistentMeasurement("measured ZZ sign is inconsistent with these anharmonicities and detuning");
    }
    return std::sqrt(j2);
}

double infer_j0_mhz(const DeviceSpec &spec, const PairSpec &pair, double measured_j_mhz) {
    double j0 = measured_j_mhz;
    for (const auto &m : pair.modes) j0 -= j_mode_qubit_mhz(spec, pair, m);
    return j0;
}

DispersiveReport dispersive_report(const DeviceSpec &spec, std::string_view pair_name) {
    DispersiveReport rep;
    Diagnostics diag;
    std::vector<const PairSpec *> pairs;
    if (pair_name.empty()) {
        for (const auto &p : spec.pairs) pairs.push_back(&p);
    } else {
        pairs.push_back(&spec.pair(pair_name));
    }

    std::vector<std::string> qubits;
    for (const auto *p : pairs) {
        for (const auto &q : {p->qubit_a, p->qubit_b}) {
            if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) qubits.push_back(q);
        }
    }
    for (const auto &label : qubits) {
        const QuditSpec &q = spec.qudit(label);
        for (const auto &c : spec.couplings) {
            if (c.qubit != label) continue;
            const ModeSpec &m = spec.mode(c.mode);
            for (int k = 0; k < q.levels; ++k) {
                try {
                    rep.chi.push_back({label, m.label, k, chi_mhz(q, k, m, c.g_mhz, &diag)});
                } catch (const Error &e) {
                    rep.warnings.push_back(e.what());
                }
            }
            try {
                rep.splitting.push_back({label, m.label, number_splitting_mhz(q, m, c.g_mhz)});
            } catch (const Error &) {
            }
        }
        try {
            rep.dressed_freq_ghz[label] = dressed_frequency_ghz(spec, label, 1, &diag);
        } catch (const Error &e) {
            rep.warnings.push_back(e.what());
        }
    }

    for (const auto *p : pairs) {
        PairReport pr;
        pr.pair = p->name();
        pr.qubit_a = p->qubit_a;
        pr.qubit_b = p->qubit_b;
        pr.j0_mhz = spec.j0_mhz(p->qubit_a, p->qubit_b);
        pr.detuning_mhz = ghz_to_mhz(spec.qudit(p->qubit_a).omega_q_ghz - spec.qudit(p->qubit_b).omega_q_ghz);
        pr.j_total_mhz = pr.j0_mhz;
        for (const auto &m : p->modes) {
            try {
                double j = j_mode_qubit_mhz(spec, *p, m);
                pr.j_modes_mhz.emplace_back(m, j);
                pr.j_total_mhz += j;
            } catch (const SingularityError &e) {
                pr.singular = true;
                pr.errors.push_back(e.what());
            }
        }
        if (pr.singular) {
            pr.j_total_mhz = std::numeric_limits<double>::quiet_NaN();
            pr.zz_static_khz = std::numeric_limits<double>::quiet_NaN();
        } else {
            try {
                pr.zz_static_khz = static_zz_khz(spec, *p);
            } catch (const SingularityError &e) {
                pr.singular = true;
                pr.zz_static_khz = std::numeric_limits<double>::quiet_NaN();
                pr.errors.push_back(e.what());
            }
        }
        rep.pairs.push_back(std::move(pr));
    }
    rep.warnings.insert(rep.warnings.end(), diag.warnings.begin(), diag.warnings.end());
    return rep;
}

}  // namespace lbisim
