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

#include "lbisim/ripsim.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "lbisim/errors.hpp"
#include "lbisim/parallel.hpp"
#include "lbisim/spectrum.hpp"
#include "lbisim/units.hpp"

namespace lbisim {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double phi) {
    double w = std::remainder(phi, 2.0 * kPi);
    return w <= -kPi ? w + 2.0 * kPi : w;
}

// Linear (harmonic) response of every qudit and mode to the drive, on a uniform grid with
// cubic Hermite interpolation in between: dz/dt = -i 2 pi (A z + e(t)), where A holds the
// drive-frame frequencies and couplings and e(t) = eps(t) e^{i phi} / 2 on the driven mode.
class ClassicalField {
   public:
    ClassicalField(const PulseEnvelope &pulse, Eigen::MatrixXd a, std::size_t driven)
        : pulse_(pulse), a_(std::move(a)), driven_(driven) {
        namespace ode = boost::numeric::odeint;
        using State = std::vector<double>;
        const auto n = static_cast<std::size_t>(a_.rows());
        const int steps = std::max(16, static_cast<int>(std::ceil(pulse.t_g_ns / 0.005)));
        dt_ = pulse.t_g_ns / steps;
        State x(2 * n, 0.0);
        auto rhs = [this, n](const State &s, State &ds, double t) {
            Vector z(n);
            for (std::size_t i = 0; i < n; ++i) z[i] = {s[2 * i], s[2 * i + 1]};
            Vector d = derivative(t, z);
            for (std::size_t i = 0; i < n; ++i) {
                ds[2 * i] = d[i].real();
                ds[2 * i + 1] = d[i].imag();
            }
        };
        auto unpack = [n](const State &s) {
            Vector z(n);
            for (std::size_t i = 0; i < n; ++i) z[i] = {s[2 * i], s[2 * i + 1]};
            return z;
        };
        ode::runge_kutta4<State> stepper;
        values_.reserve(steps + 1);
        for (int k = 0; k < steps; ++k) {
            values_.push_back(unpack(x));
            stepper.do_step(rhs, x, k * dt_, dt_);
        }
        values_.push_back(unpack(x));
    }

    Vector derivative(double t, const Vector &z) const {
        Vector e = Vector::Zero(z.size());
        e[driven_] = 0.5 * mhz_to_ghz(1.0) * pulse_.complex_amplitude_mhz(t);
        return cdouble(0.0, -kTwoPi) * (a_ * z + e);
    }

    Vector operator()(double t) const {
        if (t <= 0.0) return values_.front();
        double u = t / dt_;
        std::size_t k = std::min(static_cast<std::size_t>(u), values_.size() - 2);
        double s = u - k;
        const Vector &y0 = values_[k], &y1 = values_[k + 1];
        Vector m0 = derivative(k * dt_, y0) * dt_, m1 = derivative((k + 1) * dt_, y1) * dt_;
        double s2 = s * s, s3 = s2 * s;
        return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * m1;
    }

    const Vector &final_value() const { return values_.back(); }

   private:
    PulseEnvelope pulse_;
    Eigen::MatrixXd a_;
    std::size_t driven_;
    double dt_ = 0.005;
    std::vector<Vector> values_;
};

// Everything a single-state propagation needs; read-only once built.
struct Setup {
    DeviceSpec sub;
    BasisLayout layout;
    std::size_t driven = 0;
    double dressed_mode_ghz = 0.0;
    double drive_ghz = 0.0;
    std::shared_ptr<ClassicalField> field;
    DrivenHamiltonian h;
    std::array<Vector, 4> states;        // dressed |00>, |01>, |10>, |11> (qubit a first)
    std::array<double, 4> energies{};    // drive frame, GHz
    struct DressedSector {
        std::vector<std::size_t> basis;
        Matrix vectors;
        std::vector<std::vector<int>> photons;  // [column][mode]
    };
    std::vector<DressedSector> sectors;
};

DeviceSpec simulation_device(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                             const RipOptions &options) {
    DeviceSpec sub = pair_subdevice(spec, pair);
    if (!sub.mode_index(mode)) throw LabelError("mode '" + std::string(mode) + "' is not on pair " + pair.name());
    for (auto &q : sub.qudits) q.levels = options.levels;
    for (auto &m : sub.modes) m.photons = m.label == mode ? options.driven_photons : options.spectator_photons;
    return sub;
}

std::vector<int> computational(const BasisLayout &layout, int a, int b) {
    std::vector<int> occ(layout.size(), 0);
    occ[0] = a;
    occ[1] = b;
    return occ;
}

Setup make_setup(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, const PulseEnvelope &pulse,
                 const RipOptions &options, bool dressed_basis) {
    pulse.check();
    Setup s;
    s.sub = simulation_device(spec, pair, mode, options);
    s.layout = BasisLayout::of(s.sub);
    s.driven = *s.layout.find(mode);
    SectorOracle oracle(s.sub);

    std::vector<int> vac(s.layout.size(), 0), one = vac;
    one[s.driven] = 1;
    s.dressed_mode_ghz = oracle.energy(one) - oracle.energy(vac);
    s.drive_ghz = s.dressed_mode_ghz + mhz_to_ghz(pulse.detuning_mhz);
    const std::size_t nq = s.sub.qudits.size();
    const std::size_t n = s.layout.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t q = 0; q < nq; ++q) a(q, q) = s.sub.qudits[q].omega_q_ghz - s.drive_ghz;
    for (std::size_t l = 0; l < s.sub.modes.size(); ++l) a(nq + l, nq + l) = s.sub.modes[l].omega_r_ghz - s.drive_ghz;
    for (const auto &c : s.sub.couplings) {
        std::size_t q = *s.sub.qudit_index(c.qubit), l = nq + *s.sub.mode_index(c.mode);
        a(q, l) += mhz_to_ghz(c.g_mhz);
        a(l, q) += mhz_to_ghz(c.g_mhz);
    }
    for (const auto &d : s.sub.direct) {
        std::size_t qa = *s.sub.qudit_index(d.qubit_a), qb = *s.sub.qudit_index(d.qubit_b);
        a(qa, qb) += mhz_to_ghz(d.j0_mhz);
        a(qb, qa) += mhz_to_ghz(d.j0_mhz);
    }
    s.field = std::make_shared<ClassicalField>(pulse, a, s.driven);

    // Every mode is displaced by its classical amplitude; the qudits are not. The qudits then
    // see the modes' fields, and the modes see minus the qudits' classical response.
    s.h.h0 = build_static_sparse(s.sub, s.drive_ghz);
    std::vector<Eigen::VectorXd> weights;
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
        for (std::size_t j = 0; j < n; ++j) {
            bool cross = (k < nq) != (j < nq);
            if (cross) w[j] = k < nq ? a(k, j) : -a(k, j);
        }
        if (w.cwiseAbs().maxCoeff() == 0.0) continue;
        s.h.add_term(SparseMatrix(embed(s.layout, k, ladder(s.layout[k].dim)).adjoint()));
        weights.push_back(w);
    }
    auto field = s.field;
    s.h.f = [field, weights](double t, DrivenHamiltonian::Coefficients &f) {
        Vector z = (*field)(t);
        for (std::size_t k = 0; k < weights.size(); ++k) f[k] = weights[k].cast<cdouble>().dot(z);
    };

    if (dressed_basis) {
        for (int i = 0; i < 4; ++i) {
            auto occ = computational(s.layout, i >> 1, i & 1);
            s.states[i] = oracle.state(occ);
            s.energies[i] = oracle.energy(occ) - (occ[0] + occ[1]) * s.drive_ghz;
        }
        int max_n = s.layout.excitations(s.layout.dimension() - 1);
        for (int n = 0; n <= max_n; ++n) {
            const auto &sec = oracle.sector(n);
            Setup::DressedSector ds{sec.basis, sec.vectors, {}};
            for (Eigen::Index j = 0; j < sec.vectors.cols(); ++j) {
                Eigen::Index best;
                sec.vectors.col(j).cwiseAbs2().maxCoeff(&best);
                std::vector<int> ph;
                for (std::size_t k = s.sub.qudits.size(); k < s.layout.size(); ++k) {
                    ph.push_back(s.layout.occupation_of(sec.basis[best], k));
                }
                ds.photons.push_back(std::move(ph));
            }
            s.sectors.push_back(std::move(ds));
        }
    }
    return s;
}

// Applies D(alpha) = exp(alpha c^dag - alpha* c) to subsystem k of psi.
void displace(const BasisLayout &layout, std::size_t k, cdouble alpha, Vector &psi) {
    const int d = layout[k].dim;
    if (d < 2 || std::abs(alpha) == 0.0) return;
    const int big = d + 30;
    Matrix c = Matrix(ladder(big));
    Matrix gen = alpha * c.adjoint() - std::conj(alpha) * c;
    Matrix dmat = gen.exp().topLeftCorner(d, d);
    const std::size_t stride = layout.stride(k);
    Vector out = Vector::Zero(psi.size());
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
        if (layout.occupation_of(i, k) != 0) continue;
        for (int n = 0; n < d; ++n) {
            cdouble amp = psi[i + n * stride];
            if (amp == 0.0) continue;
            for (int np = 0; np < d; ++np) out[i + np * stride] += dmat(np, n) * amp;
        }
    }
    psi = out;
}

void displace_modes(const Setup &s, Vector &psi) {
    const Vector &z = s.field->final_value();
    for (std::size_t k = s.sub.qudits.size(); k < s.layout.size(); ++k) displace(s.layout, k, z[k], psi);
}

struct StateRun {
    Vector final;
    double phase = 0.0;  // unwrapped, relative to static evolution
    double norm_error = 0.0;
    long steps = 0;
};

StateRun run_state(const Setup &s, int which, const PulseEnvelope &pulse, const RipOptions &options) {
    const PropagatorOptions &popt = options.propagator;
    StateRun r;
    Vector psi = s.states[which];
    const Vector &ref = s.states[which];
    const double e = s.energies[which];
    double tracked = 0.0;
    auto obs = [&](double t, const Vector &v) {
        double raw = std::arg(ref.dot(v)) + kTwoPi * e * t;
        tracked += wrap(raw - tracked);
        r.norm_error = std::max(r.norm_error, std::abs(v.norm() - 1.0));
    };
    if (options.reference_integrator) {
        // Sampled every nanosecond for phase tracking.
        const int chunks = std::max(1, static_cast<int>(std::ceil(pulse.t_g_ns)));
        for (int c = 0; c < chunks; ++c) {
            double ta = pulse.t_g_ns * c / chunks, tb = pulse.t_g_ns * (c + 1) / chunks;
            propagate_dopri(s.h, psi, ta, tb, 1e-11, 1e-11);
            obs(tb, psi);
            ++r.steps;
        }
    } else {
        r.steps = propagate(s.h, psi, 0.0, pulse.t_g_ns, popt, obs).accepted;
    }
    displace_modes(s, psi);
    double raw = std::arg(ref.dot(psi)) + kTwoPi * e * pulse.t_g_ns;
    r.phase = tracked + wrap(raw - tracked);
    r.final = std::move(psi);
    return r;
}

double fidelity_to_cz(const Eigen::Matrix4cd &m, std::array<double, 2> &phases) {
    // Tr(V^dag M) with V = diag(1, e^{ib}, e^{ia}, -e^{i(a+b)}).
    double a = std::arg(m(2, 2)) - std::arg(m(0, 0));
    double b = std::arg(m(1, 1)) - std::arg(m(0, 0));
    auto overlap = [&](double aa, double bb) {
        return m(0, 0) + std::polar(1.0, -bb) * m(1, 1) + std::polar(1.0, -aa) * m(2, 2) -
               std::polar(1.0, -(aa + bb)) * m(3, 3);
    };
    for (int it = 0; it < 100; ++it) {
        cdouble pa = m(0, 0) + std::polar(1.0, -b) * m(1, 1);
        cdouble qa = m(2, 2) - std::polar(1.0, -b) * m(3, 3);
        a = std::arg(qa) - std::arg(pa);
        cdouble pb = m(0, 0) + std::polar(1.0, -a) * m(2, 2);
        cdouble qb = m(1, 1) - std::polar(1.0, -a) * m(3, 3);
        b = std::arg(qb) - std::arg(pb);
    }
    phases = {wrap(a), wrap(b)};
    double tr = (m * m.adjoint()).trace().real();
    return (tr + std::norm(overlap(a, b))) / 20.0;
}

}  // namespace

GateResult simulate_rip(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                        const PulseEnvelope &pulse, const RipOptions &options) {
    Setup s = make_setup(spec, pair, mode, pulse, options, true);
    auto runs = parallel_map(
        4, [&](std::size_t i) { return run_state(s, static_cast<int>(i), pulse, options); },
        options.threads);

    GateResult out;
    out.pulse = pulse;
    out.drive_frequency_ghz = s.drive_ghz;
    out.dressed_mode_ghz = s.dressed_mode_ghz;
    const double T = pulse.t_g_ns;

    Eigen::Matrix4cd m;
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) {
            m(r, c) = s.states[r].dot(runs[c].final) * std::polar(1.0, kTwoPi * s.energies[r] * T);
        }
        out.max_norm_error = std::max(out.max_norm_error, runs[c].norm_error);
        out.steps += runs[c].steps;
    }
    double phi = runs[3].phase - runs[2].phase - runs[1].phase + runs[0].phase;
    out.conditional_phase_unwrapped_rad = phi;
    out.conditional_phase_rad = wrap(phi);
    out.fidelity = fidelity_to_cz(m, out.single_qubit_phases_rad);

    double leak = 0.0;
    for (int c = 0; c < 4; ++c) leak += 1.0 - m.col(c).squaredNorm();
    out.leakage = std::max(0.0, leak / 4.0);

    const std::size_t nq = s.sub.qudits.size();
    std::vector<double> photons(s.sub.modes.size(), 0.0);
    for (const auto &run : runs) {
        for (const auto &sec : s.sectors) {
            Vector local(sec.basis.size());
            for (std::size_t i = 0; i < sec.basis.size(); ++i) local[i] = run.final[sec.basis[i]];
            Vector coeff = sec.vectors.adjoint() * local;
            for (Eigen::Index j = 0; j < coeff.size(); ++j) {
                double p = std::norm(coeff[j]);
                for (std::size_t k = 0; k < photons.size(); ++k) photons[k] += p * sec.photons[j][k];
            }
        }
    }
    for (std::size_t k = 0; k < photons.size(); ++k) {
        out.residual_photons.emplace_back(s.layout[nq + k].label, photons[k] / 4.0);
    }
    return out;
}

double analytic_rip_rate(double epsilon0_mhz, double chi_mhz, double detuning_mhz) {
    if (epsilon0_mhz == 0.0) return 0.0;
    const double tol = ghz_to_mhz(kSingularityToleranceGhz);
    const double d0 = detuning_mhz, d1 = detuning_mhz + 2 * chi_mhz, d2 = detuning_mhz + 4 * chi_mhz;
    if (std::abs(d0) < tol || std::abs(d1) < tol || std::abs(d2) < tol) {
        throw SingularityError("RIP rate denominator resonant (detuning " + std::to_string(detuning_mhz) +
                               " MHz, chi " + std::to_string(chi_mhz) + " MHz)");
    }
    double rate_mhz = -epsilon0_mhz * epsilon0_mhz * chi_mhz * chi_mhz / (8.0 * d0 * d1 * d2);
    return kTwoPi * rate_mhz / kMhzPerGhz;
}

double conditional_phase_rate(double epsilon0_mhz, double chi_mhz, double detuning_mhz) {
    return kRipConventionFactor * analytic_rip_rate(epsilon0_mhz, chi_mhz, detuning_mhz);
}

double predicted_conditional_phase(const PulseEnvelope &pulse, double chi_mhz) {
    return conditional_phase_rate(pulse.epsilon0_mhz, chi_mhz, pulse.detuning_mhz) * pulse.shape_square_integral_ns();
}

double analytic_epsilon_for_phase(double target_rad, double chi_mhz, double detuning_mhz, double t_g_ns) {
    double unit = std::abs(analytic_rip_rate(1.0, chi_mhz, detuning_mhz)) * t_g_ns;
    if (unit == 0.0) throw CalibrationError("RIP rate vanishes for chi = 0");
    return std::sqrt(std::abs(target_rad) / unit);
}

double rip_chi_mhz(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode, const RipOptions &options) {
    OracleOptions o{options.levels, std::max(options.driven_photons, 3)};
    double sa = exact_number_splitting_mhz(spec, pair, pair.qubit_a, mode, o);
    double sb = exact_number_splitting_mhz(spec, pair, pair.qubit_b, mode, o);
    return -0.25 * (sa + sb);
}

PulseEnvelope calibrate_amplitude(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                                  const PulseEnvelope &shape_of, double target_rad, const RipOptions &options,
                                  GateResult *result) {
    if (!(target_rad > 0.0 && target_rad < 2.0 * kPi)) {
        throw CalibrationError("target phase must lie in (0, 2 pi)");
    }
    PulseEnvelope p = shape_of;
    p.epsilon0_mhz = 1.0;
    p.check();
    double chi = rip_chi_mhz(spec, pair, mode, options);
    double unit = std::abs(predicted_conditional_phase(p, chi));
    if (!(unit > 0.0)) throw CalibrationError("no conditional phase expected: chi vanishes");

    auto phase_at = [&](double x) {
        p.epsilon0_mhz = std::sqrt(x);
        GateResult g = simulate_rip(spec, pair, mode, p, options);
        if (result) *result = g;
        return std::abs(g.conditional_phase_unwrapped_rad);
    };
    const double cap2 = options.amplitude_cap_mhz * options.amplitude_cap_mhz;

    // Work in x = eps^2, where the phase is close to linear.
    double x0 = target_rad / unit;
    if (x0 > cap2) {
        throw CalibrationError("required amplitude " + std::to_string(std::sqrt(x0)) + " MHz exceeds cap " +
                               std::to_string(options.amplitude_cap_mhz) + " MHz");
    }
    double f0 = phase_at(x0) - target_rad;
    if (std::abs(f0) < options.calibration_tolerance_rad) return p;
    double x1 = x0 * target_rad / (f0 + target_rad);
    for (int it = 0; it < options.max_calibration_iterations; ++it) {
        if (!(x1 > 0.0) || !std::isfinite(x1)) throw CalibrationError("amplitude search left the physical range");
        if (x1 > cap2) {
            throw CalibrationError("required amplitude exceeds cap " + std::to_string(options.amplitude_cap_mhz) +
                                   " MHz at t_g = " + std::to_string(p.t_g_ns) + " ns");
        }
        double f1 = phase_at(x1) - target_rad;
        if (std::abs(f1) < options.calibration_tolerance_rad) return p;
        double x2 = (f1 != f0) ? x1 - f1 * (x1 - x0) / (f1 - f0) : x1 * target_rad / (f1 + target_rad);
        x0 = x1;
        f0 = f1;
        x1 = x2;
    }
    throw CalibrationError("amplitude calibration did not converge");
}

PulseEnvelope BandwidthRule::pulse_for(double t_g_ns) const {
    PulseEnvelope p;
    p.t_g_ns = t_g_ns;
    p.rise_ns = rise_fraction * t_g_ns;
    p.detuning_mhz = scale_detuning ? sign * c_mhz_ns / t_g_ns : fixed_detuning_mhz;
    p.shape = shape;
    return p;
}

double fit_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

void check_sweep(const std::vector<double> &t) {
    if (t.size() < 4) throw std::invalid_argument("power-scaling sweep needs at least 4 gate times");
    auto [lo, hi] = std::minmax_element(t.begin(), t.end());
    if (*hi < 4.0 * *lo) throw std::invalid_argument("power-scaling sweep must span at least a factor of 4");
}

ScalingFit finish(std::vector<double> t, std::vector<double> eps) {
    ScalingFit fit;
    std::vector<double> eps2;
    for (double e : eps) eps2.push_back(e * e);
    fit.exponent = fit_log_slope(t, eps2);
    fit.t_g_ns = std::move(t);
    fit.epsilon0_mhz = std::move(eps);
    return fit;
}

}  // namespace

ScalingFit power_scaling_sweep(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                               const std::vector<double> &t_g_list, const BandwidthRule &rule, double target_rad,
                               const RipOptions &options) {
    check_sweep(t_g_list);
    RipOptions inner = options;
    inner.threads = 1;
    auto eps = parallel_map(
        t_g_list.size(),
        [&](std::size_t i) {
            return calibrate_amplitude(spec, pair, mode, rule.pulse_for(t_g_list[i]), target_rad, inner).epsilon0_mhz;
        },
        options.threads);
    return finish(t_g_list, eps);
}

ScalingFit analytic_power_scaling(double chi_mhz, const std::vector<double> &t_g_list, const BandwidthRule &rule,
                                  double target_rad) {
    check_sweep(t_g_list);
    std::vector<double> eps;
    for (double t : t_g_list) {
        PulseEnvelope p = rule.pulse_for(t);
        p.epsilon0_mhz = 1.0;
        double unit = std::abs(predicted_conditional_phase(p, chi_mhz));
        eps.push_back(std::sqrt(target_rad / unit));
    }
    return finish(t_g_list, eps);
}

double drive_induced_swap_check(const DeviceSpec &spec, const PairSpec &pair, std::string_view mode,
                                const PulseEnvelope &pulse, const RipOptions &options) {
    Setup s = make_setup(spec, pair, mode, pulse, options, false);
    Vector psi = Vector::Zero(s.layout.dimension());
    psi[s.layout.index(computational(s.layout, 1, 0))] = 1.0;
    std::vector<std::size_t> target;
    for (std::size_t i = 0; i < s.layout.dimension(); ++i) {
        if (s.layout.occupation_of(i, 0) == 0 && s.layout.occupation_of(i, 1) == 1) target.push_back(i);
    }
    double worst = 0.0;
    auto obs = [&](double, const Vector &v) {
        double p = 0.0;
        for (auto i : target) p += std::norm(v[i]);
        worst = std::max(worst, p);
    };
    propagate(s.h, psi, 0.0, pulse.t_g_ns, options.propagator, obs);
    return worst;
}

double coherence_limited_epg(double t1_a_us, double t2_a_us, double t1_b_us, double t2_b_us, double t_g_ns,
                             Diagnostics *diag) {
    for (double v : {t1_a_us, t2_a_us, t1_b_us, t2_b_us}) {
        if (!(v > 0.0)) throw std::invalid_argument("coherence times must be positive");
    }
    if (t_g_ns < 0.0) throw std::invalid_argument("gate time must be nonnegative");
    if (diag) {
        if (t2_a_us > 2.0 * t1_a_us) diag->warnings.push_back("qubit a: T2 exceeds 2 T1");
        if (t2_b_us > 2.0 * t1_b_us) diag->warnings.push_back("qubit b: T2 exceeds 2 T1");
    }
    const double t = t_g_ns * 1e-3;
    auto f = [t](double t1, double t2) { return (3.0 + std::exp(-t / t1) + 2.0 * std::exp(-t / t2)) / 6.0; };
    return 1.0 - f(t1_a_us, t2_a_us) * f(t1_b_us, t2_b_us);
}

}  // namespace lbisim
