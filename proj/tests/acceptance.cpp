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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "lbisim/design.hpp"
#include "lbisim/dispersive.hpp"
#include "lbisim/hamiltonian.hpp"
#include "lbisim/ripsim.hpp"
#include "lbisim/spectrum.hpp"

using namespace lbisim;

namespace {

constexpr double kPi = 3.141592653589793;

int failures = 0;

struct Verdict {
    bool pass;
    std::string detail;
};

void criterion(int n, double budget_s, const std::function<Verdict()> &body) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception &e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_s;
    bool pass = v.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d: %s %s [%.1f s of %.0f s budget%s]\n", n, pass ? "PASS" : "FAIL", v.detail.c_str(),
                secs, budget_s, in_budget ? "" : ", over budget");
    std::fflush(stdout);
}

std::string fmt(const char *f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char *f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char *f, double a, double b, double c) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Two qubits, two modes, J0; every |g| / |omega_q - omega_r| <= 0.05.
DeviceSpec random_weak_device(std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto sign = [&] { return u(rng) < 0.5 ? -1.0 : 1.0; };
    for (;;) {
        DeviceSpec d;
        double wa = 4.3 + 0.4 * u(rng);
        double wb = wa + sign() * (0.03 + 0.05 * u(rng));
        d.qudits = {{"a", wa, -0.25 - 0.1 * u(rng), 4}, {"b", wb, -0.25 - 0.1 * u(rng), 4}};
        double w1 = 5.9 + 0.3 * u(rng);
        double w2 = w1 + 0.2 + 0.3 * u(rng);
        d.modes = {{"m1", w1, 4}, {"m2", w2, 4}};
        double gmax = 0.05 * 1e3 * (w1 - std::max(wa, wb));
        d.couplings = {{"a", "m1", sign() * gmax * (0.5 + 0.5 * u(rng))},
                       {"b", "m1", sign() * gmax * (0.5 + 0.5 * u(rng))},
                       {"a", "m2", sign() * gmax * (0.5 + 0.5 * u(rng))},
                       {"b", "m2", sign() * gmax * (0.5 + 0.5 * u(rng))}};
        d.direct = {{"a", "b", sign() * (0.5 + 2.5 * u(rng))}};
        d.pairs = {{"a", "b", {"m1", "m2"}, ""}};
        DeviceSpec degenerate = at_degenerate_frequency(d, d.pairs[0], wb);
        // Restricted regime: keep the net exchange away from a cancellation point.
        if (std::abs(j_total_mhz(degenerate, degenerate.pairs[0])) >= 0.5) return d;
    }
}

Verdict criterion1() {
    std::mt19937 rng(20260101);
    double worst_j = 0.0, worst_zz = 0.0, worst_single_j = 0.0;
    for (int k = 0; k < 20; ++k) {
        DeviceSpec d = random_weak_device(rng);
        DeviceSpec deg = at_degenerate_frequency(d, d.pairs[0], d.qudits[1].omega_q_ghz);
        double jp = j_total_mhz(deg, deg.pairs[0]);
        double je = exact_j_mhz(deg, deg.pairs[0]);
        worst_j = std::max(worst_j, std::abs(jp - je) / std::abs(je));
        double zp = static_zz_khz(d, d.pairs[0]);
        double ze = exact_zz_khz(d, d.pairs[0]);
        worst_zz = std::max(worst_zz, std::abs(zp - ze) / std::abs(ze));
        // Same qubits with only a direct coupling equal to j_total: isolates the single-J assumption.
        DeviceSpec single = d;
        single.modes.clear();
        single.couplings.clear();
        single.pairs[0].modes.clear();
        single.direct = {{"a", "b", j_total_mhz(d, d.pairs[0])}};
        double zs = exact_zz_khz(single, single.pairs[0]);
        worst_single_j = std::max(worst_single_j, std::abs(zp - zs) / std::abs(zs));
    }
    return {worst_j <= 0.05 && worst_zz <= 0.20,
            fmt("oracle equivalence over 20 sets: max |dJ|/|J| = %.4f (<= 0.05), max |dzz|/|zz| = %.4f (<= 0.20)",
                worst_j, worst_zz) +
                fmt("; zz formula vs exact single-J model: max rel err %.4f", worst_single_j)};
}

Verdict criterion2() {
    DeviceSpec d = testing::bus25_device();
    SweepCurve c = j_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 1501));
    auto roots = find_zero_crossings(c);
    bool frozen = !roots.empty() && std::abs(roots[0] - testing::kBus25RootLow) < 1e-9;
    double width = 0.0;
    if (!roots.empty()) {
        if (auto w = window_around(c, roots[0], kBroadbandThresholdMhz)) width = w->width_mhz();
    }
    std::string where;
    for (double r : roots) where += fmt(" %.6f", r);
    return {roots.size() == 1 && frozen && width >= 400.0,
            "bus 2_5 sign changes = " + std::to_string(roots.size()) + " (need 1) at" + where +
                fmt(" GHz; |J| <= 0.5 MHz window around first root = %.0f MHz (need >= 400)", width)};
}

Verdict criterion3() {
    DeviceSpec d = testing::bus25_device();
    SweepCurve c = zz_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 1501));
    auto w = window_around(c, testing::kBus25RootLow, 1.0);
    double width = w ? w->width_mhz() : 0.0;
    return {width >= 200.0, fmt("|zz| < 1 kHz window around %.4f GHz = %.0f MHz (need >= 200)",
                                testing::kBus25RootLow, width)};
}

RipOptions acceptance_options() {
    RipOptions o;
    o.propagator.tolerance = 1e-7;
    return o;
}

Verdict criterion4() {
    DeviceSpec d = testing::rip_device(1.0, 4.51);
    d.direct[0].j0_mhz += 0.1;  // net J = 0.1 MHz
    const PairSpec &p = d.pairs[0];
    double j = j_total_mhz(d, p);
    double zz = static_zz_khz(d, p);
    PulseEnvelope shape;
    shape.detuning_mhz = -30.0;
    PulseEnvelope pulse = calibrate_amplitude(d, p, "m", shape, kPi, acceptance_options());
    double swap = drive_induced_swap_check(d, p, "m", pulse, acceptance_options());
    return {std::abs(zz) < 1.0 && swap <= 1e-2,
            fmt("10 MHz detuned pair, J = %.3f MHz: |zz| = %.3f kHz (< 1); ", j, std::abs(zz)) +
                fmt("max swap during calibrated pi gate (eps0 = %.1f MHz) = %.2e (<= 1e-2)", pulse.epsilon0_mhz, swap)};
}

GateResult criterion5_gate;

Verdict criterion5() {
    DeviceSpec d = testing::rip_device(1.0);
    const PairSpec &p = d.pairs[0];
    RipOptions o = acceptance_options();
    o.driven_photons = 8;
    PulseEnvelope shape;
    shape.detuning_mhz = 30.0;
    shape.t_g_ns = 228.0;
    shape.rise_ns = 114.0;
    shape.shape = PulseShape::GaussianFlatTop;
    GateResult g;
    PulseEnvelope pulse = calibrate_amplitude(d, p, "m", shape, kPi, o, &g);
    criterion5_gate = g;
    double chi = rip_chi_mhz(d, p, "m");
    double predicted = std::abs(predicted_conditional_phase(pulse, chi));
    double sim = std::abs(g.conditional_phase_unwrapped_rad);
    double ratio = sim / predicted;
    double photons = 0.0;
    for (const auto &[m, n] : g.residual_photons) photons += n;
    PulseEnvelope weak = pulse;
    weak.epsilon0_mhz = 20.0;
    double weak_ratio = simulate_rip(d, p, "m", weak, o).conditional_phase_rad / predicted_conditional_phase(weak, chi);
    bool agree = std::abs(ratio - 1.0) <= 0.05;
    bool calibrated = std::abs(std::abs(g.conditional_phase_rad) - kPi) <= 1e-3;
    return {agree && calibrated && photons < 1e-3,
            fmt("2chi = %.3f MHz, Delta = +30 MHz, t_g = 228 ns: sim / rate integral = %.4f (within 5%%); ",
                2 * chi, ratio) +
                fmt("calibrated |phase| - pi = %.1e rad (<= 1e-3); residual photons = %.1e (< 1e-3); ",
                    std::abs(g.conditional_phase_rad) - kPi, photons) +
                fmt("eps0 = %.1f MHz; at eps0 = 20 MHz the ratio is %.4f", pulse.epsilon0_mhz, weak_ratio)};
}

Verdict criterion6() {
    DeviceSpec d = testing::rip_device(1.0);
    const PairSpec &p = d.pairs[0];
    std::vector<double> tg{400, 600, 900, 1600};
    BandwidthRule scaled;
    ScalingFit s = power_scaling_sweep(d, p, "m", tg, scaled, kPi, acceptance_options());
    BandwidthRule fixed;
    fixed.scale_detuning = false;
    ScalingFit f = power_scaling_sweep(d, p, "m", tg, fixed, kPi, acceptance_options());
    bool main_ok = std::abs(s.exponent + 4.0) <= 0.3;
    bool control_ok = std::abs(f.exponent + 2.0) <= 0.3;
    return {main_ok && control_ok,
            fmt("Delta = -%.0f / t_g: slope %.3f (-4 +/- 0.3); ", scaled.c_mhz_ns, s.exponent) +
                fmt("fixed Delta = %.0f MHz control: slope %.3f (-2 +/- 0.3)", fixed.fixed_detuning_mhz, f.exponent)};
}

Verdict criterion7() {
    QuditSpec q{"q", 4.9, -0.3};
    ModeSpec m{"m", 5.942};
    double worst_g = 0.0, worst_j = 0.0;
    for (double g : {20.0, 50.0, -77.0, 103.0, 140.0}) {
        double s = number_splitting_mhz(q, m, g);
        double back = infer_g_from_chi(s, 0.0, q, m, g < 0 ? -1 : 1).value;
        worst_g = std::max(worst_g, std::abs(back - g) / std::abs(g));
    }
    for (double j : {0.05, 0.1, 0.3, 1.0}) {
        for (double det : {10.0, -45.0, 120.0}) {
            double back = infer_j_from_zz_mhz(static_zz_khz(j, -300, -280, det), -300, -280, det);
            worst_j = std::max(worst_j, std::abs(back - j) / j);
        }
    }
    DeviceSpec dev = load_device(std::filesystem::path(LBISIM_SOURCE_DIR) / "devices/ibm6q.json");
    double worst_j0 = 0.0;
    for (const auto &p : dev.pairs) {
        double j0 = dev.j0_mhz(p.qubit_a, p.qubit_b);
        worst_j0 = std::max(worst_j0, std::abs(infer_j0_mhz(dev, p, j_total_mhz(dev, p)) - j0));
    }
    return {worst_g <= 1e-6 && worst_j <= 1e-6 && worst_j0 <= 1e-12,
            fmt("g->2chi->g rel err %.1e; J->zz->J rel err %.1e; device J0 round trip abs err %.1e MHz", worst_g,
                worst_j, worst_j0)};
}

Verdict criterion8() {
    std::string detail;
    bool ok = true;
    auto check = [&](const char *name, bool pass) {
        ok = ok && pass;
        detail += std::string(name) + (pass ? " ok; " : " FAILED; ");
    };

    DeviceSpec d = testing::two_by_two_device();
    set_truncation(d, 3, 3);
    PulseEnvelope p;
    p.epsilon0_mhz = 80.0;
    check("hermiticity", hermiticity_error(build_static(d).entries) < 1e-12 &&
                             hermiticity_error(build_drive(d, "m1", p, 100.0).entries) < 1e-12);

    check("norm", criterion5_gate.max_norm_error <= 1e-9);

    QuditSpec q{"q", 4.9, -0.3};
    ModeSpec m{"m", 5.942};
    bool chi_even = true;
    for (int k = 0; k < 3; ++k) chi_even = chi_even && chi_mhz(q, k, m, 77.0) == chi_mhz(q, k, m, -77.0);
    check("chi sign independence", chi_even);

    DeviceSpec bus = testing::bus25_device(4.6);
    double before = j_mode_qubit_mhz(bus, bus.pairs[0], "m1");
    bus.couplings[1].g_mhz *= -1;
    check("J_l parity flip", j_mode_qubit_mhz(bus, bus.pairs[0], "m1") == -before);

    double z1 = static_zz_khz(0.1, -300, -300, 10), z3 = static_zz_khz(0.3, -300, -300, 10);
    check("zz ~ J^2", std::abs(z3 - 9 * z1) <= 1e-12 * std::abs(z3));

    DeviceSpec t = testing::two_by_two_device();
    double a = exact_zz_khz(t, t.pairs[0], {4, 4}), b = exact_zz_khz(t, t.pairs[0], {4, 6});
    check("truncation 4->6 photons", std::abs(a - b) <= 0.01 * std::abs(b));
    return {ok, detail + "(unit suites: ctest)"};
}

Verdict criterion9() {
    double epg = coherence_limited_epg(100, 100, 100, 100, 228.0);
    return {epg >= 0.003 && epg <= 0.012, fmt("EPG(228 ns, T1 = T2 = 100 us) = %.5f (need [0.003, 0.012])", epg)};
}

}  // namespace

int main() {
    criterion(1, 30, criterion1);
    criterion(2, 1, criterion2);
    criterion(3, 1, criterion3);
    criterion(4, 120, criterion4);
    criterion(5, 120, criterion5);
    criterion(6, 600, criterion6);
    criterion(7, 5, criterion7);
    criterion(8, 900, criterion8);
    criterion(9, 1, criterion9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
