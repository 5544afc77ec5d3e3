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

#include "lbisim/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lbisim/errors.hpp"
#include "lbisim/manifest.hpp"
#include "lbisim/model.hpp"
#include "lbisim/units.hpp"

#ifndef LBISIM_VERSION
#define LBISIM_VERSION "unknown"
#endif

namespace lbisim::cli {

using ojson = nlohmann::ordered_json;

double round12(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string format12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

ojson num(double v) { return std::isfinite(v) ? ojson(round12(v)) : ojson(nullptr); }

ojson header(const char *command) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

}  // namespace

ojson report_json(const DispersiveReport &r) {
    ojson j = header("report");
    j["chi"] = ojson::array();
    for (const auto &c : r.chi) {
        j["chi"].push_back({{"qubit", c.qubit}, {"mode", c.mode}, {"level", c.level}, {"chi_mhz", num(c.chi_mhz)}});
    }
    j["number_splitting"] = ojson::array();
    for (const auto &s : r.splitting) {
        j["number_splitting"].push_back({{"qubit", s.qubit}, {"mode", s.mode}, {"two_chi_mhz", num(s.two_chi_mhz)}});
    }
    j["dressed_freq_ghz"] = ojson::object();
    for (const auto &[q, f] : r.dressed_freq_ghz) j["dressed_freq_ghz"][q] = num(f);
    j["pairs"] = ojson::array();
    for (const auto &p : r.pairs) {
        ojson e;
        e["pair"] = p.pair;
        e["qubit_a"] = p.qubit_a;
        e["qubit_b"] = p.qubit_b;
        e["j_modes_mhz"] = ojson::object();
        for (const auto &[m, v] : p.j_modes_mhz) e["j_modes_mhz"][m] = num(v);
        e["j0_mhz"] = num(p.j0_mhz);
        e["j_total_mhz"] = num(p.j_total_mhz);
        e["zz_static_khz"] = num(p.zz_static_khz);
        e["detuning_mhz"] = num(p.detuning_mhz);
        e["singular"] = p.singular;
        e["errors"] = p.errors;
        j["pairs"].push_back(e);
    }
    j["warnings"] = r.warnings;
    return j;
}

ojson gate_result_json(const GateResult &g) {
    ojson j = header("rip");
    j["conditional_phase_rad"] = num(g.conditional_phase_rad);
    j["conditional_phase_unwrapped_rad"] = num(g.conditional_phase_unwrapped_rad);
    j["single_qubit_phases_rad"] = {num(g.single_qubit_phases_rad[0]), num(g.single_qubit_phases_rad[1])};
    j["residual_photons"] = ojson::object();
    for (const auto &[m, n] : g.residual_photons) j["residual_photons"][m] = num(n);
    j["leakage"] = num(g.leakage);
    j["fidelity"] = num(g.fidelity);
    j["drive_frequency_ghz"] = num(g.drive_frequency_ghz);
    j["dressed_mode_ghz"] = num(g.dressed_mode_ghz);
    j["max_norm_error"] = num(g.max_norm_error);
    j["steps"] = g.steps;
    j["pulse"] = {{"epsilon0_mhz", num(g.pulse.epsilon0_mhz)}, {"detuning_mhz", num(g.pulse.detuning_mhz)},
                  {"t_g_ns", num(g.pulse.t_g_ns)},           {"rise_ns", num(g.pulse.rise_ns)},
                  {"shape", to_string(g.pulse.shape)},       {"phase_rad", num(g.pulse.phase_rad)}};
    return j;
}

std::string curve_csv(const SweepCurve &curve) {
    std::string s = "freq_ghz,value,is_pole\n";
    for (std::size_t i = 0; i < curve.freq_ghz.size(); ++i) {
        s += format12(curve.freq_ghz[i]);
        s += ',';
        if (!curve.is_pole[i]) s += format12(curve.value[i]);
        s += curve.is_pole[i] ? ",1\n" : ",0\n";
    }
    return s;
}

namespace {

struct Common {
    std::string out_path;
    int threads = 0;
};

struct Emitter {
    const Common &common;
    std::ostream &out;
    std::string command;
    std::string input_file;
    std::vector<std::pair<std::string, std::string>> overrides;

    void emit(const std::string &payload) const {
        if (common.out_path.empty()) {
            out << payload;
            return;
        }
        {
            std::ofstream f(common.out_path, std::ios::binary);
            if (!f) throw ParseError(common.out_path, "cannot open output file");
            f << payload;
        }
        RunManifest m;
        m.command = command;
        m.input_file = input_file;
        if (!input_file.empty()) m.input_sha256 = sha256_file(input_file);
        m.overrides = overrides;
        m.tool_version = LBISIM_VERSION;
        m.timestamp_utc = utc_timestamp();
        write_manifest(common.out_path, m);
    }
};

DeviceSpec read_unvalidated(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_device(buf.str(), path);
}

const PairSpec &require_pair(const DeviceSpec &spec, const std::string &name) { return spec.pair(name); }

void collect_overrides(const CLI::App &app, std::vector<std::pair<std::string, std::string>> &into) {
    for (const CLI::Option *opt : app.get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        if (name == "--help" || name == "--config" || name == "--version") continue;
        std::string value;
        for (const auto &r : opt->results()) value += (value.empty() ? "" : " ") + r;
        into.emplace_back(name, value);
    }
}

struct RipFlags {
    std::string device, pair, mode, shape = "cos2";
    double t_g_ns = 228.0;
    double detuning_mhz = -30.0;
    std::optional<double> rise_ns;
    std::optional<double> epsilon0_mhz;
    std::optional<double> calibrate_to_rad;
    double phase_rad = 0.0;
    RipOptions options;
};

struct FitFlags {
    std::optional<double> measured_2chi, measured_zz, measured_j;
    double sigma_mhz = 0.0;
    double sigma_omega_q_ghz = 0.0;
    std::string device, qubit, mode, pair;
    std::optional<double> omega_q_ghz, delta_ghz, omega_r_ghz;
    int sign = 1;
    bool as_magnitude = false;
    double delta1_mhz = -300.0, delta2_mhz = -300.0, detuning12_mhz = 0.0;
};

ojson run_fit(const FitFlags &f) {
    int given = f.measured_2chi.has_value() + f.measured_zz.has_value() + f.measured_j.has_value();
    if (given != 1) throw CLI::ValidationError("fit", "give exactly one of --measured-2chi, --measured-zz, --measured-j");
    ojson j = header("fit");

    if (f.measured_2chi) {
        QuditSpec q;
        ModeSpec m;
        if (!f.device.empty()) {
            DeviceSpec spec = load_device(f.device);
            q = spec.qudit(f.qubit);
            m = spec.mode(f.mode);
        } else {
            if (!f.omega_q_ghz || !f.delta_ghz || !f.omega_r_ghz) {
                throw CLI::ValidationError("fit", "--measured-2chi needs --device/--qubit/--mode or "
                                                  "--omega-q-ghz/--delta-ghz/--omega-r-ghz");
            }
            q = {"q", *f.omega_q_ghz, *f.delta_ghz};
            m = {"m", *f.omega_r_ghz};
        }
        double measured = *f.measured_2chi;
        if (f.as_magnitude) measured = std::copysign(std::abs(measured), number_splitting_mhz(q, m, 1.0));
        Estimate e = infer_g_from_chi(measured, f.sigma_mhz, q, m, f.sign, f.sigma_omega_q_ghz);
        j["kind"] = "g_from_2chi";
        j["measured_2chi_mhz"] = num(measured);
        j["g_mhz"] = num(e.value);
        j["g_sigma_mhz"] = num(e.sigma);
    } else if (f.measured_zz) {
        double jj = infer_j_from_zz_mhz(*f.measured_zz, f.delta1_mhz, f.delta2_mhz, f.detuning12_mhz);
        j["kind"] = "j_from_zz";
        j["measured_zz_khz"] = num(*f.measured_zz);
        j["j_abs_mhz"] = num(jj);
        if (f.sigma_mhz > 0.0) {
            // zz is quadratic in J: relative error halves.
            j["j_sigma_mhz"] = num(0.5 * jj * f.sigma_mhz / std::abs(*f.measured_zz));
        }
    } else {
        if (f.device.empty() || f.pair.empty()) throw CLI::ValidationError("fit", "--measured-j needs --device and --pair");
        DeviceSpec spec = load_device(f.device);
        const PairSpec &p = require_pair(spec, f.pair);
        j["kind"] = "j0_from_j";
        j["pair"] = p.name();
        j["measured_j_mhz"] = num(*f.measured_j);
        j["j0_mhz"] = num(infer_j0_mhz(spec, p, *f.measured_j));
        j["j0_sigma_mhz"] = num(f.sigma_mhz);
    }
    return j;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Linear bus interferometer coupler and RIP gate simulator", "lbisim"};
    app.set_config("--config", "", "TOML/INI file with flag defaults");
    app.set_version_flag("--version", LBISIM_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--threads", common.threads, "worker threads (0 = all cores; LBISIM_THREADS caps)");
    app.add_option("--out", common.out_path, "write output here plus <out>.manifest.json");

    // validate
    std::string validate_device;
    CLI::App *validate_cmd = app.add_subcommand("validate", "check a device file");
    validate_cmd->add_option("device", validate_device)->required();

    // report
    std::string report_device, report_pair;
    CLI::App *report_cmd = app.add_subcommand("report", "dispersive report per pair (JSON)");
    report_cmd->add_option("device", report_device)->required();
    report_cmd->add_option("--pair", report_pair);

    // sweep
    std::string sweep_device, sweep_pair, quantity = "j";
    double from_ghz = 4.0, to_ghz = 5.5;
    int points = 1501;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "J or ZZ against degenerate qubit frequency (CSV)");
    sweep_cmd->add_option("device", sweep_device)->required();
    sweep_cmd->add_option("--pair", sweep_pair)->required();
    sweep_cmd->add_option("--from-ghz", from_ghz);
    sweep_cmd->add_option("--to-ghz", to_ghz);
    sweep_cmd->add_option("--points", points);
    sweep_cmd->add_option("--quantity", quantity)->check(CLI::IsMember({"j", "zz"}));

    // rip
    RipFlags rf;
    CLI::App *rip_cmd = app.add_subcommand("rip", "simulate or calibrate a RIP gate (JSON)");
    rip_cmd->add_option("device", rf.device)->required();
    rip_cmd->add_option("--pair", rf.pair)->required();
    rip_cmd->add_option("--mode", rf.mode)->required();
    rip_cmd->add_option("--tg-ns", rf.t_g_ns);
    rip_cmd->add_option("--detuning-mhz", rf.detuning_mhz, "drive minus dressed mode frequency");
    rip_cmd->add_option("--rise-ns", rf.rise_ns, "ramp duration (default t_g / 4)");
    rip_cmd->add_option("--shape", rf.shape)->check(CLI::IsMember({"cos2", "gaussian"}));
    rip_cmd->add_option("--phase-rad", rf.phase_rad);
    auto *eps_opt = rip_cmd->add_option("--epsilon0-mhz", rf.epsilon0_mhz);
    auto *cal_opt = rip_cmd->add_option("--calibrate-to-rad", rf.calibrate_to_rad);
    eps_opt->excludes(cal_opt);
    rip_cmd->add_option("--levels", rf.options.levels);
    rip_cmd->add_option("--driven-photons", rf.options.driven_photons);
    rip_cmd->add_option("--spectator-photons", rf.options.spectator_photons);
    rip_cmd->add_option("--tolerance", rf.options.propagator.tolerance);
    rip_cmd->add_option("--max-step-ns", rf.options.propagator.max_step_ns);
    rip_cmd->add_option("--amplitude-cap-mhz", rf.options.amplitude_cap_mhz);
    rip_cmd->add_option("--calibration-tolerance-rad", rf.options.calibration_tolerance_rad);
    rip_cmd->add_flag("--reference-integrator", rf.options.reference_integrator);

    // fit
    FitFlags ff;
    CLI::App *fit_cmd = app.add_subcommand("fit", "invert measurements into model parameters (JSON)");
    fit_cmd->add_option("--measured-2chi", ff.measured_2chi, "number splitting, MHz (signed)");
    fit_cmd->add_option("--measured-zz", ff.measured_zz, "static ZZ, kHz");
    fit_cmd->add_option("--measured-j", ff.measured_j, "net exchange coupling, MHz");
    fit_cmd->add_option("--sigma", ff.sigma_mhz, "measurement uncertainty, in the measured quantity's unit");
    fit_cmd->add_option("--sigma-omega-q-ghz", ff.sigma_omega_q_ghz);
    fit_cmd->add_option("--device", ff.device);
    fit_cmd->add_option("--qubit", ff.qubit);
    fit_cmd->add_option("--mode", ff.mode);
    fit_cmd->add_option("--pair", ff.pair);
    fit_cmd->add_option("--omega-q-ghz", ff.omega_q_ghz);
    fit_cmd->add_option("--delta-ghz", ff.delta_ghz);
    fit_cmd->add_option("--omega-r-ghz", ff.omega_r_ghz);
    fit_cmd->add_option("--sign", ff.sign, "sign of g")->check(CLI::IsMember({-1, 1}));
    fit_cmd->add_flag("--as-magnitude", ff.as_magnitude, "treat --measured-2chi as |2chi|");
    fit_cmd->add_option("--delta1-mhz", ff.delta1_mhz);
    fit_cmd->add_option("--delta2-mhz", ff.delta2_mhz);
    fit_cmd->add_option("--detuning12-mhz", ff.detuning12_mhz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Emitter em{common, out, {}, {}, {}};
    for (int i = 0; i < argc; ++i) em.command += (i ? " " : "") + std::string(argv[i]);
    collect_overrides(app, em.overrides);
    for (const CLI::App *sub : app.get_subcommands()) collect_overrides(*sub, em.overrides);

    try {
        if (validate_cmd->parsed()) {
            em.input_file = validate_device;
            auto violations = validate(read_unvalidated(validate_device));
            std::string text;
            for (const auto &v : violations) text += "violation: " + v + "\n";
            if (violations.empty()) text = "ok\n";
            em.emit(text);
            return violations.empty() ? kExitOk : kExitDomain;
        }
        if (report_cmd->parsed()) {
            em.input_file = report_device;
            DeviceSpec spec = load_device(report_device);
            if (!report_pair.empty()) require_pair(spec, report_pair);
            em.emit(report_json(dispersive_report(spec, report_pair)).dump(2) + "\n");
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            em.input_file = sweep_device;
            if (!(to_ghz > from_ghz) || points < 2) throw std::invalid_argument("sweep needs --to-ghz > --from-ghz and --points >= 2");
            DeviceSpec spec = load_device(sweep_device);
            const PairSpec &p = require_pair(spec, sweep_pair);
            auto grid = linear_grid(from_ghz, to_ghz, points);
            SweepCurve c = quantity == "j" ? j_vs_frequency(spec, p, grid, common.threads)
                                           : zz_vs_frequency(spec, p, grid, common.threads);
            em.emit(curve_csv(c));
            return kExitOk;
        }
        if (rip_cmd->parsed()) {
            em.input_file = rf.device;
            DeviceSpec spec = load_device(rf.device);
            const PairSpec &p = require_pair(spec, rf.pair);
            rf.options.threads = common.threads;
            PulseEnvelope pulse;
            pulse.t_g_ns = rf.t_g_ns;
            pulse.detuning_mhz = rf.detuning_mhz;
            pulse.rise_ns = rf.rise_ns.value_or(rf.t_g_ns / 4.0);
            pulse.shape = parse_pulse_shape(rf.shape);
            pulse.phase_rad = rf.phase_rad;
            pulse.epsilon0_mhz = rf.epsilon0_mhz.value_or(0.0);
            pulse.check();
            GateResult g;
            if (rf.calibrate_to_rad) {
                calibrate_amplitude(spec, p, rf.mode, pulse, *rf.calibrate_to_rad, rf.options, &g);
            } else {
                g = simulate_rip(spec, p, rf.mode, pulse, rf.options);
            }
            em.emit(gate_result_json(g).dump(2) + "\n");
            return kExitOk;
        }
        if (fit_cmd->parsed()) {
            if (!ff.device.empty()) em.input_file = ff.device;
            em.emit(run_fit(ff).dump(2) + "\n");
            return kExitOk;
        }
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError &e) {
        for (const auto &v : e.violations()) err << "violation: " << v << "\n";
        return kExitDomain;
    } catch (const LabelError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InconsistentMeasurement &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ValidityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const SingularityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CalibrationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace lbisim::cli
