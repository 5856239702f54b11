// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "pulseforge/analysis.h"
#include "pulseforge/errors.h"
#include "pulseforge/families.h"
#include "pulseforge/serialize.h"
#include "pulseforge/solver.h"
#include "pulseforge/su2.h"
#include "pulseforge/sweep_table.h"

namespace pulseforge::cli {

namespace {

/// Bad flag values discovered after CLI11 has accepted the syntax.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Failures unrelated to the arguments themselves (I/O, verification).
struct CommandFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string theta = "";
    std::string phi = "0";
    bool degrees = false;
    std::optional<std::string> c1;
    std::optional<std::string> family;
    int n1 = 0, n2 = 0, n3 = 0;
    std::string branch = "+";
    int nu1 = 0, nu2 = 1, nu3 = 0;
    int mu1 = 1, mu2 = 0, mu3 = 1;
    int parity = 0;
    std::string input = "-";
    double f = 0.0;
    std::string windings = "0,0,0";
    int total_winding = 0;
    int points = 101;
    std::string psi = "0";
    bool no_meta = false;
    bool elementary = false;
    double f_min = 1e-3;
    double f_max = 1e-2;
    std::string output;
};

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, value);
    return buf;
}

double parse_number(const std::string &text, const std::string &what) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        throw UsageError(what + ": cannot parse '" + text + "' as a number");
    }
    if (used != text.size() || !std::isfinite(value)) {
        throw UsageError(what + ": cannot parse '" + text + "' as a number");
    }
    return value;
}

WindingNumbers parse_windings(const std::string &text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = parse_number(item, "--n");
        if (v != std::floor(v) || v < 0 || v > 1e6) {
            throw UsageError("--n entries must be non-negative integers, got '" + item + "'");
        }
        values.push_back(static_cast<int>(v));
    }
    if (values.size() != 3) {
        throw UsageError("--n expects three comma-separated windings such as 1,0,0");
    }
    return WindingNumbers(values[0], values[1], values[2]);
}

Branch parse_branch_flag(const std::string &text) {
    try {
        return parse_branch(text);
    } catch (const std::invalid_argument &) {
        throw UsageError("--branch must be '+' or '-'");
    }
}

QubitState parse_psi(const std::string &text) {
    const double r = 1.0 / std::sqrt(2.0);
    if (text == "0") return QubitState(1.0, 0.0);
    if (text == "1") return QubitState(0.0, 1.0);
    if (text == "+") return QubitState(r, r);
    if (text == "-") return QubitState(r, -r);
    if (text == "+i") return QubitState(r, Complex(0.0, r));
    if (text == "-i") return QubitState(r, Complex(0.0, -r));
    throw UsageError("--psi must be one of 0, 1, +, -, +i, -i");
}

unsigned sweep_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char *env = std::getenv("PULSEFORGE_THREADS");
    if (env == nullptr || *env == '\0') {
        return hw;
    }
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
        throw UsageError("PULSEFORGE_THREADS must be a positive integer");
    }
    return std::min<unsigned>(hw, static_cast<unsigned>(std::min<long>(v, 1024)));
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw CommandFailure("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file) {
        throw CommandFailure("failed writing '" + path + "'");
    }
}

TargetRotation target_of(const Config &cfg) {
    return TargetRotation(parse_angle(cfg.theta, cfg.degrees), parse_angle(cfg.phi, cfg.degrees));
}

FamilySequence make_family(const std::string &name, const TargetRotation &target, const Config &cfg) {
    if (name == "corpse") return corpse(target, CorpseIndices{cfg.nu1, cfg.nu2, cfg.nu3});
    if (name == "short-corpse") return short_corpse(target);
    if (name == "fundamental-corpse") return fundamental_corpse(target);
    if (name == "twin") return twin_corpse(target, TwinIndices{cfg.mu1, cfg.mu2, cfg.mu3});
    throw UsageError("unknown family '" + name + "'; expected corpse, short-corpse, fundamental-corpse or twin");
}

CompositeSequence make_composite(const Config &cfg) {
    TargetRotation target = target_of(cfg);
    WindingNumbers w(cfg.n1, cfg.n2, cfg.n3);
    C1Bounds bounds = c1_bounds(target.c(), w.parity());
    double c1;
    if (*cfg.c1 == "upper") {
        c1 = bounds.upper;
    } else if (*cfg.c1 == "lower") {
        c1 = bounds.lower;
    } else {
        c1 = parse_number(*cfg.c1, "--c1");
    }
    return build_sequence(target, c1, w, parse_branch_flag(cfg.branch));
}

void require_one_source(const Config &cfg, bool allow_elementary) {
    int sources = (cfg.c1 ? 1 : 0) + (cfg.family ? 1 : 0) + (cfg.elementary ? 1 : 0);
    if (sources != 1) {
        throw UsageError(allow_elementary ? "give exactly one of --c1, --family or --elementary"
                                          : "give exactly one of --c1 or --family");
    }
}

int cmd_synth(const Config &cfg, std::ostream &out) {
    require_one_source(cfg, false);
    std::string text = cfg.c1 ? to_json(make_composite(cfg)) : to_json(make_family(*cfg.family, target_of(cfg), cfg));
    emit(text, cfg.output, out);
    return 0;
}

int cmd_family(const Config &cfg, std::ostream &out) {
    emit(to_json(make_family(*cfg.family, target_of(cfg), cfg)), cfg.output, out);
    return 0;
}

int cmd_bounds(const Config &cfg, std::ostream &out) {
    TargetRotation target(parse_angle(cfg.theta, cfg.degrees), 0.0);
    C1Bounds b = c1_bounds(target.c(), cfg.parity == 0 ? Parity::kEven : Parity::kOdd);
    std::string text = "c1_lower: " + fmt("%.17g", b.lower) + "\nc1_upper: " + fmt("%.17g", b.upper) + "\n";
    emit(text, cfg.output, out);
    return 0;
}

int cmd_verify(const Config &cfg, std::istream &in, std::ostream &out) {
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(cfg.input, std::ios::binary);
        if (!file) {
            throw CommandFailure("cannot read '" + cfg.input + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    SequenceDocument doc = parse_sequence_json(text);
    Su2Matrix ideal = target_unitary(doc.target);
    if (doc.implemented_sign < 0) {
        ideal = -ideal;
    }
    double residual = robustness_residual(doc.pulses);
    double distance = max_abs_diff(sequence_unitary(doc.pulses).matrix(), ideal.matrix());
    double infidelity = gate_infidelity(ideal, sequence_unitary(doc.pulses, OreMagnitude(cfg.f)));
    bool ok = residual < kVerifyResidualThreshold && distance < kVerifyDistanceThreshold;

    std::string report = "robustness_residual: " + fmt("%.6e", residual) + "\n" +
                         "product_distance: " + fmt("%.6e", distance) + "\n" + "gate_infidelity: " +
                         fmt("%.6e", infidelity) + " (f = " + fmt("%.17g", cfg.f) + ")\n" +
                         "status: " + (ok ? "ok" : "FAILED") + "\n";
    emit(report, cfg.output, out);
    return ok ? 0 : 1;
}

int cmd_sweep(const Config &cfg, std::ostream &out, bool state) {
    double theta = parse_angle(cfg.theta, cfg.degrees);
    WindingNumbers w = parse_windings(cfg.windings);
    Branch branch = parse_branch_flag(cfg.branch);
    SweepOptions options{sweep_threads()};
    SweepTable table = state ? state_infidelity_sweep(theta, w, cfg.f, cfg.points, branch, parse_psi(cfg.psi), options)
                             : infidelity_sweep(theta, w, cfg.f, cfg.points, branch, options);
    emit(table.to_csv(!cfg.no_meta), cfg.output, out);
    return 0;
}

int cmd_sweep_time(const Config &cfg, std::ostream &out) {
    if (cfg.total_winding < 0) {
        throw UsageError("--n must be a non-negative integer");
    }
    std::vector<double> grid;
    for (int j = 1; j <= cfg.points; j++) {
        grid.push_back(-1.0 + 2.0 * j / (cfg.points + 1));
    }
    emit(time_sweep(cfg.total_winding, grid).to_csv(!cfg.no_meta), cfg.output, out);
    return 0;
}

int cmd_scaling(const Config &cfg, std::ostream &out) {
    require_one_source(cfg, true);
    ScalingFit fit{};
    std::string subject;
    if (cfg.elementary) {
        fit = scaling_exponent(Pulse(parse_angle(cfg.theta, cfg.degrees), parse_angle(cfg.phi, cfg.degrees)),
                               cfg.f_min, cfg.f_max, cfg.points);
        subject = "elementary";
    } else if (cfg.family) {
        fit = scaling_exponent(make_family(*cfg.family, target_of(cfg), cfg), cfg.f_min, cfg.f_max, cfg.points);
        subject = *cfg.family;
    } else {
        fit = scaling_exponent(make_composite(cfg), cfg.f_min, cfg.f_max, cfg.points);
        subject = "c1=" + *cfg.c1;
    }
    SweepTable table("scaling", {"f_min", "f_max", "points", "exponent", "intercept", "residual"});
    table.add_metadata("subject", subject);
    table.add_metadata("theta", format_scientific(parse_angle(cfg.theta, cfg.degrees)));
    table.add_row({fit.f_range.first, fit.f_range.second, static_cast<double>(fit.points), fit.exponent, fit.intercept,
                   fit.residual});
    emit(table.to_csv(!cfg.no_meta), cfg.output, out);
    return 0;
}

void add_target(CLI::App *sub, Config &cfg, bool with_phi) {
    sub->add_option("--theta", cfg.theta, "Target rotation angle (radians, or pi literals)")->required();
    if (with_phi) {
        sub->add_option("--phi", cfg.phi, "Target rotation phase")->capture_default_str();
    }
    sub->add_flag("--degrees", cfg.degrees, "Read plain numeric angles as degrees");
}

void add_family_indices(CLI::App *sub, Config &cfg) {
    sub->add_option("--nu1", cfg.nu1, "CORPSE index nu1")->capture_default_str();
    sub->add_option("--nu2", cfg.nu2, "CORPSE index nu2")->capture_default_str();
    sub->add_option("--nu3", cfg.nu3, "CORPSE index nu3")->capture_default_str();
    sub->add_option("--mu1", cfg.mu1, "Twin index mu1")->capture_default_str();
    sub->add_option("--mu2", cfg.mu2, "Twin index mu2")->capture_default_str();
    sub->add_option("--mu3", cfg.mu3, "Twin index mu3")->capture_default_str();
}

void add_sequence_source(CLI::App *sub, Config &cfg) {
    sub->add_option("--c1", cfg.c1, "cos(theta1/2): a number, 'upper' or 'lower'");
    sub->add_option("--family", cfg.family, "corpse | short-corpse | fundamental-corpse | twin");
    sub->add_option("--n1", cfg.n1, "Winding of pulse 1")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--n2", cfg.n2, "Winding of pulse 2")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--n3", cfg.n3, "Winding of pulse 3")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--branch", cfg.branch, "Sign of sin(phi2 - phi1): + or -")->capture_default_str();
    add_family_indices(sub, cfg);
}

void add_output(CLI::App *sub, Config &cfg) {
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
}

void add_sweep_common(CLI::App *sub, Config &cfg) {
    add_target(sub, cfg, false);
    sub->add_option("--n", cfg.windings, "Windings n1,n2,n3")->capture_default_str();
    sub->add_option("--f", cfg.f, "ORE magnitude f")->required();
    sub->add_option("--points", cfg.points, "Grid points over the admissible c1 interval")
        ->capture_default_str()
        ->check(CLI::Range(3, 1000000));
    sub->add_option("--branch", cfg.branch, "Sign of sin(phi2 - phi1): + or -")->capture_default_str();
    sub->add_flag("--no-meta", cfg.no_meta, "Omit '#' metadata lines");
    add_output(sub, cfg);
}

}  // namespace

double parse_angle(const std::string &raw, bool degrees) {
    std::string text;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    size_t pos = text.find("pi");
    if (pos == std::string::npos) {
        double v = parse_number(text, "angle");
        return degrees ? v * kPi / 180.0 : v;
    }
    std::string prefix = text.substr(0, pos);
    std::string suffix = text.substr(pos + 2);
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.pop_back();
    }
    double coefficient = 1.0;
    if (prefix == "-") {
        coefficient = -1.0;
    } else if (!prefix.empty() && prefix != "+") {
        coefficient = parse_number(prefix, "angle '" + raw + "'");
    }
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix[0] != '/') {
            throw UsageError("angle '" + raw + "' is not of the form [k][*]pi[/d]");
        }
        divisor = parse_number(suffix.substr(1), "angle '" + raw + "'");
        if (divisor == 0.0) {
            throw UsageError("angle '" + raw + "' divides by zero");
        }
    }
    return coefficient * kPi / divisor;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Synthesis and analysis of off-resonance-robust three-pulse sequences", "pulseforge"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    auto *synth = app.add_subcommand("synth", "Build a robust sequence from c1 (or a named family); prints JSON");
    add_target(synth, cfg, true);
    add_sequence_source(synth, cfg);
    add_output(synth, cfg);

    auto *family = app.add_subcommand("family", "Build a closed-form family member; prints JSON");
    add_target(family, cfg, true);
    family->add_option("--name", cfg.family, "corpse | short-corpse | fundamental-corpse | twin")->required();
    add_family_indices(family, cfg);
    add_output(family, cfg);

    auto *bounds = app.add_subcommand("bounds", "Print the admissible c1 interval");
    add_target(bounds, cfg, false);
    bounds->add_option("--parity", cfg.parity, "Parity of n1 + n2 + n3")
        ->capture_default_str()
        ->check(CLI::IsMember({0, 1}));
    add_output(bounds, cfg);

    auto *verify = app.add_subcommand("verify", "Check a sequence JSON document; exit 0 iff it passes");
    verify->add_option("--input", cfg.input, "Sequence JSON file, '-' for stdin")->capture_default_str();
    verify->add_option("--f", cfg.f, "ORE magnitude for the reported gate infidelity")->capture_default_str();
    add_output(verify, cfg);

    auto *sweep_inf = app.add_subcommand("sweep-infidelity", "Gate infidelity across the c1 interval; CSV");
    add_sweep_common(sweep_inf, cfg);

    auto *sweep_state = app.add_subcommand("sweep-state", "State infidelity across the c1 interval; CSV");
    add_sweep_common(sweep_state, cfg);
    sweep_state->add_option("--psi", cfg.psi, "Initial state: 0, 1, +, -, +i, -i")->capture_default_str();

    auto *sweep_time = app.add_subcommand("sweep-time", "Minimum operation time against c; CSV");
    sweep_time->add_option("--n", cfg.total_winding, "Total winding n1 + n2 + n3")->capture_default_str();
    sweep_time->add_option("--points", cfg.points, "Interior grid points in (-1, 1)")
        ->default_val(50)
        ->check(CLI::Range(2, 1000000));
    sweep_time->add_flag("--no-meta", cfg.no_meta, "Omit '#' metadata lines");
    add_output(sweep_time, cfg);

    auto *scaling = app.add_subcommand("scaling", "Fit the exponent of gate infidelity against f; CSV");
    add_target(scaling, cfg, true);
    add_sequence_source(scaling, cfg);
    scaling->add_flag("--elementary", cfg.elementary, "Fit a single pulse instead of a sequence");
    scaling->add_option("--f-min", cfg.f_min, "Smallest f")->capture_default_str();
    scaling->add_option("--f-max", cfg.f_max, "Largest f")->capture_default_str();
    scaling->add_option("--points", cfg.points, "Geometric grid points")->default_val(12);
    scaling->add_flag("--no-meta", cfg.no_meta, "Omit '#' metadata lines");
    add_output(scaling, cfg);

    auto usage = [&]() {
        for (auto *sub : app.get_subcommands()) {
            return sub->help();
        }
        return app.help();
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << usage();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << version() << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << usage();
        return 2;
    }

    try {
        if (synth->parsed()) return cmd_synth(cfg, out);
        if (family->parsed()) return cmd_family(cfg, out);
        if (bounds->parsed()) return cmd_bounds(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, in, out);
        if (sweep_inf->parsed()) return cmd_sweep(cfg, out, false);
        if (sweep_state->parsed()) return cmd_sweep(cfg, out, true);
        if (sweep_time->parsed()) return cmd_sweep_time(cfg, out);
        if (scaling->parsed()) return cmd_scaling(cfg, out);
    } catch (const OutOfBounds &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidIndices &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        // Value-type validation (angles, windings, JSON fields) counts as an argument error.
        err << "error: " << e.what() << "\n\n" << usage();
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n\n" << app.help();
    return 2;
}

}  // namespace pulseforge::cli
