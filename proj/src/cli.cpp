// Copyright 2026 The qrabi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qrabi/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"

#include "qrabi/algebra.hpp"
#include "qrabi/numerics.hpp"
#include "qrabi/schedule.hpp"
#include "qrabi/synthesis.hpp"

namespace qrabi::cli {

namespace {

constexpr double kDriftThreshold = 1e-8;

/// A failure with a fixed exit code and a message for the diagnostic stream.
struct Failure : std::runtime_error {
    int code;
    Failure(int c, const std::string &message) : std::runtime_error(message), code(c) {}
};

[[noreturn]] void usage(const std::string &message) { throw Failure(kUsage, message); }

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        usage("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        usage("cannot write " + path);
    }
}

/// Writes to --output when given, otherwise to `out`.
void emit(const std::string &output, const std::string &text, std::ostream &out) {
    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
    }
}

struct AtomFlags {
    double E0 = 0.0;
    double E1 = 0.0;
    double E2 = 0.0;
    double delta = 0.0;
    CLI::Option *e1 = nullptr;
    CLI::Option *e2 = nullptr;
    CLI::Option *d = nullptr;

    void attach(CLI::App &app) {
        app.add_option("--E0", E0, "ground energy")->capture_default_str();
        e1 = app.add_option("--E1", E1, "first excited energy (three-level)");
        e2 = app.add_option("--E2", E2, "second excited energy (three-level)");
        d = app.add_option("--Delta", delta, "level splitting (two-level)");
        e1->excludes(d);
        e2->excludes(d);
    }

    [[nodiscard]] Atom resolve() const {
        if (d->count() > 0) {
            return TwoLevelAtom{E0, delta};
        }
        if (e1->count() == 0 || e2->count() == 0) {
            usage("atom needs --E1 and --E2, or --Delta");
        }
        return AtomSpec{E0, E1, E2};
    }
};

void require_valid(const Atom &atom) {
    try {
        validate_atom(atom);
    } catch (const std::invalid_argument &e) {
        throw Failure(kValidation, e.what());
    }
}

// ---------------------------------------------------------------- gen

struct GenFlags {
    int n = 0;
    std::string which;
    int index = 0;
    std::string output;
};

int cmd_gen(const GenFlags &f, std::ostream &out) {
    if (f.n < 2) {
        usage("gen: --n must be >= 2");
    }
    ComplexMatrix m = ComplexMatrix::identity(1);
    if (f.which == "sigma1") {
        m = sigma_generators(f.n).shift.matrix();
    } else if (f.which == "sigma3") {
        m = sigma_generators(f.n).clock.matrix();
    } else if (f.which == "walsh") {
        m = walsh_hadamard(f.n).matrix();
    } else if (f.which == "exchange") {
        m = exchange_matrix(f.n).matrix();
    } else {
        if (f.n != 3) {
            usage("gen: gellmann requires --n 3");
        }
        const GellMannSubset g = gell_mann_subset();
        switch (f.index) {
        case 2:
            m = g.lambda2;
            break;
        case 3:
            m = g.lambda3;
            break;
        case 5:
            m = g.lambda5;
            break;
        case 8:
            m = g.lambda8;
            break;
        default:
            usage("gen: gellmann needs --index 2, 3, 5 or 8");
        }
    }
    emit(f.output, matrix_to_json(m), out);
    return kOk;
}

// ---------------------------------------------------------------- synthesize

struct SynthFlags {
    std::string target;
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    CLI::Option *theta_opt = nullptr;
    CLI::Option *alpha_opt = nullptr;
    CLI::Option *beta_opt = nullptr;
    AtomFlags atom;
    double g = 0.0;
    std::string mode = "strict";
    std::string output;
};

const std::map<std::string, GateKind> &target_names() {
    static const std::map<std::string, GateKind> names{
        {"sigma1-2", GateKind::Sigma1_2lvl}, {"sigma-theta", GateKind::SigmaTheta},
        {"w2", GateKind::W2},                {"perm01", GateKind::Perm01},
        {"perm02", GateKind::Perm02},        {"sigma1-3", GateKind::Sigma1_3},
        {"k3", GateKind::K3},                {"sigma3-3", GateKind::Sigma3_3},
        {"diag-phases", GateKind::DiagPhases}, {"matrix-i", GateKind::MatrixI},
        {"matrix-f", GateKind::MatrixF},     {"w3", GateKind::W3},
    };
    return names;
}

int cmd_synthesize(const SynthFlags &f, std::ostream &out, std::ostream &err) {
    const auto it = target_names().find(f.target);
    if (it == target_names().end()) {
        usage("synthesize: unsupported target '" + f.target + "'");
    }
    GateTarget target = GateTarget::of(it->second);
    if (it->second == GateKind::SigmaTheta) {
        if (f.theta_opt->count() == 0) {
            usage("synthesize: sigma-theta needs --theta");
        }
        target = GateTarget::sigma_theta(f.theta);
    } else if (it->second == GateKind::DiagPhases) {
        if (f.alpha_opt->count() == 0 || f.beta_opt->count() == 0) {
            usage("synthesize: diag-phases needs --alpha and --beta");
        }
        target = GateTarget::diag_phases(f.alpha, f.beta);
    }
    const Atom atom = f.atom.resolve();
    if (gate_dimension(target) != atom_dimension(atom)) {
        usage("synthesize: target '" + f.target + "' needs a " +
              std::to_string(gate_dimension(target)) + "-level atom");
    }
    require_valid(atom);
    if (!(f.g > 0.0)) {
        usage("synthesize: --g must be > 0");
    }
    const SynthesisMode mode =
        f.mode == "strict" ? SynthesisMode::Strict : SynthesisMode::Projective;

    const SynthesisResult r = synthesize(target, atom, f.g, mode);

    std::ostringstream report;
    report << "target: " << f.target << "\n"
           << "mode: " << to_string(r.mode) << "\n"
           << "fidelity: " << num(r.fidelity) << "\n"
           << "max_error: " << num(r.max_error) << "\n"
           << "total_duration: " << num(r.elapsed_total) << "\n"
           << "segments: " << r.schedule.segments.size() << "\n"
           << "index,kind,start,duration,g1,g2,g3,phi1,phi2,phi3\n";
    double start = 0.0;
    for (std::size_t i = 0; i < r.schedule.segments.size(); ++i) {
        const Segment &s = r.schedule.segments[i];
        report << i << ',' << to_string(s.kind) << ',' << num(start) << ','
               << num(s.duration) << ',' << num(s.params.g1) << ',' << num(s.params.g2)
               << ',' << num(s.params.g3) << ',' << num(s.params.phi1) << ','
               << num(s.params.phi2) << ',' << num(s.params.phi3) << "\n";
        start += s.duration;
    }
    for (const std::string &w : r.warnings) {
        err << "warning: " << w << "\n";
    }

    const std::string document = serialize(r.schedule);
    if (f.output.empty()) {
        out << document;
        err << report.str();
    } else {
        write_file(f.output, document);
        out << report.str();
    }
    return mode == SynthesisMode::Strict && r.mode != mode ? kValidation : kOk;
}

// ---------------------------------------------------------------- propagate

struct PropagateFlags {
    std::string input;
    std::string output;
};

int cmd_propagate(const PropagateFlags &f, std::ostream &out, std::ostream &err) {
    const std::string text = read_file(f.input);
    PulseSchedule schedule;
    try {
        schedule = deserialize(text);
    } catch (const ParseError &e) {
        usage(f.input + ": " + e.what());
    }
    const ScheduleDiagnostics diag = validate(schedule);
    for (const std::string &w : diag.warnings) {
        err << "warning: " << w << "\n";
    }
    if (!diag.ok()) {
        for (const std::string &e : diag.errors) {
            err << "error: " << e << "\n";
        }
        return kValidation;
    }
    emit(f.output, matrix_to_json(compose(schedule).matrix()), out);
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
    std::string kind;
    AtomFlags atom;
    DriveParams params;
    double g = 0.0;
    bool equal = false;
    CLI::Option *g_opt = nullptr;
    CLI::Option *phi3_opt = nullptr;
    double t = 0.0;
    long steps = 100000;
    double tolerance = 1e-6;
    std::string output;
};

std::optional<DriveKind> parse_kind_flag(const std::string &name) {
    static const std::map<std::string, DriveKind> aliases{
        {"free0", DriveKind::Free0},        {"type1", DriveKind::TypeI},
        {"type2", DriveKind::TypeII},       {"type3", DriveKind::TypeIII},
        {"type4", DriveKind::TypeIV},       {"type5", DriveKind::TypeV},
        {"type6", DriveKind::TypeVI},       {"type7", DriveKind::TypeVII},
        {"two-level-u", DriveKind::TwoLevelU}, {"two-level-v", DriveKind::TwoLevelV},
    };
    if (const auto it = aliases.find(name); it != aliases.end()) {
        return it->second;
    }
    return parse_drive_kind(name);
}

int cmd_verify(VerifyFlags f, std::ostream &out, std::ostream &err) {
    const std::optional<DriveKind> kind = parse_kind_flag(f.kind);
    if (!kind) {
        usage("verify: unknown kind '" + f.kind + "'");
    }
    if (f.steps < 1) {
        usage("verify: --steps must be >= 1");
    }
    if (!(f.t >= 0.0)) {
        usage("verify: --t must be >= 0");
    }
    if (f.equal) {
        if (f.g_opt->count() == 0) {
            usage("verify: --equal-couplings needs --g");
        }
        f.params.g1 = f.params.g2 = f.params.g3 = f.g;
        if (f.phi3_opt->count() == 0) {
            f.params.phi3 = f.params.phi1 + f.params.phi2;
        }
    } else if (f.g_opt->count() > 0) {
        usage("verify: --g is only used with --equal-couplings");
    }
    const Atom atom = f.atom.resolve();
    if (kind_dimension(*kind) != atom_dimension(atom)) {
        usage("verify: kind " + f.kind + " needs a " +
              std::to_string(kind_dimension(*kind)) + "-level atom");
    }
    require_valid(atom);
    try {
        validate_params(f.params);
    } catch (const std::invalid_argument &e) {
        throw Failure(kValidation, e.what());
    }

    const IntegrationReport r = verify_kind(*kind, atom, f.params, f.t, f.steps);
    std::ostringstream csv;
    csv << "kind,t,steps,max_state_error,norm_drift\n"
        << to_string(r.kind) << ',' << num(f.t) << ',' << r.steps << ','
        << num(r.max_state_error) << ',' << num(r.norm_drift) << "\n";
    emit(f.output, csv.str(), out);
    if (r.max_state_error > f.tolerance || r.norm_drift > kDriftThreshold) {
        err << "verify: threshold exceeded (max_state_error " << num(r.max_state_error)
            << " vs " << num(f.tolerance) << ", norm_drift " << num(r.norm_drift)
            << " vs " << num(kDriftThreshold) << ")\n";
        return kThreshold;
    }
    return kOk;
}

// ---------------------------------------------------------------- rwa-scan

struct ScanFlags {
    double E0 = 0.0;
    double delta = 1.0;
    std::vector<double> g;
    double phi = 0.0;
    double t = 0.0;
    CLI::Option *t_opt = nullptr;
    std::string output;
};

int cmd_rwa_scan(const ScanFlags &f, std::ostream &out, std::ostream &err) {
    const TwoLevelAtom atom{f.E0, f.delta};
    require_valid(atom);
    for (double g : f.g) {
        if (!(g >= 0.0)) {
            usage("rwa-scan: every --g must be >= 0");
        }
    }
    std::optional<double> t_final;
    if (f.t_opt->count() > 0) {
        if (!(f.t >= 0.0)) {
            usage("rwa-scan: --t must be >= 0");
        }
        t_final = f.t;
    }
    const std::vector<RwaScanPoint> points = rwa_error_scan(atom, f.g, f.phi, t_final);
    emit(f.output, to_csv(points), out);

    // With π/2-pulses the infidelity must not decrease as g grows.
    if (!t_final) {
        std::vector<RwaScanPoint> sorted = points;
        std::sort(sorted.begin(), sorted.end(),
                  [](const RwaScanPoint &a, const RwaScanPoint &b) { return a.g < b.g; });
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].g > sorted[i - 1].g &&
                sorted[i].infidelity < sorted[i - 1].infidelity) {
                err << "rwa-scan: infidelity decreases between g = " << num(sorted[i - 1].g)
                    << " and g = " << num(sorted[i].g) << "\n";
                return kThreshold;
            }
        }
    }
    return kOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gate synthesis and propagation for driven two- and three-level atoms",
                 "qrabi"};
    app.require_subcommand(1);

    GenFlags gen;
    CLI::App *gen_cmd = app.add_subcommand("gen", "print a standard matrix");
    gen_cmd->add_option("--n", gen.n, "dimension")->required();
    gen_cmd->add_option("--which", gen.which, "matrix family")
        ->required()
        ->check(CLI::IsMember({"sigma1", "sigma3", "walsh", "exchange", "gellmann"}));
    gen_cmd->add_option("--index", gen.index, "Gell-Mann index (2, 3, 5 or 8)");
    gen_cmd->add_option("-o,--output", gen.output, "output file");

    SynthFlags synth;
    CLI::App *synth_cmd = app.add_subcommand("synthesize", "compile a gate into a schedule");
    synth_cmd
        ->add_option("--target", synth.target,
                     "sigma1-2, sigma-theta, w2, perm01, perm02, sigma1-3, k3, "
                     "sigma3-3, diag-phases, matrix-i, matrix-f or w3")
        ->required();
    synth.theta_opt = synth_cmd->add_option("--theta", synth.theta, "sigma-theta angle");
    synth.alpha_opt = synth_cmd->add_option("--alpha", synth.alpha, "diag-phases alpha");
    synth.beta_opt = synth_cmd->add_option("--beta", synth.beta, "diag-phases beta");
    synth.atom.attach(*synth_cmd);
    synth_cmd->add_option("--g", synth.g, "coupling strength")->required();
    synth_cmd->add_option("--mode", synth.mode, "strict or projective")
        ->capture_default_str()
        ->check(CLI::IsMember({"strict", "projective"}));
    synth_cmd->add_option("-o,--output", synth.output, "schedule file");

    PropagateFlags prop;
    CLI::App *prop_cmd = app.add_subcommand("propagate", "compose a schedule file");
    prop_cmd->add_option("schedule", prop.input, "schedule JSON file")->required();
    prop_cmd->add_option("-o,--output", prop.output, "output file");

    VerifyFlags ver;
    CLI::App *ver_cmd = app.add_subcommand("verify", "compare a closed form against RK4");
    ver_cmd->add_option("--kind", ver.kind, "drive kind, e.g. type4")->required();
    ver.atom.attach(*ver_cmd);
    ver_cmd->add_option("--g1", ver.params.g1, "coupling on 0-1");
    ver_cmd->add_option("--g2", ver.params.g2, "coupling on 1-2");
    ver_cmd->add_option("--g3", ver.params.g3, "coupling on 0-2");
    ver_cmd->add_option("--phi1", ver.params.phi1, "phase on 0-1");
    ver_cmd->add_option("--phi2", ver.params.phi2, "phase on 1-2");
    ver.phi3_opt = ver_cmd->add_option("--phi3", ver.params.phi3, "phase on 0-2");
    ver_cmd->add_flag("--equal-couplings", ver.equal,
                      "set g1 = g2 = g3 = g; phi3 defaults to phi1 + phi2");
    ver.g_opt = ver_cmd->add_option("--g", ver.g, "common coupling");
    ver_cmd->add_option("--t", ver.t, "final time")->required();
    ver_cmd->add_option("--steps", ver.steps, "RK4 steps")->capture_default_str();
    ver_cmd->add_option("--tolerance", ver.tolerance, "max_state_error threshold")
        ->capture_default_str();
    ver_cmd->add_option("-o,--output", ver.output, "CSV file");

    ScanFlags scan;
    CLI::App *scan_cmd = app.add_subcommand("rwa-scan", "full cosine drive versus RWA");
    scan_cmd->add_option("--E0", scan.E0, "ground energy")->capture_default_str();
    scan_cmd->add_option("--Delta", scan.delta, "level splitting")->capture_default_str();
    scan_cmd->add_option("--g", scan.g, "comma-separated couplings")
        ->required()
        ->delimiter(',');
    scan_cmd->add_option("--phi", scan.phi, "drive phase")->capture_default_str();
    scan.t_opt = scan_cmd->add_option("--t", scan.t, "duration (default pi/(2g))");
    scan_cmd->add_option("-o,--output", scan.output, "CSV file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out);
        }
        if (synth_cmd->parsed()) {
            return cmd_synthesize(synth, out, err);
        }
        if (prop_cmd->parsed()) {
            return cmd_propagate(prop, out, err);
        }
        if (ver_cmd->parsed()) {
            return cmd_verify(ver, out, err);
        }
        return cmd_rwa_scan(scan, out, err);
    } catch (const Failure &e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
}

} // namespace qrabi::cli
