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
#include "qrabi/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>

#include "qrabi/algebra.hpp"

namespace qrabi {

namespace {

/**
 * Accumulates the segments of one construction. Times returned by now()
 * are measured from the start of the construction, matching the t_a, t_b, …
 * labels of the phase conditions.
 */
class Plan {
  public:
    Plan(double e0, double g, bool strict) : e0_(e0), g_(g), strict_(strict) {}

    std::size_t push(DriveKind kind, double duration) {
        Segment s;
        s.kind = kind;
        s.duration = duration;
        switch (kind) {
        case DriveKind::TypeI:
        case DriveKind::TwoLevelU:
            s.params.g1 = g_;
            break;
        case DriveKind::TypeII:
            s.params.g2 = g_;
            break;
        case DriveKind::TypeIII:
            s.params.g3 = g_;
            break;
        case DriveKind::TypeV:
            s.params.g1 = g_;
            s.params.g3 = g_;
            break;
        default:
            break;
        }
        segments_.push_back(s);
        now_ += duration;
        return segments_.size() - 1;
    }

    /// Strict mode: Free0 (or V) padding up to the next multiple of 2π/E0.
    void pad(DriveKind free_kind) {
        if (!strict_) {
            return;
        }
        const double k = std::ceil(e0_ * now_ / kTwoPi);
        const double padding = std::max(0.0, kTwoPi * k / e0_ - now_);
        push(free_kind, padding);
    }

    [[nodiscard]] double now() const noexcept { return now_; }
    DriveParams &params(std::size_t i) { return segments_[i].params; }
    std::vector<Segment> take() { return std::move(segments_); }

  private:
    double e0_;
    double g_;
    bool strict_;
    double now_ = 0.0;
    std::vector<Segment> segments_;
};

// Two-level constructions; the atom splitting is d.

std::vector<Segment> build_sigma1_2(double e0, double d, double g, bool strict) {
    Plan p(e0, g, strict);
    const double t1 = solve_time(d, 3.0 * kPi / 2.0);
    p.push(DriveKind::TwoLevelV, t1);
    const std::size_t u = p.push(DriveKind::TwoLevelU, solve_time(g, kPi / 2.0));
    p.pad(DriveKind::TwoLevelV);
    const double t3 = p.now();
    p.params(u).phi1 = solve_phase(d * (t3 - t1), kI);
    return p.take();
}

std::vector<Segment> build_sigma_theta(double e0, double d, double g, double theta,
                                       bool strict) {
    Plan p(e0, g, strict);
    const std::size_t u = p.push(DriveKind::TwoLevelU, solve_time(g, 0.0, 1));
    p.pad(DriveKind::TwoLevelV);
    const double t2 = p.now();
    p.params(u).phi1 = solve_phase(d * t2, phase(theta));
    return p.take();
}

std::vector<Segment> build_w2(double e0, double d, double g, bool strict) {
    Plan p(e0, g, strict);
    const double t1 = solve_time(d, 3.0 * kPi / 2.0);
    p.push(DriveKind::TwoLevelV, t1);
    const std::size_t u = p.push(DriveKind::TwoLevelU, solve_time(g, kPi / 4.0));
    const double t2 = p.now();
    p.push(DriveKind::TwoLevelV, solve_time(d, 3.0 * kPi / 2.0));
    const double t3 = p.now();
    p.pad(DriveKind::TwoLevelV);
    const double t4 = p.now();
    p.params(u).phi1 = solve_phase(d * (t4 - t3 + t2 - t1), 1.0);
    return p.take();
}

// Three-level constructions.

std::vector<Segment> build_perm01(const AtomSpec &a, double g, bool strict) {
    Plan p(a.E0, g, strict);
    const double ta = solve_time(a.delta1(), 3.0 * kPi / 2.0);
    p.push(DriveKind::Free0, ta);
    const std::size_t u1 = p.push(DriveKind::TypeI, solve_time(g, kPi / 2.0));
    const double tb = p.now();
    p.push(DriveKind::Free0, solve_time(a.delta1(), 3.0 * kPi / 2.0));
    const double tc = p.now();
    const std::size_t u3 = p.push(DriveKind::TypeIII, solve_time(g, 0.0, 1));
    const double td = p.now();
    p.pad(DriveKind::Free0);
    const double te = p.now();
    p.params(u1).phi1 =
        solve_phase(a.omega1() * (tb - ta) + a.delta1() * (te - tc), 1.0);
    p.params(u3).phi3 =
        solve_phase(a.omega3() * (td - tc) + a.delta2() * (te - td + tc), 1.0);
    return p.take();
}

std::vector<Segment> build_perm02(const AtomSpec &a, double g, bool strict) {
    Plan p(a.E0, g, strict);
    const double ta = solve_time(a.delta2(), 3.0 * kPi / 2.0);
    p.push(DriveKind::Free0, ta);
    const std::size_t u3 = p.push(DriveKind::TypeIII, solve_time(g, kPi / 2.0));
    const double tb = p.now();
    p.push(DriveKind::Free0, solve_time(a.delta2(), 3.0 * kPi / 2.0));
    const double tc = p.now();
    const std::size_t u1 = p.push(DriveKind::TypeI, solve_time(g, 0.0, 1));
    const double td = p.now();
    p.pad(DriveKind::Free0);
    const double te = p.now();
    p.params(u3).phi3 =
        solve_phase(a.omega3() * (tb - ta) + a.delta2() * (te - tc), 1.0);
    p.params(u1).phi1 =
        solve_phase(a.omega1() * (td - tc) + a.delta1() * (te - td + tc), 1.0);
    return p.take();
}

std::vector<Segment> build_diag(const AtomSpec &a, double g, double alpha,
                                double beta, bool strict) {
    Plan p(a.E0, g, strict);
    const std::size_t u1 = p.push(DriveKind::TypeI, solve_time(g, 0.0, 1));
    const double ta = p.now();
    const std::size_t u3 = p.push(DriveKind::TypeIII, solve_time(g, 0.0, 1));
    const double tb = p.now();
    p.pad(DriveKind::Free0);
    const double tc = p.now();
    p.params(u1).phi1 =
        solve_phase(a.delta1() * (tc - ta) + a.omega1() * ta, phase(alpha));
    p.params(u3).phi3 = solve_phase(
        a.omega3() * (tb - ta) + a.delta2() * (tc - tb + ta), phase(beta));
    return p.take();
}

std::vector<Segment> build_matrix_f(const AtomSpec &a, double g, bool strict) {
    Plan p(a.E0, g, strict);
    const std::size_t u2 = p.push(DriveKind::TypeII, solve_time(g, kPi / 4.0));
    const double ta = p.now();
    const std::size_t u1 = p.push(DriveKind::TypeI, solve_time(g, 0.0, 1));
    const double tb = p.now();
    p.pad(DriveKind::Free0);
    const double tc = p.now();
    const Complex target = phase(kPi / 4.0);
    p.params(u1).phi1 = solve_phase(
        a.delta1() * (tc - tb + ta) + a.omega1() * (tb - ta), target);
    p.params(u2).phi2 = solve_phase(
        (a.omega2() + a.delta1()) * ta + a.delta2() * (tc - ta), target);
    return p.take();
}

/// TypeV pulse with cos(√2·g·t) = 1/√3, then padding that clears the frame.
std::vector<Segment> build_v_core(const AtomSpec &a, double g, bool strict) {
    Plan p(a.E0, g, strict);
    const std::size_t u5 = p.push(
        DriveKind::TypeV, solve_time(std::sqrt(2.0) * g, std::acos(1.0 / std::sqrt(3.0))));
    const double ta = p.now();
    p.pad(DriveKind::Free0);
    const double tb = p.now();
    p.params(u5).phi1 = solve_phase(a.delta1() * (tb - ta) + a.omega1() * ta, 1.0);
    p.params(u5).phi3 = solve_phase(a.delta2() * (tb - ta) + a.omega3() * ta, 1.0);
    return p.take();
}

void append(std::vector<Segment> &out, std::vector<Segment> more) {
    out.insert(out.end(), more.begin(), more.end());
}

std::vector<Segment> build_three_level(const GateTarget &t, const AtomSpec &a,
                                       double g, bool strict) {
    switch (t.kind) {
    case GateKind::Perm01:
        return build_perm01(a, g, strict);
    case GateKind::Perm02:
        return build_perm02(a, g, strict);
    case GateKind::Sigma1_3: {
        std::vector<Segment> s = build_perm01(a, g, strict);
        append(s, build_perm02(a, g, strict));
        return s;
    }
    case GateKind::K3: {
        std::vector<Segment> s = build_perm02(a, g, strict);
        append(s, build_perm01(a, g, strict));
        append(s, build_perm02(a, g, strict));
        return s;
    }
    case GateKind::Sigma3_3:
        return build_diag(a, g, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0, strict);
    case GateKind::DiagPhases:
        return build_diag(a, g, t.alpha, t.beta, strict);
    case GateKind::MatrixI:
        return build_diag(a, g, kPi / 2.0, kPi / 2.0, strict);
    case GateKind::MatrixF:
        return build_matrix_f(a, g, strict);
    case GateKind::W3: {
        // time order of F·I·(U₀U₅)·I
        std::vector<Segment> s = build_diag(a, g, kPi / 2.0, kPi / 2.0, strict);
        append(s, build_v_core(a, g, strict));
        append(s, build_diag(a, g, kPi / 2.0, kPi / 2.0, strict));
        append(s, build_matrix_f(a, g, strict));
        return s;
    }
    default:
        throw std::logic_error("build_three_level: not a three-level gate");
    }
}

std::vector<Segment> build_two_level(const GateTarget &t, const TwoLevelAtom &a,
                                     double g, bool strict) {
    switch (t.kind) {
    case GateKind::Sigma1_2lvl:
        return build_sigma1_2(a.E0, a.delta, g, strict);
    case GateKind::SigmaTheta:
        return build_sigma_theta(a.E0, a.delta, g, t.theta, strict);
    case GateKind::W2:
        return build_w2(a.E0, a.delta, g, strict);
    default:
        throw std::logic_error("build_two_level: not a two-level gate");
    }
}

} // namespace

GateTarget GateTarget::of(GateKind kind) {
    GateTarget t;
    t.kind = kind;
    return t;
}

GateTarget GateTarget::sigma_theta(double theta) {
    GateTarget t = of(GateKind::SigmaTheta);
    t.theta = theta;
    return t;
}

GateTarget GateTarget::diag_phases(double alpha, double beta) {
    GateTarget t = of(GateKind::DiagPhases);
    t.alpha = alpha;
    t.beta = beta;
    return t;
}

GateTarget GateTarget::custom_unitary(UnitaryMatrix u) {
    GateTarget t = of(GateKind::Custom);
    t.custom = std::move(u);
    return t;
}

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::Sigma1_2lvl:
        return "Sigma1_2lvl";
    case GateKind::SigmaTheta:
        return "SigmaTheta";
    case GateKind::W2:
        return "W2";
    case GateKind::Perm01:
        return "Perm01";
    case GateKind::Perm02:
        return "Perm02";
    case GateKind::Sigma1_3:
        return "Sigma1_3";
    case GateKind::K3:
        return "K3";
    case GateKind::Sigma3_3:
        return "Sigma3_3";
    case GateKind::DiagPhases:
        return "DiagPhases";
    case GateKind::MatrixI:
        return "MatrixI";
    case GateKind::MatrixF:
        return "MatrixF";
    case GateKind::W3:
        return "W3";
    case GateKind::Custom:
        return "Custom";
    }
    return "?";
}

std::string_view to_string(SynthesisMode mode) noexcept {
    return mode == SynthesisMode::Strict ? "strict" : "projective";
}

std::size_t gate_dimension(const GateTarget &target) {
    switch (target.kind) {
    case GateKind::Sigma1_2lvl:
    case GateKind::SigmaTheta:
    case GateKind::W2:
        return 2;
    case GateKind::Custom:
        if (!target.custom) {
            throw std::invalid_argument("gate_dimension: custom target without matrix");
        }
        return target.custom->dimension();
    default:
        return 3;
    }
}

UnitaryMatrix target_matrix(const GateTarget &target) {
    switch (target.kind) {
    case GateKind::Sigma1_2lvl:
        return UnitaryMatrix(pauli_two_level().sigma1);
    case GateKind::SigmaTheta:
        return UnitaryMatrix(ComplexMatrix::diagonal({1.0, phase(target.theta)}));
    case GateKind::W2:
        return walsh_hadamard(2);
    case GateKind::Perm01:
        return UnitaryMatrix(
            ComplexMatrix{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}});
    case GateKind::Perm02:
        return UnitaryMatrix(
            ComplexMatrix{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}});
    case GateKind::Sigma1_3:
        return sigma_generators(3).shift;
    case GateKind::K3:
        return exchange_matrix(3);
    case GateKind::Sigma3_3:
        return sigma_generators(3).clock;
    case GateKind::DiagPhases:
        return UnitaryMatrix(ComplexMatrix::diagonal(
            {1.0, phase(target.alpha), phase(target.beta)}));
    case GateKind::MatrixI:
        return UnitaryMatrix(ComplexMatrix::diagonal({1.0, kI, kI}));
    case GateKind::MatrixF: {
        const Complex w = phase(kPi / 4.0);
        const double c = std::cos(kPi / 4.0);
        const double s = std::sin(kPi / 4.0);
        return UnitaryMatrix(ComplexMatrix{{1.0, 0.0, 0.0},
                                           {0.0, w * c, w * (-kI * s)},
                                           {0.0, w * (-kI * s), w * c}});
    }
    case GateKind::W3:
        return walsh_hadamard(3);
    case GateKind::Custom:
        if (!target.custom) {
            throw std::invalid_argument("target_matrix: custom target without matrix");
        }
        return *target.custom;
    }
    throw std::logic_error("target_matrix: unknown gate kind");
}

double solve_phase(double accumulated, Complex target) {
    if (!std::isfinite(accumulated)) {
        throw std::invalid_argument("solve_phase: accumulated phase must be finite");
    }
    if (!(std::abs(std::abs(target) - 1.0) <= 1e-10)) {
        throw std::invalid_argument("solve_phase: target must have unit modulus");
    }
    double phi = std::fmod(-std::arg(target) - accumulated, kTwoPi);
    if (phi < 0.0) {
        phi += kTwoPi;
    }
    if (phi >= kTwoPi) {
        phi = 0.0;
    }
    return phi;
}

double solve_time(double rate, double target_angle, unsigned branch) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("solve_time: rate must be positive");
    }
    if (!(target_angle >= 0.0 && target_angle < kTwoPi)) {
        throw std::invalid_argument("solve_time: target angle must lie in [0, 2pi)");
    }
    return (target_angle + kTwoPi * branch) / rate;
}

SynthesisResult synthesize(const GateTarget &target, const Atom &atom, double g,
                           SynthesisMode mode) {
    if (target.kind == GateKind::Custom) {
        throw std::invalid_argument(
            "synthesize: custom targets are unsupported; only catalog gates compile");
    }
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("synthesize: coupling g must be positive");
    }
    validate_atom(atom);
    const std::size_t dim = gate_dimension(target);
    if (dim != atom_dimension(atom)) {
        std::ostringstream os;
        os << "synthesize: " << to_string(target.kind) << " needs a " << dim
           << "-level atom";
        throw std::invalid_argument(os.str());
    }

    std::vector<std::string> warnings;
    const double e0 = std::visit([](const auto &a) { return a.E0; }, atom);
    if (mode == SynthesisMode::Strict && !(e0 > 0.0)) {
        warnings.emplace_back(
            "strict mode needs E0 > 0 for the 2*pi*k/E0 padding; fell back to projective");
        mode = SynthesisMode::Projective;
    }
    const bool strict = mode == SynthesisMode::Strict;

    PulseSchedule schedule;
    schedule.atom = atom;
    schedule.mode = CompositionMode::ClosedForm;
    if (const auto *two = std::get_if<TwoLevelAtom>(&atom)) {
        schedule.segments = build_two_level(target, *two, g, strict);
    } else {
        schedule.segments = build_three_level(target, std::get<AtomSpec>(atom), g, strict);
    }

    UnitaryMatrix realized = compose(schedule);
    UnitaryMatrix goal = target_matrix(target);
    const double fid = fidelity(realized, goal);
    const double err = max_abs_diff(realized, goal);
    const double total = schedule.total_duration();
    SynthesisResult result{std::move(schedule), std::move(realized), std::move(goal),
                           fid, err, mode, total, std::move(warnings)};
    const ScheduleDiagnostics diag = validate(result.schedule);
    result.warnings.insert(result.warnings.end(), diag.warnings.begin(),
                           diag.warnings.end());
    return result;
}

} // namespace qrabi
