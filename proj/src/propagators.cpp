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
#include "qrabi/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qrabi/algebra.hpp"

namespace qrabi {

namespace {

constexpr double kCouplingRelTol = 1e-12;

bool is_two_level(DriveKind kind) {
    return kind == DriveKind::TwoLevelU || kind == DriveKind::TwoLevelV;
}

void require_time(double t, const char *what) {
    if (!std::isfinite(t) || t < 0.0) {
        std::ostringstream os;
        os << what << ": time must be finite and non-negative (got " << t
           << ")";
        throw std::invalid_argument(os.str());
    }
}

const AtomSpec &three_level(DriveKind kind, const Atom &atom) {
    const auto *a = std::get_if<AtomSpec>(&atom);
    if (a == nullptr) {
        throw std::invalid_argument(std::string(to_string(kind)) +
                                    " requires a three-level atom");
    }
    validate_atom(*a);
    return *a;
}

const TwoLevelAtom &two_level(DriveKind kind, const Atom &atom) {
    const auto *a = std::get_if<TwoLevelAtom>(&atom);
    if (a == nullptr) {
        throw std::invalid_argument(std::string(to_string(kind)) +
                                    " requires a two-level atom");
    }
    validate_atom(*a);
    return *a;
}

void check_inputs(DriveKind kind, const Atom &atom, const DriveParams &params) {
    if (is_two_level(kind)) {
        two_level(kind, atom);
    } else {
        three_level(kind, atom);
    }
    validate_params(params);
}

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= kCouplingRelTol * std::max(std::abs(a), std::abs(b));
}

double ground_energy(const Atom &atom) {
    return std::visit([](const auto &a) { return a.E0; }, atom);
}

/// Phases θ_k(t) of D(t) = e^{itE0}·diag(e^{iθ_k}); θ_0 = 0 always.
std::vector<double> frame_angles(DriveKind kind, const Atom &atom,
                                 const DriveParams &p, double t) {
    if (kind == DriveKind::TwoLevelU) {
        const auto &a = std::get<TwoLevelAtom>(atom);
        return {0.0, a.delta * t + p.phi1};
    }
    const auto &a = std::get<AtomSpec>(atom);
    switch (kind) {
    case DriveKind::TypeI:
        return {0.0, p.phi1 + a.omega1() * t, a.delta2() * t};
    case DriveKind::TypeII:
        return {0.0, a.delta1() * t, p.phi2 + a.delta2() * t};
    case DriveKind::TypeIII:
        return {0.0, a.delta1() * t, p.phi3 + a.omega3() * t};
    case DriveKind::TypeIV:
    case DriveKind::TypeVII:
        return {0.0, p.phi1 + a.omega1() * t,
                p.phi1 + p.phi2 + (a.omega1() + a.omega2()) * t};
    case DriveKind::TypeV:
        return {0.0, p.phi1 + a.omega1() * t, p.phi3 + a.omega3() * t};
    case DriveKind::TypeVI:
        return {0.0, p.phi3 - p.phi2 + (a.omega3() - a.omega2()) * t,
                p.phi3 + a.omega3() * t};
    default:
        throw std::logic_error("frame_angles: kind has an identity frame");
    }
}

/// D(t)⁻¹ as a diagonal matrix.
ComplexMatrix inverse_frame(DriveKind kind, const Atom &atom,
                            const DriveParams &p, double t) {
    const std::vector<double> theta = frame_angles(kind, atom, p, t);
    const Complex e0 = phase(-t * ground_energy(atom));
    std::vector<Complex> d(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        d[k] = e0 * phase(-theta[k]);
    }
    return ComplexMatrix::diagonal(d);
}

/// exp(−it·g·X) on the (i, j) pair of an n-level system.
ComplexMatrix rabi_block(std::size_t n, std::size_t i, std::size_t j,
                         double angle) {
    ComplexMatrix m = ComplexMatrix::identity(n);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    m(i, i) = c;
    m(j, j) = c;
    m(i, j) = -kI * s;
    m(j, i) = -kI * s;
    return m;
}

ComplexMatrix interior_iv_equal(double g, double t) {
    const double c = std::cos(std::sqrt(2.0) * g * t);
    const double s = std::sin(std::sqrt(2.0) * g * t);
    const Complex off = -kI * s / std::sqrt(2.0);
    return ComplexMatrix{{(1.0 + c) / 2.0, off, (-1.0 + c) / 2.0},
                         {off, c, off},
                         {(-1.0 + c) / 2.0, off, (1.0 + c) / 2.0}};
}

ComplexMatrix interior_v_equal(double g, double t) {
    const double c = std::cos(std::sqrt(2.0) * g * t);
    const double s = std::sin(std::sqrt(2.0) * g * t);
    const Complex off = -kI * s / std::sqrt(2.0);
    return ComplexMatrix{{c, off, off},
                         {off, (1.0 + c) / 2.0, (-1.0 + c) / 2.0},
                         {off, (-1.0 + c) / 2.0, (1.0 + c) / 2.0}};
}

ComplexMatrix interior_vi_equal(double g, double t) {
    const double c = std::cos(std::sqrt(2.0) * g * t);
    const double s = std::sin(std::sqrt(2.0) * g * t);
    const Complex off = -kI * s / std::sqrt(2.0);
    return ComplexMatrix{{(1.0 + c) / 2.0, (-1.0 + c) / 2.0, off},
                         {(-1.0 + c) / 2.0, (1.0 + c) / 2.0, off},
                         {off, off, c}};
}

ComplexMatrix interior_vii_equal(double g, double t) {
    const Complex e = phase(-3.0 * g * t);
    const Complex pre = phase(g * t);
    const Complex d = pre * (2.0 + e) / 3.0;
    const Complex o = pre * (-1.0 + e) / 3.0;
    return ComplexMatrix{{d, o, o}, {o, d, o}, {o, o, d}};
}

/// The three two-coupling forms share one shape: a "bright" pair of levels
/// (indices a, b) each coupled with strength ga, gb to the hub level h.
ComplexMatrix interior_two_coupling(std::size_t hub, std::size_t a,
                                    std::size_t b, double ga, double gb,
                                    double t) {
    const double omega = std::hypot(ga, gb);
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    const double w2 = omega * omega;
    ComplexMatrix m(3, 3);
    m(hub, hub) = c;
    m(hub, a) = -kI * ga * s / omega;
    m(a, hub) = m(hub, a);
    m(hub, b) = -kI * gb * s / omega;
    m(b, hub) = m(hub, b);
    m(a, a) = (ga * ga * c + gb * gb) / w2;
    m(b, b) = (gb * gb * c + ga * ga) / w2;
    m(a, b) = ga * gb * (c - 1.0) / w2;
    m(b, a) = m(a, b);
    return m;
}

UnitaryMatrix free_propagator(const Atom &atom, double t) {
    if (const auto *two = std::get_if<TwoLevelAtom>(&atom)) {
        return UnitaryMatrix(ComplexMatrix::diagonal(
            {phase(-t * two->E0), phase(-t * two->E0) * phase(-t * two->delta)}));
    }
    const auto &a = std::get<AtomSpec>(atom);
    const Complex e0 = phase(-t * a.E0);
    return UnitaryMatrix(ComplexMatrix::diagonal(
        {e0, e0 * phase(-t * a.delta1()), e0 * phase(-t * a.delta2())}));
}

} // namespace

void validate_atom(const AtomSpec &atom) {
    if (!std::isfinite(atom.E0) || !std::isfinite(atom.E1) ||
        !std::isfinite(atom.E2)) {
        throw std::invalid_argument("AtomSpec: energies must be finite");
    }
    if (!(atom.E0 < atom.E1 && atom.E1 < atom.E2)) {
        std::ostringstream os;
        os << "AtomSpec: require E2 > E1 > E0 (got E0=" << atom.E0
           << ", E1=" << atom.E1 << ", E2=" << atom.E2 << ")";
        throw std::invalid_argument(os.str());
    }
}

void validate_atom(const TwoLevelAtom &atom) {
    if (!std::isfinite(atom.E0) || !std::isfinite(atom.delta)) {
        throw std::invalid_argument("TwoLevelAtom: values must be finite");
    }
    if (!(atom.delta > 0.0)) {
        throw std::invalid_argument("TwoLevelAtom: require delta > 0");
    }
}

void validate_atom(const Atom &atom) {
    std::visit([](const auto &a) { validate_atom(a); }, atom);
}

bool spacing_advisory(const AtomSpec &atom) noexcept {
    return !(atom.delta1() > atom.delta2() - atom.delta1());
}

std::size_t atom_dimension(const Atom &atom) noexcept {
    return std::holds_alternative<TwoLevelAtom>(atom) ? 2 : 3;
}

std::string_view to_string(DriveKind kind) noexcept {
    switch (kind) {
    case DriveKind::Free0:
        return "Free0";
    case DriveKind::TypeI:
        return "TypeI";
    case DriveKind::TypeII:
        return "TypeII";
    case DriveKind::TypeIII:
        return "TypeIII";
    case DriveKind::TypeIV:
        return "TypeIV";
    case DriveKind::TypeV:
        return "TypeV";
    case DriveKind::TypeVI:
        return "TypeVI";
    case DriveKind::TypeVII:
        return "TypeVII";
    case DriveKind::TwoLevelU:
        return "TwoLevelU";
    case DriveKind::TwoLevelV:
        return "TwoLevelV";
    }
    return "?";
}

std::optional<DriveKind> parse_drive_kind(std::string_view name) noexcept {
    for (DriveKind k : kAllDriveKinds) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t kind_dimension(DriveKind kind) noexcept {
    return is_two_level(kind) ? 2 : 3;
}

void validate_params(const DriveParams &p) {
    const double values[] = {p.g1, p.g2, p.g3, p.phi1, p.phi2, p.phi3};
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("DriveParams: values must be finite");
        }
    }
    if (p.g1 < 0.0 || p.g2 < 0.0 || p.g3 < 0.0) {
        throw std::invalid_argument("DriveParams: couplings must be >= 0");
    }
}

bool vii_phase_condition(const DriveParams &p, double tol) noexcept {
    const double r = std::remainder(p.phi3 - p.phi1 - p.phi2, kTwoPi);
    return std::abs(r) <= tol;
}

bool vii_closed_form_applies(const DriveParams &p) noexcept {
    return nearly_equal(p.g1, p.g2) && nearly_equal(p.g2, p.g3) &&
           vii_phase_condition(p);
}

UnitaryMatrix frame_transform(DriveKind kind, const Atom &atom,
                              const DriveParams &params, double t) {
    check_inputs(kind, atom, params);
    if (kind == DriveKind::Free0 || kind == DriveKind::TwoLevelV) {
        return UnitaryMatrix::identity(kind_dimension(kind));
    }
    return UnitaryMatrix(inverse_frame(kind, atom, params, t).adjoint());
}

ComplexMatrix rotating_generator(DriveKind kind, const Atom &atom,
                                 const DriveParams &p) {
    check_inputs(kind, atom, p);
    if (kind == DriveKind::Free0) {
        const auto &a = std::get<AtomSpec>(atom);
        return ComplexMatrix::diagonal({a.E0, a.E1, a.E2});
    }
    if (kind == DriveKind::TwoLevelV) {
        const auto &a = std::get<TwoLevelAtom>(atom);
        return ComplexMatrix::diagonal({a.E0, a.E0 + a.delta});
    }
    if (kind == DriveKind::TwoLevelU) {
        return ComplexMatrix{{0.0, p.g1}, {p.g1, 0.0}};
    }
    ComplexMatrix h(3, 3);
    auto set = [&h](std::size_t i, std::size_t j, Complex v) {
        h(i, j) = v;
        h(j, i) = std::conj(v);
    };
    switch (kind) {
    case DriveKind::TypeI:
        set(0, 1, p.g1);
        break;
    case DriveKind::TypeII:
        set(1, 2, p.g2);
        break;
    case DriveKind::TypeIII:
        set(0, 2, p.g3);
        break;
    case DriveKind::TypeIV:
        set(0, 1, p.g1);
        set(1, 2, p.g2);
        break;
    case DriveKind::TypeV:
        set(0, 1, p.g1);
        set(0, 2, p.g3);
        break;
    case DriveKind::TypeVI:
        set(0, 2, p.g3);
        set(1, 2, p.g2);
        break;
    case DriveKind::TypeVII:
        set(0, 1, p.g1);
        set(1, 2, p.g2);
        set(0, 2, p.g3 * phase(p.phi3 - p.phi1 - p.phi2));
        break;
    default:
        break;
    }
    return h;
}

ComplexMatrix lab_frame_hamiltonian(DriveKind kind, const Atom &atom,
                                    const DriveParams &p, double t) {
    check_inputs(kind, atom, p);
    if (!std::isfinite(t)) {
        throw std::invalid_argument("lab_frame_hamiltonian: time must be finite");
    }
    if (is_two_level(kind)) {
        const auto &a = std::get<TwoLevelAtom>(atom);
        ComplexMatrix h = ComplexMatrix::diagonal({a.E0, a.E0 + a.delta});
        if (kind == DriveKind::TwoLevelU) {
            h(0, 1) = p.g1 * phase(a.delta * t + p.phi1);
            h(1, 0) = std::conj(h(0, 1));
        }
        return h;
    }
    const auto &a = std::get<AtomSpec>(atom);
    ComplexMatrix h = ComplexMatrix::diagonal({a.E0, a.E1, a.E2});
    auto drive = [&h](std::size_t i, std::size_t j, double g, double angle) {
        h(i, j) = g * phase(angle);
        h(j, i) = std::conj(h(i, j));
    };
    const bool d01 = kind == DriveKind::TypeI || kind == DriveKind::TypeIV ||
                     kind == DriveKind::TypeV || kind == DriveKind::TypeVII;
    const bool d12 = kind == DriveKind::TypeII || kind == DriveKind::TypeIV ||
                     kind == DriveKind::TypeVI || kind == DriveKind::TypeVII;
    const bool d02 = kind == DriveKind::TypeIII || kind == DriveKind::TypeV ||
                     kind == DriveKind::TypeVI || kind == DriveKind::TypeVII;
    if (d01) {
        drive(0, 1, p.g1, p.phi1 + a.omega1() * t);
    }
    if (d12) {
        drive(1, 2, p.g2, p.phi2 + a.omega2() * t);
    }
    if (d02) {
        drive(0, 2, p.g3, p.phi3 + a.omega3() * t);
    }
    return h;
}

UnitaryMatrix analytic_propagator(DriveKind kind, const Atom &atom,
                                  const DriveParams &p, double t) {
    check_inputs(kind, atom, p);
    require_time(t, "analytic_propagator");

    ComplexMatrix interior(1, 1);
    switch (kind) {
    case DriveKind::Free0:
    case DriveKind::TwoLevelV:
        return free_propagator(atom, t);
    case DriveKind::TwoLevelU:
        interior = rabi_block(2, 0, 1, p.g1 * t);
        break;
    case DriveKind::TypeI:
        interior = rabi_block(3, 0, 1, p.g1 * t);
        break;
    case DriveKind::TypeII:
        interior = rabi_block(3, 1, 2, p.g2 * t);
        break;
    case DriveKind::TypeIII:
        interior = rabi_block(3, 0, 2, p.g3 * t);
        break;
    case DriveKind::TypeIV:
        if (!nearly_equal(p.g1, p.g2)) {
            return analytic_propagator_two_couplings(kind, std::get<AtomSpec>(atom),
                                                     p, t);
        }
        interior = interior_iv_equal(p.g1, t);
        break;
    case DriveKind::TypeV:
        if (!nearly_equal(p.g1, p.g3)) {
            return analytic_propagator_two_couplings(kind, std::get<AtomSpec>(atom),
                                                     p, t);
        }
        interior = interior_v_equal(p.g1, t);
        break;
    case DriveKind::TypeVI:
        if (!nearly_equal(p.g3, p.g2)) {
            return analytic_propagator_two_couplings(kind, std::get<AtomSpec>(atom),
                                                     p, t);
        }
        interior = interior_vi_equal(p.g3, t);
        break;
    case DriveKind::TypeVII:
        if (!vii_closed_form_applies(p)) {
            throw std::domain_error(
                "analytic_propagator: TypeVII closed form needs g1 = g2 = g3 "
                "and phi3 = phi1 + phi2; use vii_exponential");
        }
        interior = interior_vii_equal(p.g1, t);
        break;
    }
    return UnitaryMatrix(inverse_frame(kind, atom, p, t) * interior);
}

UnitaryMatrix analytic_propagator_two_couplings(DriveKind kind,
                                                const AtomSpec &atom,
                                                const DriveParams &p,
                                                double t) {
    validate_atom(atom);
    validate_params(p);
    require_time(t, "analytic_propagator_two_couplings");

    ComplexMatrix interior(1, 1);
    switch (kind) {
    case DriveKind::TypeIV:
        if (p.g1 == 0.0 && p.g2 == 0.0) {
            return free_propagator(atom, t);
        }
        interior = interior_two_coupling(1, 0, 2, p.g1, p.g2, t);
        break;
    case DriveKind::TypeV:
        if (p.g1 == 0.0 && p.g3 == 0.0) {
            return free_propagator(atom, t);
        }
        interior = interior_two_coupling(0, 1, 2, p.g1, p.g3, t);
        break;
    case DriveKind::TypeVI:
        if (p.g3 == 0.0 && p.g2 == 0.0) {
            return free_propagator(atom, t);
        }
        interior = interior_two_coupling(2, 0, 1, p.g3, p.g2, t);
        break;
    default:
        throw std::invalid_argument(
            "analytic_propagator_two_couplings: kind must be TypeIV, TypeV "
            "or TypeVI");
    }
    return UnitaryMatrix(inverse_frame(kind, atom, p, t) * interior);
}

UnitaryMatrix vii_exponential(const AtomSpec &atom, const DriveParams &p,
                              double t) {
    const Atom a = atom;
    check_inputs(DriveKind::TypeVII, a, p);
    require_time(t, "vii_exponential");
    const ComplexMatrix h = rotating_generator(DriveKind::TypeVII, a, p);
    const UnitaryMatrix interior = expm_hermitian(h, t);
    return UnitaryMatrix(inverse_frame(DriveKind::TypeVII, a, p, t) *
                         interior.matrix());
}

UnitaryMatrix propagator(DriveKind kind, const Atom &atom,
                         const DriveParams &params, double t) {
    if (kind == DriveKind::TypeVII && !vii_closed_form_applies(params)) {
        return vii_exponential(three_level(kind, atom), params, t);
    }
    return analytic_propagator(kind, atom, params, t);
}

} // namespace qrabi
