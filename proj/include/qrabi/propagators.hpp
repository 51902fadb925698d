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
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "qrabi/matrix.hpp"

namespace qrabi {

/**
 * Three-level atom with energies E0 < E1 < E2 (ħ = 1).
 *
 * Drive frequencies are always derived from the levels, so every drive is
 * resonant: ω₁ = Δ₁, ω₂ = Δ₂ − Δ₁, ω₃ = Δ₂.
 */
struct AtomSpec {
    double E0 = 0.0;
    double E1 = 0.0;
    double E2 = 0.0;

    [[nodiscard]] double delta1() const noexcept { return E1 - E0; }
    [[nodiscard]] double delta2() const noexcept { return E2 - E0; }
    [[nodiscard]] double omega1() const noexcept { return delta1(); }
    [[nodiscard]] double omega2() const noexcept { return delta2() - delta1(); }
    [[nodiscard]] double omega3() const noexcept { return delta2(); }

    friend bool operator==(const AtomSpec &, const AtomSpec &) = default;
};

/// Two-level atom with ground energy E0 and splitting delta > 0.
struct TwoLevelAtom {
    double E0 = 0.0;
    double delta = 0.0;

    friend bool operator==(const TwoLevelAtom &, const TwoLevelAtom &) = default;
};

using Atom = std::variant<AtomSpec, TwoLevelAtom>;

/// Throws std::invalid_argument unless E2 > E1 > E0 and all are finite.
void validate_atom(const AtomSpec &atom);
/// Throws std::invalid_argument unless delta > 0 and both are finite.
void validate_atom(const TwoLevelAtom &atom);
void validate_atom(const Atom &atom);

/// True when the level spacing violates Δ₁ > Δ₂ − Δ₁ (advisory only).
bool spacing_advisory(const AtomSpec &atom) noexcept;

std::size_t atom_dimension(const Atom &atom) noexcept;

enum class DriveKind {
    Free0,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeV,
    TypeVI,
    TypeVII,
    TwoLevelU,
    TwoLevelV,
};

inline constexpr std::array<DriveKind, 10> kAllDriveKinds{
    DriveKind::Free0,   DriveKind::TypeI,    DriveKind::TypeII,
    DriveKind::TypeIII, DriveKind::TypeIV,   DriveKind::TypeV,
    DriveKind::TypeVI,  DriveKind::TypeVII,  DriveKind::TwoLevelU,
    DriveKind::TwoLevelV,
};

std::string_view to_string(DriveKind kind) noexcept;
std::optional<DriveKind> parse_drive_kind(std::string_view name) noexcept;

/// 2 for the two-level kinds, 3 otherwise.
std::size_t kind_dimension(DriveKind kind) noexcept;

/**
 * Couplings (rad/time, ≥ 0) and drive phases (radians).
 *
 * Each kind reads only the couplings it drives: I g1; II g2; III g3;
 * IV g1,g2; V g1,g3; VI g3,g2; VII all three; TwoLevelU g1 with phi1.
 */
struct DriveParams {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;

    friend bool operator==(const DriveParams &, const DriveParams &) = default;
};

/// Throws std::invalid_argument on non-finite values or negative couplings.
void validate_params(const DriveParams &params);

/// True when φ₃ ≡ φ₁ + φ₂ (mod 2π) within tol.
bool vii_phase_condition(const DriveParams &params, double tol = 1e-12) noexcept;

/// True when g1 = g2 = g3 (relative tolerance) and the phase condition holds.
bool vii_closed_form_applies(const DriveParams &params) noexcept;

/**
 * Diagonal D(t) with Φ = D(t)·Ψ, turning the lab-frame equation into one
 * with the constant generator returned by rotating_generator().
 * Free0 and TwoLevelV use the identity frame.
 */
UnitaryMatrix frame_transform(DriveKind kind, const Atom &atom,
                              const DriveParams &params, double t);

/// Constant generator H̃ of the rotating frame, i·dΦ/dt = H̃·Φ.
ComplexMatrix rotating_generator(DriveKind kind, const Atom &atom,
                                 const DriveParams &params);

/// Lab-frame H(t), hermitian, with e^{±i(φ+ωt)} off-diagonal drives.
ComplexMatrix lab_frame_hamiltonian(DriveKind kind, const Atom &atom,
                                    const DriveParams &params, double t);

/**
 * Closed-form propagator U_k(t, 0) = D(t)⁻¹·exp(−itH̃).
 *
 * Maps Φ(0) to Ψ(t); right-multiply by frame_transform(kind, …, 0) for the
 * Ψ(0) → Ψ(t) propagator. TypeIV–VI with unequal couplings use the
 * two-coupling forms. TypeVII requires g1 = g2 = g3 and φ₃ = φ₁ + φ₂;
 * otherwise std::domain_error directs the caller to vii_exponential().
 */
UnitaryMatrix analytic_propagator(DriveKind kind, const Atom &atom,
                                  const DriveParams &params, double t);

/**
 * Two-coupling closed forms for TypeIV (g1,g2), TypeV (g1,g3) and
 * TypeVI (g3,g2), rotating at √(ga² + gb²). When both couplings vanish the
 * Free0 propagator is returned.
 */
UnitaryMatrix analytic_propagator_two_couplings(DriveKind kind,
                                                const AtomSpec &atom,
                                                const DriveParams &params,
                                                double t);

/// TypeVII by numerical exponentiation of H̃ (any couplings and phases).
UnitaryMatrix vii_exponential(const AtomSpec &atom, const DriveParams &params,
                              double t);

/// analytic_propagator, except TypeVII outside its closed form is routed to
/// vii_exponential().
UnitaryMatrix propagator(DriveKind kind, const Atom &atom,
                         const DriveParams &params, double t);

} // namespace qrabi
