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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrabi/matrix.hpp"
#include "qrabi/propagators.hpp"

namespace qrabi {

/// Time-indexed hermitian H(t).
using HamiltonianProvider = std::function<ComplexMatrix(double)>;

using StateVector = std::vector<Complex>;

/**
 * Classical fixed-step RK4 for i·dψ/dt = H(t)·ψ with h = t_final/steps.
 *
 * The state is never renormalized. Throws std::invalid_argument when
 * steps < 1, t_final is negative or non-finite, or |‖psi0‖ − 1| > 1e-10.
 */
StateVector integrate(const HamiltonianProvider &hamiltonian,
                      std::span<const Complex> psi0, double t_final,
                      long steps);

/// integrate() applied to every column of psi0 with shared H evaluations.
ComplexMatrix integrate_columns(const HamiltonianProvider &hamiltonian,
                                const ComplexMatrix &psi0, double t_final,
                                long steps);

struct IntegrationReport {
    double max_state_error = 0.0; ///< max entrywise |ψ_rk4 − ψ_analytic|
    double norm_drift = 0.0;      ///< max |‖ψ_rk4(t)‖ − 1| over basis states
    long steps = 0;
    DriveKind kind = DriveKind::Free0;
};

/**
 * RK4 of the lab-frame H(t) from Ψ(0) = D(0)⁻¹·e_j for each basis vector
 * e_j, compared against propagator(kind, …, t)·e_j.
 */
IntegrationReport verify_kind(DriveKind kind, const Atom &atom,
                              const DriveParams &params, double t, long steps);

/// Upper bound on max_t ‖H(t)‖ for the lab-frame drive (row-sum norm).
double hamiltonian_norm_bound(DriveKind kind, const Atom &atom,
                              const DriveParams &params);

struct RwaScanPoint {
    double g = 0.0;
    double g_over_omega = 0.0;
    double infidelity = 0.0; ///< 1 − |⟨ψ_full|ψ_RWA⟩|², clamped to [0, 1]
};

/**
 * Full cosine drive diag(E0, E0 + Δ) + 2g·cos(Δt + φ)·σ₁ against its RWA
 * limit (TwoLevelU at coupling g), both started from (1, 0).
 *
 * Without t_final each point runs a π/2-pulse, t = π/(2g). Steps are chosen
 * so that h·‖H‖ ≤ 0.005. g = 0 yields exactly 0. Negative or non-finite g
 * throws std::invalid_argument.
 */
std::vector<RwaScanPoint> rwa_error_scan(const TwoLevelAtom &atom,
                                         std::span<const double> g_values,
                                         double phi,
                                         std::optional<double> t_final = {});

/// CSV with header g,g_over_omega,infidelity and 17 significant digits.
std::string to_csv(std::span<const RwaScanPoint> points);

} // namespace qrabi
