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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrabi/matrix.hpp"
#include "qrabi/propagators.hpp"
#include "qrabi/schedule.hpp"

namespace qrabi {

enum class GateKind {
    Sigma1_2lvl, ///< Pauli X on a two-level atom
    SigmaTheta,  ///< diag(1, e^{iθ}) on a two-level atom
    W2,          ///< two-level Walsh–Hadamard
    Perm01,      ///< swap of levels 0 and 1
    Perm02,      ///< swap of levels 0 and 2
    Sigma1_3,    ///< Σ₁(3) = Perm02·Perm01
    K3,          ///< exchange matrix = Perm02·Perm01·Perm02
    Sigma3_3,    ///< Σ₃(3) = diag(1, σ, σ²)
    DiagPhases,  ///< diag(1, e^{iα}, e^{iβ})
    MatrixI,     ///< diag(1, i, i)
    MatrixF,     ///< diag(1, e^{iπ/4}·exp(−iπ/4·σ₁))
    W3,          ///< three-level Walsh–Hadamard
    Custom,      ///< arbitrary unitary; not compilable
};

/// A catalog gate with its parameters, or a custom unitary.
struct GateTarget {
    GateKind kind = GateKind::Sigma1_2lvl;
    double theta = 0.0; ///< SigmaTheta only
    double alpha = 0.0; ///< DiagPhases only
    double beta = 0.0;  ///< DiagPhases only
    std::optional<UnitaryMatrix> custom;

    static GateTarget of(GateKind kind);
    static GateTarget sigma_theta(double theta);
    static GateTarget diag_phases(double alpha, double beta);
    static GateTarget custom_unitary(UnitaryMatrix u);
};

std::string_view to_string(GateKind kind) noexcept;

/// 2 for the two-level gates, 3 for the rest; custom gates use their size.
std::size_t gate_dimension(const GateTarget &target);

/// The matrix a target stands for.
UnitaryMatrix target_matrix(const GateTarget &target);

enum class SynthesisMode { Strict, Projective };

std::string_view to_string(SynthesisMode mode) noexcept;

struct SynthesisResult {
    PulseSchedule schedule;
    UnitaryMatrix realized; ///< compose(schedule)
    UnitaryMatrix target;
    double fidelity = 0.0;
    double max_error = 0.0; ///< max entrywise |realized − target|
    SynthesisMode mode = SynthesisMode::Strict;
    double elapsed_total = 0.0; ///< total schedule duration
    std::vector<std::string> warnings;
};

/// φ in [0, 2π) with e^{−i(accumulated + φ)} = target; |target| = 1.
double solve_phase(double accumulated, Complex target);

/// (target_angle + 2π·branch)/rate for rate > 0.
double solve_time(double rate, double target_angle, unsigned branch = 0);

/**
 * Compile a catalog gate into a pulse schedule.
 *
 * Durations take the smallest positive solution of each time constraint.
 * Strict mode appends Free0 padding so that E0·T is a multiple of 2π and
 * the realized matrix equals the target entrywise; Projective mode omits
 * the padding and matches up to a global phase. Strict with E0 ≤ 0 falls
 * back to Projective and records a warning. Custom targets are rejected
 * with std::invalid_argument.
 */
SynthesisResult synthesize(const GateTarget &target, const Atom &atom, double g,
                           SynthesisMode mode);

/// Generalized Euler angles for SU(3), in radians.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double phi = 0.0;

    friend bool operator==(const EulerAngles &, const EulerAngles &) = default;
};

/// e^{iαλ₃}e^{iβλ₂}e^{iγλ₃}e^{iθλ₅}e^{iaλ₃}e^{ibλ₂}e^{icλ₃}e^{iφλ₈}.
UnitaryMatrix su3_euler(const EulerAngles &angles);

/// diag(1, e^{iε}, e^{iδ})·U for U in SU(3) (|det U − 1| ≤ 1e-9).
UnitaryMatrix u3_extend(const UnitaryMatrix &u, double epsilon, double delta);

struct FitResult {
    EulerAngles angles;
    double residual = 1.0; ///< 1 − fidelity(su3_euler(angles), U)
    bool converged = false; ///< residual ≤ 1e-6
};

/**
 * Numerical inverse of su3_euler: 16 seeded Nelder–Mead starts minimizing
 * 1 − fidelity. The best start wins (ties: lexicographically smallest
 * angles). Rejects U with |det U − 1| > 1e-9.
 */
FitResult fit_su3_angles(const UnitaryMatrix &u, std::uint64_t seed);

} // namespace qrabi
