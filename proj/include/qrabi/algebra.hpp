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

#include <vector>

#include "qrabi/matrix.hpp"

namespace qrabi {

/**
 * The primitive n-th root of unity σ = exp(2πi/n).
 *
 * Powers are evaluated from the reduced exponent k mod n so that σᵏ stays
 * accurate for large k.
 */
class PrimitiveRoot {
  public:
    explicit PrimitiveRoot(int n);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] Complex sigma() const noexcept { return sigma_; }
    /// σᵏ for any integer k (negative allowed).
    [[nodiscard]] Complex pow(long long k) const;

  private:
    int n_;
    Complex sigma_;
};

/// Shift (Σ₁) and clock (Σ₃) generators of the generalized Pauli group.
struct SigmaGenerators {
    UnitaryMatrix shift; ///< Σ₁: ones on the subdiagonal and top-right corner
    UnitaryMatrix clock; ///< Σ₃ = diag(1, σ, …, σⁿ⁻¹)
};

SigmaGenerators sigma_generators(int n);

/// Scaled Vandermonde matrix; row j is the powers of σ^(n−j), row 0 all ones.
UnitaryMatrix walsh_hadamard(int n);

/// Permutation fixing index 0 and reversing indices 1…n−1.
UnitaryMatrix exchange_matrix(int n);

struct PauliSet {
    ComplexMatrix sigma1;
    ComplexMatrix sigma2;
    ComplexMatrix sigma3;
    ComplexMatrix sigma_plus;  ///< (σ₁ + iσ₂)/2
    ComplexMatrix sigma_minus; ///< (σ₁ − iσ₂)/2
};

PauliSet pauli_two_level();

/// The four Gell-Mann matrices needed by the SU(3) Euler parametrization.
struct GellMannSubset {
    ComplexMatrix lambda2;
    ComplexMatrix lambda3;
    ComplexMatrix lambda5;
    ComplexMatrix lambda8;
};

GellMannSubset gell_mann_subset();

/// Eigen-decomposition H = V·diag(values)·V† of a hermitian matrix.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi rotations; intended for n ≤ 4.
HermitianEigen eigh(const ComplexMatrix &h);

/// exp(−i·s·H) for hermitian H (‖H − H†‖_max ≤ 1e-10).
UnitaryMatrix expm_hermitian(const ComplexMatrix &h, double s);

/// |tr(U†V)|/n; equals 1 iff U and V agree up to a global phase.
double fidelity(const UnitaryMatrix &u, const UnitaryMatrix &v);

/// Ordered factors whose left-to-right products give Σ₁(n) and Σ₃(n).
struct SigmaFactorization {
    std::vector<UnitaryMatrix> shift_factors;
    std::vector<UnitaryMatrix> clock_factors;
};

/// Supported for n ∈ {3, 4}: transposition factors for Σ₁ and
/// single-phase diagonal factors for Σ₃.
SigmaFactorization sigma_factorization(int n);

/// Left-to-right product of a non-empty factor list.
UnitaryMatrix product(const std::vector<UnitaryMatrix> &factors);

} // namespace qrabi
