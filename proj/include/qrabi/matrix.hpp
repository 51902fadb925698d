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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qrabi {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Tolerance for unitarity of freshly constructed gates and propagators.
inline constexpr double kUnitaryTol = 1e-12;
/// Tolerance for identities over compound products.
inline constexpr double kCompoundTol = 1e-11;

/**
 * Dense complex matrix stored in row-major order.
 *
 * Every entry is finite; constructors reject NaN/Inf so that downstream
 * metrics never have to re-check.
 */
class ComplexMatrix {
  public:
    /// Zero matrix of the given shape. Both dimensions must be positive.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);
    /// Row-by-row literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a − b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// ‖M†M − 1‖_max for a square matrix.
double unitarity_error(const ComplexMatrix &m);

/// ‖M − M†‖_max for a square matrix.
double hermiticity_error(const ComplexMatrix &m);

/// Determinant by LU decomposition with partial pivoting.
Complex determinant(const ComplexMatrix &m);

/// Integer power of a square matrix by repeated squaring; p ≥ 0.
ComplexMatrix matrix_power(const ComplexMatrix &m, unsigned p);

/**
 * A square ComplexMatrix that was checked to be unitary on construction.
 *
 * The product of two UnitaryMatrix values is re-checked against the looser
 * compound tolerance.
 */
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix m, double tol = kUnitaryTol);

    static UnitaryMatrix identity(std::size_t n);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return m_.rows(); }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return m_(r, c);
    }

    [[nodiscard]] UnitaryMatrix adjoint() const;

    friend UnitaryMatrix operator*(const UnitaryMatrix &a,
                                   const UnitaryMatrix &b);
    friend bool operator==(const UnitaryMatrix &,
                           const UnitaryMatrix &) = default;

    operator const ComplexMatrix &() const noexcept { return m_; }

  private:
    struct Unchecked {};
    UnitaryMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// exp(iθ) as a complex number.
inline Complex phase(double theta) { return std::polar(1.0, theta); }

} // namespace qrabi
