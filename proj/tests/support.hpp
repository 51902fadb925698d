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
// Test-only helpers: independent oracles and random draws.
#pragma once

#include <cmath>
#include <random>

#include "qrabi/matrix.hpp"

namespace qrabi::testing {

/// exp(−isH) by truncated Taylor series; only valid for small ‖sH‖.
inline ComplexMatrix expm_series(const ComplexMatrix &h, double s,
                                 int terms = 30) {
    const std::size_t n = h.rows();
    ComplexMatrix a = h * Complex(0.0, -s);
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k < terms; ++k) {
        term = term * a;
        term *= Complex(1.0 / k, 0.0);
        sum += term;
    }
    return sum;
}

inline ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t n,
                                      double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = Complex(u(rng), u(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace qrabi::testing

namespace qrabi::testing {

/// Haar-like random SU(3): Gram–Schmidt on a complex Gaussian matrix, then
/// the determinant phase removed.
inline ComplexMatrix random_su3(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t r = 0; r < 3; ++r) {
            m(r, c) = Complex(n(rng), n(rng));
        }
        for (std::size_t k = 0; k < c; ++k) {
            Complex dot{};
            for (std::size_t r = 0; r < 3; ++r) {
                dot += std::conj(m(r, k)) * m(r, c);
            }
            for (std::size_t r = 0; r < 3; ++r) {
                m(r, c) -= dot * m(r, k);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < 3; ++r) {
            norm += std::norm(m(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < 3; ++r) {
            m(r, c) /= norm;
        }
    }
    const Complex det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                        m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                        m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    m *= std::polar(1.0, -std::arg(det) / 3.0);
    return m;
}

} // namespace qrabi::testing
