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
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qrabi/matrix.hpp"

using namespace qrabi;

TEST_CASE("ComplexMatrix construction rejects bad shapes and entries") {
    CHECK_THROWS_AS(ComplexMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(nan, 0.0)}),
                    std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ComplexMatrix::diagonal({1.0, Complex(0.0, inf)}),
                    std::invalid_argument);
}

TEST_CASE("row-major layout, adjoint and trace") {
    const ComplexMatrix m{{1.0, Complex(2.0, 1.0)}, {3.0, 4.0}};
    CHECK(m.entries()[1] == Complex(2.0, 1.0));
    CHECK(m.adjoint()(1, 0) == Complex(2.0, -1.0));
    CHECK(m.trace() == Complex(5.0, 0.0));
    CHECK_THROWS(static_cast<void>(ComplexMatrix(2, 3).trace()));
}

TEST_CASE("products and powers") {
    const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(x * x == ComplexMatrix::identity(2));
    CHECK(matrix_power(x, 0) == ComplexMatrix::identity(2));
    CHECK(matrix_power(x, 5) == x);
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3),
                    std::invalid_argument);
}

TEST_CASE("determinant by LU") {
    const ComplexMatrix m{{2.0, 1.0, 0.0}, {1.0, 3.0, 1.0}, {0.0, 1.0, 4.0}};
    // 2(12−1) − 1(4−0) = 18
    CHECK(std::abs(determinant(m) - Complex(18.0, 0.0)) < 1e-12);
    const ComplexMatrix p{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(std::abs(determinant(p) + 1.0) < 1e-15);
    CHECK(determinant(ComplexMatrix(2, 2)) == Complex{});
}

TEST_CASE("UnitaryMatrix checks unitarity on construction") {
    CHECK_NOTHROW(UnitaryMatrix(ComplexMatrix{{0.0, kI}, {kI, 0.0}}));
    CHECK_THROWS_AS(UnitaryMatrix(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(UnitaryMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
    const double r = 1.0 / std::sqrt(2.0);
    const UnitaryMatrix h(ComplexMatrix{{r, r}, {r, -r}});
    CHECK(max_abs_diff(h * h, ComplexMatrix::identity(2)) < 1e-15);
    CHECK(max_abs_diff(h.adjoint(), h) == 0.0);
}
