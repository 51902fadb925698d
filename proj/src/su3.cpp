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
#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gsl/gsl_multimin.h>

#include "qrabi/synthesis.hpp"

namespace qrabi {

namespace {

using Angles = std::array<double, 8>;

constexpr double kPhiPeriod = 2.0 * 1.7320508075688772 * kPi; // 2√3·π
constexpr int kStarts = 16;
constexpr double kSizeTol = 1e-10;
constexpr int kMaxIterations = 20000;
constexpr int kMaxRounds = 6;

Angles to_array(const EulerAngles &e) {
    return {e.alpha, e.beta, e.gamma, e.theta, e.a, e.b, e.c, e.phi};
}

EulerAngles from_array(const Angles &x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
}

/// Row-major 3x3 product of the eight Euler factors.
using Mat3 = std::array<Complex, 9>;

/// m ← m·diag(d0, d1, d2)
void scale_columns(Mat3 &m, Complex d0, Complex d1, Complex d2) {
    for (std::size_t r = 0; r < 3; ++r) {
        m[3 * r] *= d0;
        m[3 * r + 1] *= d1;
        m[3 * r + 2] *= d2;
    }
}

/// m ← m·R where R is the real rotation [[c, s], [−s, c]] on columns (i, j).
void rotate_columns(Mat3 &m, std::size_t i, std::size_t j, double x) {
    const double c = std::cos(x);
    const double s = std::sin(x);
    for (std::size_t r = 0; r < 3; ++r) {
        const Complex a = m[3 * r + i];
        const Complex b = m[3 * r + j];
        m[3 * r + i] = c * a - s * b;
        m[3 * r + j] = s * a + c * b;
    }
}

void times_lambda3(Mat3 &m, double x) { scale_columns(m, phase(x), phase(-x), 1.0); }

Mat3 euler_product(const Angles &x) {
    Mat3 m{};
    m[0] = phase(x[0]);
    m[4] = phase(-x[0]);
    m[8] = 1.0;
    rotate_columns(m, 0, 1, x[1]); // e^{iβλ₂}
    times_lambda3(m, x[2]);
    rotate_columns(m, 0, 2, x[3]); // e^{iθλ₅}
    times_lambda3(m, x[4]);
    rotate_columns(m, 0, 1, x[5]);
    times_lambda3(m, x[6]);
    const double r = x[7] / std::sqrt(3.0);
    scale_columns(m, phase(r), phase(r), phase(-2.0 * r)); // e^{iφλ₈}
    return m;
}

void require_special(const UnitaryMatrix &u, const char *what) {
    if (u.dimension() != 3) {
        throw std::invalid_argument(std::string(what) + ": expected a 3x3 unitary");
    }
    const Complex det = determinant(u.matrix());
    if (!(std::abs(det - 1.0) <= 1e-9)) {
        throw std::invalid_argument(std::string(what) +
                                    ": matrix is not in SU(3) (det != 1)");
    }
}

struct Objective {
    Mat3 target_conj;

    explicit Objective(const ComplexMatrix &target) {
        for (std::size_t i = 0; i < 9; ++i) {
            target_conj[i] = std::conj(target(i / 3, i % 3));
        }
    }

    double operator()(const Angles &x) const {
        const Mat3 m = euler_product(x);
        Complex tr{};
        for (std::size_t i = 0; i < 9; ++i) {
            tr += target_conj[i] * m[i];
        }
        return 1.0 - std::abs(tr) / 3.0;
    }
};

double gsl_objective(const gsl_vector *v, void *params) {
    const auto *f = static_cast<const Objective *>(params);
    Angles x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = gsl_vector_get(v, i);
    }
    return (*f)(x);
}

struct VectorDeleter {
    void operator()(gsl_vector *v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer *m) const { gsl_multimin_fminimizer_free(m); }
};

/// One Nelder–Mead run from x with initial simplex edge `step`.
Angles simplex_run(const Objective &f, const Angles &x, double step) {
    gsl_multimin_function fn{&gsl_objective, x.size(),
                             const_cast<Objective *>(&f)};
    std::unique_ptr<gsl_vector, VectorDeleter> start(gsl_vector_alloc(x.size()));
    std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        gsl_vector_set(start.get(), i, x[i]);
    }
    gsl_vector_set_all(steps.get(), step);
    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, x.size()));
    gsl_multimin_fminimizer_set(m.get(), &fn, start.get(), steps.get());
    for (int it = 0; it < kMaxIterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), kSizeTol) ==
            GSL_SUCCESS) {
            break;
        }
    }
    Angles out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = gsl_vector_get(m->x, i);
    }
    return out;
}

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) {
        r += period;
    }
    return r >= period ? 0.0 : r;
}

/// Reduce each angle modulo the period of its factor.
Angles canonical(const Angles &x) {
    Angles out;
    for (std::size_t i = 0; i < 7; ++i) {
        out[i] = wrap(x[i], kTwoPi);
    }
    out[7] = wrap(x[7], kPhiPeriod);
    return out;
}

} // namespace

UnitaryMatrix su3_euler(const EulerAngles &angles) {
    const Mat3 m = euler_product(to_array(angles));
    return UnitaryMatrix(ComplexMatrix(3, 3, std::vector<Complex>(m.begin(), m.end())));
}

UnitaryMatrix u3_extend(const UnitaryMatrix &u, double epsilon, double delta) {
    require_special(u, "u3_extend");
    return UnitaryMatrix(
        ComplexMatrix::diagonal({1.0, phase(epsilon), phase(delta)}) * u.matrix());
}

FitResult fit_su3_angles(const UnitaryMatrix &u, std::uint64_t seed) {
    require_special(u, "fit_su3_angles");
    gsl_set_error_handler_off();
    const Objective f(u.matrix());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> turn(0.0, kTwoPi);
    std::uniform_real_distribution<double> half(0.0, kPi);
    std::uniform_real_distribution<double> eight(0.0, kPhiPeriod / 2.0);

    Angles best{};
    double best_residual = 2.0;
    for (int s = 0; s < kStarts; ++s) {
        Angles x{turn(rng), half(rng), turn(rng), half(rng),
                 turn(rng), half(rng), turn(rng), eight(rng)};
        double fx = f(x);
        double step = 0.5;
        for (int round = 0; round < kMaxRounds; ++round) {
            const Angles y = simplex_run(f, x, step);
            const double fy = f(y);
            const bool improved = fy < fx - 1e-16;
            if (fy <= fx) {
                x = y;
                fx = fy;
            }
            if (!improved || fx <= 1e-15) {
                break;
            }
            step *= 0.25;
        }
        x = canonical(x);
        fx = f(x);
        if (fx < best_residual || (fx == best_residual && x < best)) {
            best = x;
            best_residual = fx;
        }
    }
    FitResult result;
    result.angles = from_array(best);
    result.residual = std::max(0.0, best_residual);
    result.converged = result.residual <= 1e-6;
    return result;
}

} // namespace qrabi
