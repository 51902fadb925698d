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
#include "qrabi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qrabi {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kRwaStepNorm = 0.005;

/// out = −i·H·y for column-major state y with `cols` columns.
void derivative(const ComplexMatrix &h, const std::vector<Complex> &y,
                std::size_t cols, std::vector<Complex> &out) {
    const std::size_t n = h.rows();
    for (std::size_t c = 0; c < cols; ++c) {
        const Complex *col = y.data() + c * n;
        for (std::size_t r = 0; r < n; ++r) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) {
                acc += h(r, k) * col[k];
            }
            out[c * n + r] = Complex(acc.imag(), -acc.real());
        }
    }
}

void check_hamiltonian(const ComplexMatrix &h, std::size_t n) {
    if (h.rows() != n || h.cols() != n) {
        throw std::invalid_argument("integrate: hamiltonian shape does not match the state");
    }
}

/// RK4 on a column-major block of `cols` states of length n.
std::vector<Complex> rk4(const HamiltonianProvider &hamiltonian,
                         std::vector<Complex> y, std::size_t n, std::size_t cols,
                         double t_final, long steps) {
    if (steps < 1) {
        throw std::invalid_argument("integrate: steps must be >= 1");
    }
    if (!std::isfinite(t_final) || t_final < 0.0) {
        throw std::invalid_argument("integrate: t_final must be finite and >= 0");
    }
    const double h = t_final / static_cast<double>(steps);
    const std::size_t size = y.size();
    std::vector<Complex> k1(size), k2(size), k3(size), k4(size), tmp(size);
    for (long s = 0; s < steps; ++s) {
        const double t = h * static_cast<double>(s);
        const ComplexMatrix h0 = hamiltonian(t);
        const ComplexMatrix hm = hamiltonian(t + 0.5 * h);
        const ComplexMatrix h1 = hamiltonian(t + h);
        check_hamiltonian(h0, n);
        check_hamiltonian(hm, n);
        check_hamiltonian(h1, n);

        derivative(h0, y, cols, k1);
        for (std::size_t i = 0; i < size; ++i) {
            tmp[i] = y[i] + 0.5 * h * k1[i];
        }
        derivative(hm, tmp, cols, k2);
        for (std::size_t i = 0; i < size; ++i) {
            tmp[i] = y[i] + 0.5 * h * k2[i];
        }
        derivative(hm, tmp, cols, k3);
        for (std::size_t i = 0; i < size; ++i) {
            tmp[i] = y[i] + h * k3[i];
        }
        derivative(h1, tmp, cols, k4);
        for (std::size_t i = 0; i < size; ++i) {
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    return y;
}

double norm(std::span<const Complex> v) {
    double s = 0.0;
    for (Complex z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

void require_normalized(std::span<const Complex> v) {
    if (!(std::abs(norm(v) - 1.0) <= kNormTol)) {
        throw std::invalid_argument("integrate: initial state must have unit norm");
    }
}

ComplexMatrix full_cosine_hamiltonian(const TwoLevelAtom &atom, double g,
                                      double phi, double t) {
    const double coupling = 2.0 * g * std::cos(atom.delta * t + phi);
    return ComplexMatrix{{atom.E0, coupling}, {coupling, atom.E0 + atom.delta}};
}

} // namespace

StateVector integrate(const HamiltonianProvider &hamiltonian,
                      std::span<const Complex> psi0, double t_final, long steps) {
    if (psi0.empty()) {
        throw std::invalid_argument("integrate: empty state");
    }
    require_normalized(psi0);
    return rk4(hamiltonian, StateVector(psi0.begin(), psi0.end()), psi0.size(), 1,
               t_final, steps);
}

ComplexMatrix integrate_columns(const HamiltonianProvider &hamiltonian,
                                const ComplexMatrix &psi0, double t_final,
                                long steps) {
    const std::size_t n = psi0.rows();
    const std::size_t cols = psi0.cols();
    std::vector<Complex> y(n * cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            y[c * n + r] = psi0(r, c);
        }
        require_normalized(std::span<const Complex>(y.data() + c * n, n));
    }
    y = rk4(hamiltonian, std::move(y), n, cols, t_final, steps);
    ComplexMatrix out(n, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            out(r, c) = y[c * n + r];
        }
    }
    return out;
}

IntegrationReport verify_kind(DriveKind kind, const Atom &atom,
                              const DriveParams &params, double t, long steps) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("verify_kind: t must be finite and >= 0");
    }
    // Ψ(0) = D(0)⁻¹·e_j for every j at once: the columns of D(0)†.
    const UnitaryMatrix d0 = frame_transform(kind, atom, params, 0.0);
    const ComplexMatrix psi0 = d0.matrix().adjoint();
    const ComplexMatrix numeric = integrate_columns(
        [&](double s) { return lab_frame_hamiltonian(kind, atom, params, s); }, psi0,
        t, steps);
    const UnitaryMatrix exact = propagator(kind, atom, params, t);

    IntegrationReport report;
    report.kind = kind;
    report.steps = steps;
    report.max_state_error = max_abs_diff(numeric, exact.matrix());
    for (std::size_t c = 0; c < numeric.cols(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < numeric.rows(); ++r) {
            s += std::norm(numeric(r, c));
        }
        report.norm_drift = std::max(report.norm_drift, std::abs(std::sqrt(s) - 1.0));
    }
    return report;
}

double hamiltonian_norm_bound(DriveKind kind, const Atom &atom,
                              const DriveParams &params) {
    // Moduli of H(t) entries do not depend on t.
    const ComplexMatrix h = lab_frame_hamiltonian(kind, atom, params, 0.0);
    double bound = 0.0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < h.cols(); ++c) {
            row += std::abs(h(r, c));
        }
        bound = std::max(bound, row);
    }
    return bound;
}

std::vector<RwaScanPoint> rwa_error_scan(const TwoLevelAtom &atom,
                                         std::span<const double> g_values,
                                         double phi, std::optional<double> t_final) {
    validate_atom(atom);
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("rwa_error_scan: phi must be finite");
    }
    if (t_final && (!std::isfinite(*t_final) || *t_final < 0.0)) {
        throw std::invalid_argument("rwa_error_scan: t_final must be finite and >= 0");
    }
    for (double g : g_values) {
        if (!std::isfinite(g) || g < 0.0) {
            throw std::invalid_argument("rwa_error_scan: g must be finite and >= 0");
        }
    }

    std::vector<RwaScanPoint> points;
    points.reserve(g_values.size());
    for (double g : g_values) {
        RwaScanPoint point;
        point.g = g;
        point.g_over_omega = g / atom.delta;
        if (g == 0.0) {
            points.push_back(point);
            continue;
        }
        const double t = t_final ? *t_final : kPi / (2.0 * g);
        const double h_norm =
            std::max(std::abs(atom.E0), std::abs(atom.E0 + atom.delta)) + 2.0 * g;
        const long steps =
            std::max(1L, static_cast<long>(std::ceil(h_norm * t / kRwaStepNorm)));

        const StateVector start{1.0, 0.0};
        const StateVector full = integrate(
            [&](double s) { return full_cosine_hamiltonian(atom, g, phi, s); }, start,
            t, steps);

        DriveParams params;
        params.g1 = g;
        params.phi1 = phi;
        // Ψ(t) = U(t)·D(0)·Ψ(0) for the RWA drive.
        const ComplexMatrix u =
            analytic_propagator(DriveKind::TwoLevelU, atom, params, t).matrix() *
            frame_transform(DriveKind::TwoLevelU, atom, params, 0.0).matrix();
        const Complex overlap = std::conj(full[0]) * u(0, 0) + std::conj(full[1]) * u(1, 0);
        point.infidelity = std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
        points.push_back(point);
    }
    return points;
}

std::string to_csv(std::span<const RwaScanPoint> points) {
    std::string out = "g,g_over_omega,infidelity\n";
    char buf[96];
    for (const RwaScanPoint &p : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.g, p.g_over_omega,
                      p.infidelity);
        out += buf;
    }
    return out;
}

} // namespace qrabi
