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
#include "qrabi/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrabi {

namespace {

void require_order(int n, const char *what) {
    if (n < 2) {
        std::ostringstream os;
        os << what << ": dimension must be at least 2 (got " << n << ")";
        throw std::invalid_argument(os.str());
    }
}

std::size_t dim(int n) { return static_cast<std::size_t>(n); }

/// Transposition of basis indices i and j in dimension n.
UnitaryMatrix transposition(int n, std::size_t i, std::size_t j) {
    ComplexMatrix m = ComplexMatrix::identity(dim(n));
    m(i, i) = 0.0;
    m(j, j) = 0.0;
    m(i, j) = 1.0;
    m(j, i) = 1.0;
    return UnitaryMatrix(std::move(m));
}

/// Identity with a single phase z at index k.
UnitaryMatrix single_phase(int n, std::size_t k, Complex z) {
    ComplexMatrix m = ComplexMatrix::identity(dim(n));
    m(k, k) = z;
    return UnitaryMatrix(std::move(m));
}

} // namespace

PrimitiveRoot::PrimitiveRoot(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("PrimitiveRoot: order must be positive");
    }
    sigma_ = phase(kTwoPi / n);
}

Complex PrimitiveRoot::pow(long long k) const {
    long long r = k % n_;
    if (r < 0) {
        r += n_;
    }
    if (r == 0) {
        return {1.0, 0.0};
    }
    return phase(kTwoPi * static_cast<double>(r) / n_);
}

SigmaGenerators sigma_generators(int n) {
    require_order(n, "sigma_generators");
    const PrimitiveRoot root(n);
    ComplexMatrix shift(dim(n), dim(n));
    std::vector<Complex> clock(dim(n));
    for (std::size_t i = 0; i < dim(n); ++i) {
        shift((i + 1) % dim(n), i) = 1.0;
        clock[i] = root.pow(static_cast<long long>(i));
    }
    return {UnitaryMatrix(std::move(shift)),
            UnitaryMatrix(ComplexMatrix::diagonal(clock))};
}

UnitaryMatrix walsh_hadamard(int n) {
    require_order(n, "walsh_hadamard");
    const PrimitiveRoot root(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix w(dim(n), dim(n));
    for (int j = 0; j < n; ++j) {
        // Row j holds the powers of σ^(n−j); row 0 is σ⁰ = 1.
        const long long base = (n - j) % n;
        for (int k = 0; k < n; ++k) {
            w(dim(j), dim(k)) = scale * root.pow(base * k);
        }
    }
    return UnitaryMatrix(std::move(w));
}

UnitaryMatrix exchange_matrix(int n) {
    require_order(n, "exchange_matrix");
    ComplexMatrix k(dim(n), dim(n));
    k(0, 0) = 1.0;
    for (std::size_t i = 1; i < dim(n); ++i) {
        k(i, dim(n) - i) = 1.0;
    }
    return UnitaryMatrix(std::move(k));
}

PauliSet pauli_two_level() {
    return {
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
        ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}},
        ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}},
    };
}

GellMannSubset gell_mann_subset() {
    const double r3 = 1.0 / std::sqrt(3.0);
    return {
        ComplexMatrix{{0.0, -kI, 0.0}, {kI, 0.0, 0.0}, {0.0, 0.0, 0.0}},
        ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}},
        ComplexMatrix{{0.0, 0.0, -kI}, {0.0, 0.0, 0.0}, {kI, 0.0, 0.0}},
        ComplexMatrix{{r3, 0.0, 0.0}, {0.0, r3, 0.0}, {0.0, 0.0, -2.0 * r3}},
    };
}

HermitianEigen eigh(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw std::invalid_argument("eigh: matrix is not square");
    }
    if (hermiticity_error(h) > 1e-10) {
        throw std::invalid_argument("eigh: matrix is not hermitian");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (const Complex &z : a.entries()) {
        scale += std::norm(z);
    }
    const double threshold = scale * 1e-34;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off <= threshold) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) {
                    continue;
                }
                const Complex u = apq / b; // e^{iθ}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G = diag(1, e^{-iθ}) on (p,q) followed by a real rotation.
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * std::conj(u);
                const Complex gqq = c * std::conj(u);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    HermitianEigen out{std::vector<double>(n), std::move(v)};
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(i, i).real();
    }
    return out;
}

UnitaryMatrix expm_hermitian(const ComplexMatrix &h, double s) {
    const HermitianEigen eig = eigh(h);
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex sum{};
            for (std::size_t k = 0; k < n; ++k) {
                sum += eig.vectors(r, k) * phase(-s * eig.values[k]) *
                       std::conj(eig.vectors(c, k));
            }
            out(r, c) = sum;
        }
    }
    return UnitaryMatrix(std::move(out));
}

double fidelity(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    if (u.dimension() != v.dimension()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    const ComplexMatrix &a = u.matrix();
    const ComplexMatrix &b = v.matrix();
    Complex tr{};
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            tr += std::conj(a(r, c)) * b(r, c);
        }
    }
    const double f = std::abs(tr) / static_cast<double>(u.dimension());
    return f > 1.0 ? 1.0 : f;
}

SigmaFactorization sigma_factorization(int n) {
    if (n != 3 && n != 4) {
        std::ostringstream os;
        os << "sigma_factorization: only n = 3 or 4 is supported (got " << n
           << ")";
        throw std::invalid_argument(os.str());
    }
    const PrimitiveRoot root(n);
    SigmaFactorization out;
    // Σ₁ = P(0,n−1)·…·P(0,2)·P(0,1)
    for (std::size_t j = dim(n) - 1; j >= 1; --j) {
        out.shift_factors.push_back(transposition(n, 0, j));
    }
    // Σ₃ = diag(…,σⁿ⁻¹)·…·diag(1,σ,1,…)
    for (std::size_t k = dim(n) - 1; k >= 1; --k) {
        out.clock_factors.push_back(
            single_phase(n, k, root.pow(static_cast<long long>(k))));
    }
    return out;
}

UnitaryMatrix product(const std::vector<UnitaryMatrix> &factors) {
    if (factors.empty()) {
        throw std::invalid_argument("product: empty factor list");
    }
    UnitaryMatrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        acc = acc * factors[i];
    }
    return acc;
}

} // namespace qrabi
