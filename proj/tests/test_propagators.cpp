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
#include <random>
#include <stdexcept>

#include "qrabi/algebra.hpp"
#include "qrabi/propagators.hpp"
#include "support.hpp"

using namespace qrabi;

namespace {

constexpr DriveKind kThreeLevelKinds[] = {
    DriveKind::Free0,  DriveKind::TypeI, DriveKind::TypeII, DriveKind::TypeIII,
    DriveKind::TypeIV, DriveKind::TypeV, DriveKind::TypeVI, DriveKind::TypeVII,
};

AtomSpec random_atom(std::mt19937_64 &rng) {
    const double e0 = testing::uniform(rng, -2.0, 5.0);
    const double d1 = testing::uniform(rng, 1.0, 10.0);
    const double d2 = d1 + testing::uniform(rng, 0.5, 10.0);
    return {e0, e0 + d1, e0 + d2};
}

DriveParams random_params(std::mt19937_64 &rng, bool equal, bool phase_locked) {
    DriveParams p;
    p.g1 = testing::uniform(rng, 0.01, 2.0);
    p.g2 = equal ? p.g1 : testing::uniform(rng, 0.01, 2.0);
    p.g3 = equal ? p.g1 : testing::uniform(rng, 0.01, 2.0);
    p.phi1 = testing::uniform(rng, 0.0, kTwoPi);
    p.phi2 = testing::uniform(rng, 0.0, kTwoPi);
    p.phi3 = phase_locked ? p.phi1 + p.phi2 : testing::uniform(rng, 0.0, kTwoPi);
    return p;
}

/// D(t)·U(t) removes the frame and leaves the interior rotation.
ComplexMatrix interior_of(DriveKind kind, const Atom &atom, const DriveParams &p,
                          double t) {
    return frame_transform(kind, atom, p, t) *
           analytic_propagator(kind, atom, p, t);
}

ComplexMatrix derivative(DriveKind kind, const Atom &atom, const DriveParams &p,
                         double t, double h) {
    auto d = [&](double x) { return frame_transform(kind, atom, p, x).matrix(); };
    return (d(t - 2 * h) - d(t + 2 * h) + Complex(8.0) * (d(t + h) - d(t - h))) *
           Complex(1.0 / (12.0 * h));
}

} // namespace

TEST_CASE("kind names round-trip") {
    for (DriveKind k : kAllDriveKinds) {
        CHECK(parse_drive_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_drive_kind("TypeVIII").has_value());
    CHECK(kind_dimension(DriveKind::TwoLevelU) == 2);
    CHECK(kind_dimension(DriveKind::TypeVII) == 3);
}

TEST_CASE("atom and parameter validation") {
    CHECK_THROWS_AS(validate_atom(AtomSpec{0.0, 2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_atom(AtomSpec{0.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_atom(TwoLevelAtom{0.0, 0.0}), std::invalid_argument);
    CHECK_NOTHROW(validate_atom(Atom{AtomSpec{1.0, 6.0, 10.0}}));
    CHECK_FALSE(spacing_advisory(AtomSpec{1.0, 6.0, 10.0}));
    CHECK(spacing_advisory(AtomSpec{0.0, 1.0, 5.0}));
    DriveParams bad;
    bad.g2 = -0.1;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
}

TEST_CASE("free evolution") {
    const Atom atom = AtomSpec{0.0, 2.0, 3.0};
    const UnitaryMatrix u = analytic_propagator(DriveKind::Free0, atom, {}, kPi);
    CHECK(max_abs_diff(u, ComplexMatrix::diagonal({1.0, 1.0, -1.0})) <= 1e-14);
    CHECK(frame_transform(DriveKind::Free0, atom, {}, 1.7).matrix() ==
          ComplexMatrix::identity(3));
    CHECK(lab_frame_hamiltonian(DriveKind::Free0, atom, {}, 0.3) ==
          ComplexMatrix::diagonal({0.0, 2.0, 3.0}));

    const Atom two = TwoLevelAtom{0.5, 2.0};
    const UnitaryMatrix v = analytic_propagator(DriveKind::TwoLevelV, two, {}, 1.0);
    CHECK(max_abs_diff(v, ComplexMatrix::diagonal({phase(-0.5), phase(-2.5)})) <=
          1e-15);
}

TEST_CASE("frame and lab Hamiltonian displays") {
    const Atom atom = AtomSpec{1.0, 6.0, 10.0};
    DriveParams p;
    p.g1 = 0.2;
    p.phi1 = 0.7;
    CHECK(max_abs_diff(frame_transform(DriveKind::TypeI, atom, p, 0.0),
                       ComplexMatrix::diagonal({1.0, phase(0.7), 1.0})) <= 1e-15);

    p.phi1 = 0.0;
    const ComplexMatrix h1 = lab_frame_hamiltonian(DriveKind::TypeI, atom, p, 0.0);
    const ComplexMatrix expected =
        ComplexMatrix::identity(3) * Complex(1.0) +
        ComplexMatrix{{0.0, 0.2, 0.0}, {0.2, 5.0, 0.0}, {0.0, 0.0, 9.0}};
    CHECK(max_abs_diff(h1, expected) <= 1e-15);

    p.g2 = 0.3;
    for (double t : {0.0, 0.4, 12.5}) {
        const ComplexMatrix h4 = lab_frame_hamiltonian(DriveKind::TypeIV, atom, p, t);
        CHECK(h4(0, 2) == Complex{});
        CHECK(h4(2, 0) == Complex{});
        CHECK(hermiticity_error(h4) == 0.0);
    }
}

TEST_CASE("rotating generator matches the transformed lab Hamiltonian") {
    // H̃ = D·H·D† + i·(dD/dt)·D†, with dD/dt from a five-point stencil.
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Atom atom = random_atom(rng);
        const DriveParams p = random_params(rng, false, false);
        const double t = testing::uniform(rng, 0.0, 3.0);
        const double h = 1e-4;
        for (DriveKind kind : kThreeLevelKinds) {
            CAPTURE(to_string(kind));
            const ComplexMatrix d = frame_transform(kind, atom, p, t);
            const ComplexMatrix dd = derivative(kind, atom, p, t, h);
            const ComplexMatrix transformed =
                d * lab_frame_hamiltonian(kind, atom, p, t) * d.adjoint() +
                kI * (dd * d.adjoint());
            CHECK(max_abs_diff(transformed, rotating_generator(kind, atom, p)) <=
                  1e-8);
        }
    }
    const Atom two = TwoLevelAtom{0.3, 4.0};
    DriveParams p;
    p.g1 = 0.5;
    p.phi1 = 1.1;
    const double t = 0.37;
    const double h = 1e-4;
    const ComplexMatrix d = frame_transform(DriveKind::TwoLevelU, two, p, t);
    const ComplexMatrix dd = derivative(DriveKind::TwoLevelU, two, p, t, h);
    const ComplexMatrix transformed =
        d * lab_frame_hamiltonian(DriveKind::TwoLevelU, two, p, t) * d.adjoint() +
        kI * (dd * d.adjoint());
    CHECK(max_abs_diff(transformed, ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}}) <= 1e-8);
}

TEST_CASE("closed forms equal frame-inverse times exp of the generator") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Atom atom = random_atom(rng);
        const bool equal = trial % 2 == 0;
        const DriveParams p = random_params(rng, equal, true);
        const double t = testing::uniform(rng, 0.0, 20.0);
        for (DriveKind kind : kThreeLevelKinds) {
            if (kind == DriveKind::Free0) {
                continue;
            }
            CAPTURE(to_string(kind));
            const ComplexMatrix oracle =
                frame_transform(kind, atom, p, t).adjoint() *
                expm_hermitian(rotating_generator(kind, atom, p), t);
            CHECK(max_abs_diff(propagator(kind, atom, p, t), oracle) <= 1e-11);
        }
        const ComplexMatrix free_oracle =
            expm_hermitian(rotating_generator(DriveKind::Free0, atom, p), t);
        CHECK(max_abs_diff(analytic_propagator(DriveKind::Free0, atom, p, t),
                           free_oracle) <= 1e-11);
    }
}

TEST_CASE("two-level propagators") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Atom atom = TwoLevelAtom{testing::uniform(rng, -1.0, 3.0),
                                       testing::uniform(rng, 0.5, 8.0)};
        DriveParams p;
        p.g1 = testing::uniform(rng, 0.01, 1.0);
        p.phi1 = testing::uniform(rng, 0.0, kTwoPi);
        const double t = testing::uniform(rng, 0.0, 30.0);
        const ComplexMatrix oracle =
            frame_transform(DriveKind::TwoLevelU, atom, p, t).adjoint() *
            expm_hermitian(rotating_generator(DriveKind::TwoLevelU, atom, p), t);
        CHECK(max_abs_diff(analytic_propagator(DriveKind::TwoLevelU, atom, p, t),
                           oracle) <= 1e-11);
    }
    // gτ = π/2 interior is −iσ₁
    DriveParams p;
    p.g1 = 0.25;
    const Atom atom = TwoLevelAtom{0.0, 3.0};
    CHECK(max_abs_diff(interior_of(DriveKind::TwoLevelU, atom, p, kPi / 0.5),
                       ComplexMatrix{{0.0, -kI}, {-kI, 0.0}}) <= 1e-14);
    CHECK_THROWS_AS(analytic_propagator(DriveKind::TwoLevelU,
                                        Atom{AtomSpec{0.0, 1.0, 3.0}}, p, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(analytic_propagator(DriveKind::TypeI, atom, p, 1.0),
                    std::invalid_argument);
}

TEST_CASE("unitarity over random draws") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const Atom atom = random_atom(rng);
        const DriveParams p = random_params(rng, trial % 3 == 0, trial % 2 == 0);
        const DriveKind kind = kThreeLevelKinds[trial % 8];
        const double t = testing::uniform(rng, 0.0, 50.0);
        CHECK(unitarity_error(propagator(kind, atom, p, t)) <= 1e-12);
    }
}

TEST_CASE("interior semigroup") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Atom atom = random_atom(rng);
        const DriveParams p = random_params(rng, trial % 2 == 0, true);
        const double s = testing::uniform(rng, 0.0, 5.0);
        const double t = testing::uniform(rng, 0.0, 5.0);
        for (DriveKind kind : kThreeLevelKinds) {
            if (kind == DriveKind::Free0) {
                continue;
            }
            CAPTURE(to_string(kind));
            auto interior = [&](double x) {
                return frame_transform(kind, atom, p, x) * propagator(kind, atom, p, x);
            };
            CHECK(max_abs_diff(interior(s + t), interior(s) * interior(t)) <= 1e-11);
        }
    }
}

TEST_CASE("displayed interiors at special times") {
    const Atom atom = AtomSpec{0.0, 5.0, 9.0};
    DriveParams p;
    p.g1 = p.g3 = 0.1;
    const double ta = std::acos(1.0 / std::sqrt(3.0)) / (std::sqrt(2.0) * 0.1);
    const double r = std::sqrt(3.0);
    const ComplexMatrix expected =
        Complex(1.0 / r) * ComplexMatrix{{1.0, -kI, -kI},
                                         {-kI, (1.0 + r) / 2.0, (1.0 - r) / 2.0},
                                         {-kI, (1.0 - r) / 2.0, (1.0 + r) / 2.0}};
    CHECK(max_abs_diff(interior_of(DriveKind::TypeV, atom, p, ta), expected) <= 1e-14);

    DriveParams q;
    q.g1 = q.g2 = q.g3 = 0.2;
    const double t7 = kTwoPi / (3.0 * 0.2);
    CHECK(max_abs_diff(interior_of(DriveKind::TypeVII, atom, q, t7),
                       phase(kTwoPi / 3.0) * ComplexMatrix::identity(3)) <= 1e-14);
}

TEST_CASE("two-coupling forms") {
    const AtomSpec atom{0.5, 4.0, 7.0};
    DriveParams p;
    p.g1 = 3.0;
    p.g2 = 4.0;
    const double t = kTwoPi / 5.0;
    const ComplexMatrix in4 =
        frame_transform(DriveKind::TypeIV, atom, p, t) *
        analytic_propagator_two_couplings(DriveKind::TypeIV, atom, p, t);
    CHECK(max_abs_diff(in4, ComplexMatrix::identity(3)) <= 1e-14);

    DriveParams q;
    q.g1 = q.g3 = 1.0;
    const double t5 = kPi / std::sqrt(2.0);
    const ComplexMatrix in5 =
        frame_transform(DriveKind::TypeV, atom, q, t5) *
        analytic_propagator_two_couplings(DriveKind::TypeV, atom, q, t5);
    CHECK(max_abs_diff(in5, ComplexMatrix{{-1.0, 0.0, 0.0},
                                          {0.0, 0.0, -1.0},
                                          {0.0, -1.0, 0.0}}) <= 1e-14);
    CHECK(max_abs_diff(in5, expm_hermitian(rotating_generator(DriveKind::TypeV, atom, q),
                                           t5)) <= 1e-14);

    DriveParams zero;
    zero.phi1 = 1.0;
    CHECK(analytic_propagator_two_couplings(DriveKind::TypeVI, atom, zero, 2.0) ==
          analytic_propagator(DriveKind::Free0, atom, {}, 2.0));
    CHECK_THROWS_AS(analytic_propagator_two_couplings(DriveKind::TypeI, atom, p, 1.0),
                    std::invalid_argument);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const AtomSpec a = random_atom(rng);
        const DriveParams e = random_params(rng, true, true);
        const double s = testing::uniform(rng, 0.0, 40.0);
        for (DriveKind kind : {DriveKind::TypeIV, DriveKind::TypeV, DriveKind::TypeVI}) {
            CHECK(max_abs_diff(analytic_propagator_two_couplings(kind, a, e, s),
                               analytic_propagator(kind, a, e, s)) <= 1e-12);
        }
    }
}

TEST_CASE("TypeVII numeric exponential") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const AtomSpec a = random_atom(rng);
        const DriveParams e = random_params(rng, true, true);
        const double s = testing::uniform(rng, 0.0, 40.0);
        CHECK(max_abs_diff(vii_exponential(a, e, s),
                           analytic_propagator(DriveKind::TypeVII, a, e, s)) <= 1e-10);
    }
    const AtomSpec a{0.0, 3.0, 5.0};
    DriveParams zero;
    zero.phi1 = 0.4;
    zero.phi2 = 0.2;
    zero.phi3 = 0.6;
    CHECK(max_abs_diff(vii_exponential(a, zero, 1.3),
                       frame_transform(DriveKind::TypeVII, a, zero, 1.3).adjoint()) <=
          1e-15);

    DriveParams unequal;
    unequal.g1 = 1.0;
    unequal.g2 = 2.0;
    unequal.g3 = 3.0;
    CHECK_THROWS_AS(analytic_propagator(DriveKind::TypeVII, a, unequal, 0.7),
                    std::domain_error);
    CHECK(propagator(DriveKind::TypeVII, a, unequal, 0.7) ==
          vii_exponential(a, unequal, 0.7));
    CHECK_THROWS_AS(vii_exponential(a, unequal, -0.1), std::invalid_argument);

    DriveParams wrapped;
    wrapped.g1 = wrapped.g2 = wrapped.g3 = 0.3;
    wrapped.phi1 = 4.0;
    wrapped.phi2 = 5.0;
    wrapped.phi3 = 9.0 - kTwoPi;
    CHECK(vii_phase_condition(wrapped));
    CHECK(vii_closed_form_applies(wrapped));
}

TEST_CASE("TypeII energy prefactor forms coincide") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const AtomSpec a = random_atom(rng);
        const DriveParams p = random_params(rng, false, false);
        const double t = testing::uniform(rng, 0.0, 50.0);
        const ComplexMatrix rotation =
            frame_transform(DriveKind::TypeII, a, p, t) *
            analytic_propagator(DriveKind::TypeII, a, p, t);
        const Complex tail = phase(-(p.phi2 + a.delta2() * t));
        const ComplexMatrix form_e1 =
            phase(-t * a.E1) *
            ComplexMatrix::diagonal({phase(t * a.delta1()), 1.0,
                                     phase(t * a.delta1()) * tail});
        const ComplexMatrix form_e0 =
            phase(-t * a.E0) *
            ComplexMatrix::diagonal({1.0, phase(-t * a.delta1()), tail});
        CHECK(max_abs_diff(form_e1, form_e0) <= 1e-12);
        CHECK(max_abs_diff(form_e0 * rotation, analytic_propagator(DriveKind::TypeII, a, p, t)) <=
              1e-12);
    }
}

TEST_CASE("time must be non-negative") {
    const Atom atom = AtomSpec{0.0, 2.0, 3.0};
    CHECK_THROWS_AS(analytic_propagator(DriveKind::TypeI, atom, {}, -1.0),
                    std::invalid_argument);
    CHECK_NOTHROW(analytic_propagator(DriveKind::TypeI, atom, {}, 0.0));
}
