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
#include <string>

#include "qrabi/algebra.hpp"
#include "qrabi/schedule.hpp"
#include "support.hpp"

using namespace qrabi;

namespace {

PulseSchedule random_schedule(std::mt19937_64 &rng, std::size_t count) {
    PulseSchedule s;
    const double e0 = testing::uniform(rng, 0.5, 5.0);
    const double d1 = testing::uniform(rng, 3.0, 10.0);
    s.atom = AtomSpec{e0, e0 + d1, e0 + d1 + testing::uniform(rng, 1.0, 2.5)};
    const DriveKind kinds[] = {DriveKind::Free0,  DriveKind::TypeI,  DriveKind::TypeII,
                               DriveKind::TypeIII, DriveKind::TypeIV, DriveKind::TypeV,
                               DriveKind::TypeVI, DriveKind::TypeVII};
    for (std::size_t i = 0; i < count; ++i) {
        Segment seg;
        seg.kind = kinds[static_cast<std::size_t>(testing::uniform(rng, 0.0, 7.999))];
        seg.duration = testing::uniform(rng, 0.0, 20.0);
        seg.params.g1 = testing::uniform(rng, 0.01, 0.3);
        seg.params.g2 = testing::uniform(rng, 0.01, 0.3);
        seg.params.g3 = testing::uniform(rng, 0.01, 0.3);
        seg.params.phi1 = testing::uniform(rng, 0.0, kTwoPi);
        seg.params.phi2 = testing::uniform(rng, 0.0, kTwoPi);
        seg.params.phi3 = testing::uniform(rng, 0.0, kTwoPi);
        s.segments.push_back(seg);
    }
    return s;
}

const char *kMinimal = R"({
  "atom": {"E0": 1, "E1": 6, "E2": 10},
  "mode": "ClosedForm",
  "segments": [
    {"kind": "TypeI", "duration": 2.5, "phi1": 0.1, "phi2": 0, "phi3": 0,
     "g1": 0.05, "g2": 0, "g3": 0}
  ]
})";

} // namespace

TEST_CASE("compose basics") {
    PulseSchedule empty;
    empty.atom = AtomSpec{1.0, 6.0, 10.0};
    CHECK(compose(empty).matrix() == ComplexMatrix::identity(3));
    empty.atom = TwoLevelAtom{0.0, 1.0};
    CHECK(compose(empty).matrix() == ComplexMatrix::identity(2));

    PulseSchedule single;
    single.atom = AtomSpec{1.0, 6.0, 10.0};
    single.segments.push_back({DriveKind::Free0, 0.8, {}});
    CHECK(max_abs_diff(compose(single),
                       analytic_propagator(DriveKind::Free0, single.atom, {}, 0.8)) ==
          0.0);
}

TEST_CASE("compose puts the last segment leftmost") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        PulseSchedule all = random_schedule(rng, 6);
        all.mode = trial % 2 == 0 ? CompositionMode::ClosedForm : CompositionMode::Lab;
        PulseSchedule head = all;
        PulseSchedule tail = all;
        head.segments.resize(3);
        tail.segments.erase(tail.segments.begin(), tail.segments.begin() + 3);
        CHECK(max_abs_diff(compose(all), compose(tail) * compose(head)) <= 1e-11);

        UnitaryMatrix manual = UnitaryMatrix::identity(3);
        for (const Segment &s : all.segments) {
            manual = segment_propagator(all.atom, s, all.mode) * manual;
        }
        CHECK(max_abs_diff(compose(all), manual) == 0.0);
        CHECK(unitarity_error(compose(all)) <= 1e-11);
    }
}

TEST_CASE("Lab mode appends the initial frame factor") {
    std::mt19937_64 rng(103);
    PulseSchedule s = random_schedule(rng, 1);
    s.segments[0].kind = DriveKind::TypeV;
    PulseSchedule lab = s;
    lab.mode = CompositionMode::Lab;
    const ComplexMatrix d0 =
        frame_transform(DriveKind::TypeV, s.atom, s.segments[0].params, 0.0);
    CHECK(max_abs_diff(compose(lab), compose(s) * d0) == 0.0);

    PulseSchedule free = s;
    free.segments.assign(4, Segment{DriveKind::Free0, 1.3, s.segments[0].params});
    PulseSchedule free_lab = free;
    free_lab.mode = CompositionMode::Lab;
    CHECK(max_abs_diff(compose(free), compose(free_lab)) == 0.0);
}

TEST_CASE("validate") {
    PulseSchedule s;
    s.atom = AtomSpec{1.0, 6.0, 10.0};
    DriveParams p;
    p.g1 = p.g2 = p.g3 = 0.1;
    p.phi1 = 0.3;
    p.phi2 = 0.4;
    p.phi3 = 0.7;
    s.segments.push_back({DriveKind::TypeI, 2.0, p});
    s.segments.push_back({DriveKind::TypeVII, 3.0, p});
    ScheduleDiagnostics d = validate(s);
    CHECK(d.ok());
    CHECK(d.warnings.empty());
    REQUIRE(d.segments.size() == 2);
    CHECK(d.segments[1].start == 2.0);
    CHECK(d.segments[1].end == 5.0);
    CHECK(d.segments[0].omega1 == 5.0);
    CHECK(d.segments[0].omega2 == 4.0);
    CHECK(d.segments[0].omega3 == 9.0);

    s.segments[1].params.phi3 = 1.0;
    d = validate(s);
    CHECK(d.ok());
    REQUIRE(d.warnings.size() == 1);
    CHECK(d.warnings[0].find("closed form unavailable, numeric path") !=
          std::string::npos);
    CHECK_NOTHROW(compose(s));

    s.atom = AtomSpec{0.0, 1.0, 5.0};
    s.segments.pop_back();
    d = validate(s);
    CHECK(d.ok());
    REQUIRE(d.warnings.size() == 1);
    CHECK(d.warnings[0].find("advisory") != std::string::npos);

    s.segments.push_back({DriveKind::TwoLevelU, 1.0, p});
    s.segments.push_back({DriveKind::Free0, -1.0, p});
    d = validate(s);
    CHECK(d.errors.size() == 2);
    CHECK(d.errors[0].find("segments[1].kind") != std::string::npos);
    CHECK(d.errors[1].find("segments[2].duration") != std::string::npos);
    CHECK_THROWS_AS(compose(s), std::invalid_argument);
    CHECK_THROWS_AS(serialize(s), std::invalid_argument);
}

TEST_CASE("serialization round-trip is exact") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        PulseSchedule s = random_schedule(rng, static_cast<std::size_t>(trial % 7));
        s.mode = trial % 2 == 0 ? CompositionMode::ClosedForm : CompositionMode::Lab;
        const std::string text = serialize(s);
        const PulseSchedule back = deserialize(text);
        CHECK(back == s);
        CHECK(serialize(back) == text);
    }
    PulseSchedule two;
    two.atom = TwoLevelAtom{-0.0, 1.0 / 3.0};
    two.segments.push_back({DriveKind::TwoLevelU, 1e-300, {0.1, 0, 0, kPi, 0, 0}});
    const PulseSchedule back = deserialize(serialize(two));
    CHECK(back == two);
    CHECK(std::signbit(std::get<TwoLevelAtom>(back.atom).E0));
}

TEST_CASE("deserialize rejects bad documents with positional messages") {
    CHECK_NOTHROW(deserialize(kMinimal));
    auto message = [](const std::string &text) {
        try {
            deserialize(text);
        } catch (const ParseError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    auto edit = [](std::string from, const std::string &to) {
        std::string doc = kMinimal;
        doc.replace(doc.find(from), from.size(), to);
        return doc;
    };
    CHECK(message(edit("\"TypeI\"", "\"TypeVIII\"")).find("segments[0].kind") !=
          std::string::npos);
    CHECK(message(edit("2.5", "-1")).find("segments[0].duration") != std::string::npos);
    CHECK(message(edit("\"g3\": 0", "\"g3\": 0, \"g4\": 1")).find("segments[0].g4") !=
          std::string::npos);
    CHECK(message(edit("\"g3\": 0", "\"g3\": \"x\"")).find("segments[0].g3") !=
          std::string::npos);
    CHECK(message(edit(", \"g3\": 0", "")).find("segments[0].g3: missing") !=
          std::string::npos);
    CHECK(message(edit("\"ClosedForm\"", "\"Rotating\"")).find("mode") !=
          std::string::npos);
    CHECK(message(edit("\"E1\": 6", "\"E1\": 12")).find("atom") != std::string::npos);
    const std::string syntax = message(edit("2.5", "2.5.1"));
    CHECK(syntax.find("line 5") != std::string::npos);
    CHECK(syntax.find("column") != std::string::npos);
}

TEST_CASE("matrix documents") {
    const UnitaryMatrix w = walsh_hadamard(3);
    const std::string text = matrix_to_json(w);
    CHECK(matrix_from_json(text) == w.matrix());
    CHECK(text.find("\"rows\": 3") != std::string::npos);
    CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})"),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "entries": [[1, 0]], "x": 1})"),
                    ParseError);
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(3.0) == "3");
}
