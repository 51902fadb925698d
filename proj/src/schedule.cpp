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
#include "qrabi/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace qrabi {

namespace {

using nlohmann::json;

std::string segment_label(std::size_t i) {
    return "segments[" + std::to_string(i) + "]";
}

void require_keys(const json &obj, const std::string &where,
                  std::initializer_list<const char *> keys) {
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    std::set<std::string> allowed;
    for (const char *k : keys) {
        allowed.insert(k);
        if (!obj.contains(k)) {
            throw ParseError(where + "." + k + ": missing field");
        }
    }
    for (const auto &item : obj.items()) {
        if (allowed.count(item.key()) == 0) {
            throw ParseError(where + "." + item.key() + ": unknown field");
        }
    }
}

double read_number(const json &obj, const std::string &where, const char *key) {
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw ParseError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        // nlohmann reports "parse error at line L, column C: ..."
        std::string what = e.what();
        const auto pos = what.find("parse error");
        throw ParseError(pos == std::string::npos ? what : what.substr(pos));
    }
}

void append_number(std::string &out, double x) { out += format_number(x); }

} // namespace

std::string_view to_string(CompositionMode mode) noexcept {
    return mode == CompositionMode::Lab ? "Lab" : "ClosedForm";
}

std::optional<CompositionMode> parse_composition_mode(std::string_view name) noexcept {
    if (name == "ClosedForm") {
        return CompositionMode::ClosedForm;
    }
    if (name == "Lab") {
        return CompositionMode::Lab;
    }
    return std::nullopt;
}

double PulseSchedule::total_duration() const noexcept {
    double total = 0.0;
    for (const Segment &s : segments) {
        total += s.duration;
    }
    return total;
}

ScheduleDiagnostics validate(const PulseSchedule &schedule) {
    ScheduleDiagnostics diag;
    const std::size_t dim = atom_dimension(schedule.atom);
    SegmentReport freq;
    bool atom_ok = true;
    try {
        validate_atom(schedule.atom);
    } catch (const std::invalid_argument &e) {
        diag.errors.emplace_back(std::string("atom: ") + e.what());
        atom_ok = false;
    }
    if (const auto *a = std::get_if<AtomSpec>(&schedule.atom)) {
        freq.omega1 = a->omega1();
        freq.omega2 = a->omega2();
        freq.omega3 = a->omega3();
        if (atom_ok && spacing_advisory(*a)) {
            diag.warnings.emplace_back(
                "atom: advisory spacing condition E1 - E0 > E2 - E1 not met");
        }
        const double scale = std::max(std::abs(freq.omega1), std::abs(freq.omega3));
        if (std::abs(freq.omega3 - freq.omega1 - freq.omega2) > 1e-12 * scale) {
            diag.warnings.emplace_back(
                "atom: drive frequencies violate omega3 = omega1 + omega2");
        }
    } else {
        freq.omega1 = std::get<TwoLevelAtom>(schedule.atom).delta;
    }

    double clock = 0.0;
    for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
        const Segment &s = schedule.segments[i];
        const std::string where = segment_label(i);
        if (kind_dimension(s.kind) != dim) {
            diag.errors.push_back(where + ".kind: " + std::string(to_string(s.kind)) +
                                  " needs a " +
                                  std::to_string(kind_dimension(s.kind)) +
                                  "-level atom, schedule atom has " +
                                  std::to_string(dim) + " levels");
        }
        if (!std::isfinite(s.duration) || s.duration < 0.0) {
            diag.errors.push_back(where +
                                  ".duration: must be finite and non-negative");
        }
        try {
            validate_params(s.params);
        } catch (const std::invalid_argument &e) {
            diag.errors.push_back(where + ": " + e.what());
        }
        if (s.kind == DriveKind::TypeVII && !vii_closed_form_applies(s.params)) {
            diag.warnings.push_back(where +
                                    ": closed form unavailable, numeric path");
        }
        SegmentReport r = freq;
        r.start = clock;
        if (std::isfinite(s.duration)) {
            clock += s.duration;
        }
        r.end = clock;
        diag.segments.push_back(r);
    }
    return diag;
}

UnitaryMatrix segment_propagator(const Atom &atom, const Segment &segment,
                                 CompositionMode mode) {
    UnitaryMatrix u = propagator(segment.kind, atom, segment.params, segment.duration);
    if (mode == CompositionMode::Lab) {
        return u * frame_transform(segment.kind, atom, segment.params, 0.0);
    }
    return u;
}

UnitaryMatrix compose(const PulseSchedule &schedule) {
    const ScheduleDiagnostics diag = validate(schedule);
    if (!diag.ok()) {
        throw std::invalid_argument("compose: " + diag.errors.front());
    }
    UnitaryMatrix acc = UnitaryMatrix::identity(atom_dimension(schedule.atom));
    for (const Segment &s : schedule.segments) {
        acc = segment_propagator(schedule.atom, s, schedule.mode) * acc;
    }
    return acc;
}

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("format_number: non-finite value");
    }
    if (x == 0.0) {
        return std::signbit(x) ? "-0.0" : "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string serialize(const PulseSchedule &schedule) {
    const ScheduleDiagnostics diag = validate(schedule);
    if (!diag.ok()) {
        throw std::invalid_argument("serialize: " + diag.errors.front());
    }
    std::string out = "{\n  \"atom\": {";
    if (const auto *a = std::get_if<AtomSpec>(&schedule.atom)) {
        out += "\"E0\": ";
        append_number(out, a->E0);
        out += ", \"E1\": ";
        append_number(out, a->E1);
        out += ", \"E2\": ";
        append_number(out, a->E2);
    } else {
        const auto &b = std::get<TwoLevelAtom>(schedule.atom);
        out += "\"E0\": ";
        append_number(out, b.E0);
        out += ", \"Delta\": ";
        append_number(out, b.delta);
    }
    out += "},\n  \"mode\": \"";
    out += to_string(schedule.mode);
    out += "\",\n  \"segments\": [";
    for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
        const Segment &s = schedule.segments[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"kind\": \"";
        out += to_string(s.kind);
        out += "\", \"duration\": ";
        append_number(out, s.duration);
        const std::pair<const char *, double> fields[] = {
            {"phi1", s.params.phi1}, {"phi2", s.params.phi2},
            {"phi3", s.params.phi3}, {"g1", s.params.g1},
            {"g2", s.params.g2},     {"g3", s.params.g3},
        };
        for (const auto &[name, value] : fields) {
            out += ", \"";
            out += name;
            out += "\": ";
            append_number(out, value);
        }
        out += "}";
    }
    out += schedule.segments.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

PulseSchedule deserialize(std::string_view text) {
    const json doc = parse_document(text);
    require_keys(doc, "schedule", {"atom", "mode", "segments"});

    PulseSchedule schedule;
    const json &atom = doc.at("atom");
    if (atom.is_object() && atom.contains("Delta")) {
        require_keys(atom, "atom", {"E0", "Delta"});
        schedule.atom = TwoLevelAtom{read_number(atom, "atom", "E0"),
                                     read_number(atom, "atom", "Delta")};
    } else {
        require_keys(atom, "atom", {"E0", "E1", "E2"});
        schedule.atom = AtomSpec{read_number(atom, "atom", "E0"),
                                 read_number(atom, "atom", "E1"),
                                 read_number(atom, "atom", "E2")};
    }
    try {
        validate_atom(schedule.atom);
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("atom: ") + e.what());
    }

    const json &mode = doc.at("mode");
    if (!mode.is_string()) {
        throw ParseError("mode: expected a string");
    }
    const auto parsed_mode = parse_composition_mode(mode.get<std::string>());
    if (!parsed_mode) {
        throw ParseError("mode: unknown composition mode \"" +
                         mode.get<std::string>() + "\"");
    }
    schedule.mode = *parsed_mode;

    const json &segments = doc.at("segments");
    if (!segments.is_array()) {
        throw ParseError("segments: expected an array");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const json &seg = segments[i];
        const std::string where = segment_label(i);
        require_keys(seg, where,
                     {"kind", "duration", "phi1", "phi2", "phi3", "g1", "g2", "g3"});
        const json &kind = seg.at("kind");
        if (!kind.is_string()) {
            throw ParseError(where + ".kind: expected a string");
        }
        const auto parsed_kind = parse_drive_kind(kind.get<std::string>());
        if (!parsed_kind) {
            throw ParseError(where + ".kind: unknown drive kind \"" +
                             kind.get<std::string>() + "\"");
        }
        Segment s;
        s.kind = *parsed_kind;
        s.duration = read_number(seg, where, "duration");
        if (s.duration < 0.0) {
            throw ParseError(where + ".duration: must be non-negative");
        }
        s.params.phi1 = read_number(seg, where, "phi1");
        s.params.phi2 = read_number(seg, where, "phi2");
        s.params.phi3 = read_number(seg, where, "phi3");
        s.params.g1 = read_number(seg, where, "g1");
        s.params.g2 = read_number(seg, where, "g2");
        s.params.g3 = read_number(seg, where, "g3");
        schedule.segments.push_back(s);
    }
    return schedule;
}

std::string matrix_to_json(const ComplexMatrix &m) {
    std::string out = "{\n  \"rows\": " + std::to_string(m.rows()) +
                      ",\n  \"cols\": " + std::to_string(m.cols()) +
                      ",\n  \"entries\": [";
    const auto entries = m.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += i == 0 ? "\n    [" : ",\n    [";
        append_number(out, entries[i].real());
        out += ", ";
        append_number(out, entries[i].imag());
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

ComplexMatrix matrix_from_json(std::string_view text) {
    const json doc = parse_document(text);
    require_keys(doc, "matrix", {"rows", "cols", "entries"});
    const json &rows = doc.at("rows");
    const json &cols = doc.at("cols");
    if (!rows.is_number_unsigned() || !cols.is_number_unsigned() ||
        rows.get<std::size_t>() == 0 || cols.get<std::size_t>() == 0) {
        throw ParseError("matrix.rows/cols: expected positive integers");
    }
    const std::size_t r = rows.get<std::size_t>();
    const std::size_t c = cols.get<std::size_t>();
    const json &entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != r * c) {
        throw ParseError("matrix.entries: expected an array of rows*cols pairs");
    }
    std::vector<Complex> data;
    data.reserve(r * c);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json &pair = entries[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw ParseError("matrix.entries[" + std::to_string(i) +
                             "]: expected [re, im]");
        }
        data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(r, c, std::move(data));
}

} // namespace qrabi
