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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrabi/matrix.hpp"
#include "qrabi/propagators.hpp"

namespace qrabi {

/**
 * How segment propagators are multiplied together.
 *
 * ClosedForm multiplies the closed forms U_k(t, 0) directly (each maps the
 * rotating-frame state Φ(0) to Ψ(t)). Lab right-multiplies each by its t = 0
 * frame factor so that every factor maps Ψ(0) to Ψ(t).
 */
enum class CompositionMode { ClosedForm, Lab };

std::string_view to_string(CompositionMode mode) noexcept;
std::optional<CompositionMode> parse_composition_mode(std::string_view name) noexcept;

/// One rectangular drive interval. Propagators depend only on the duration.
struct Segment {
    DriveKind kind = DriveKind::Free0;
    double duration = 0.0;
    DriveParams params{};

    friend bool operator==(const Segment &, const Segment &) = default;
};

/// Segments are stored earliest first; compose() puts the last one leftmost.
struct PulseSchedule {
    Atom atom = AtomSpec{};
    std::vector<Segment> segments;
    CompositionMode mode = CompositionMode::ClosedForm;

    [[nodiscard]] double total_duration() const noexcept;

    friend bool operator==(const PulseSchedule &, const PulseSchedule &) = default;
};

struct SegmentReport {
    double omega1 = 0.0; ///< drive frequency on 0↔1 (Δ for two-level atoms)
    double omega2 = 0.0; ///< drive frequency on 1↔2
    double omega3 = 0.0; ///< drive frequency on 0↔2
    double start = 0.0;
    double end = 0.0;
};

/**
 * Result of validate(). Errors make a schedule unusable; warnings flag
 * advisory conditions and TypeVII segments that need the numeric path.
 */
struct ScheduleDiagnostics {
    std::vector<SegmentReport> segments;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;

    [[nodiscard]] bool ok() const noexcept { return errors.empty(); }
};

ScheduleDiagnostics validate(const PulseSchedule &schedule);

/// Propagator of one segment under the given composition mode.
UnitaryMatrix segment_propagator(const Atom &atom, const Segment &segment,
                                 CompositionMode mode);

/// Product U_N ⋯ U_2·U_1; identity for an empty schedule. Throws
/// std::invalid_argument if validate() reports errors.
UnitaryMatrix compose(const PulseSchedule &schedule);

/// Thrown by the JSON readers; the message names the offending field or the
/// line and column of a syntax error.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// JSON text with 17 significant digits; requires a schedule without errors.
std::string serialize(const PulseSchedule &schedule);
PulseSchedule deserialize(std::string_view text);

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
std::string matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(std::string_view text);

/// "%.17g" rendering; parses back to the identical double.
std::string format_number(double x);

} // namespace qrabi
