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

#include <iosfwd>
#include <span>
#include <string>

namespace qrabi::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,      ///< bad flags, unknown names, unreadable or malformed input
    kValidation = 3, ///< schedule/atom validation error or strict-mode fallback
    kThreshold = 4,  ///< a verification result breached its threshold
};

/**
 * Run one command line (without the program name), e.g.
 * {"gen", "--n", "3", "--which", "walsh"}. Documents go to `out`, reports
 * and diagnostics to `err` unless a subcommand says otherwise.
 */
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace qrabi::cli
