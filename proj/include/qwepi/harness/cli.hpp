// Copyright 2026 The qwepi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qwepi/qwalk/operators.hpp"

namespace qwepi::harness {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInvalidConfig = 2,
    kExitIoFailure = 3,
};

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Flat key=value text: one pair per line, '#' starts a comment line,
/// surrounding whitespace is trimmed and later keys override earlier ones.
std::map<std::string, std::string> parse_key_value_text(std::string_view text);

/// Comma-separated complex amplitudes such as "1,0", "0.5+0.5i,-i".
std::vector<qwalk::Complex> parse_complex_list(std::string_view text);
std::string format_complex_list(const std::vector<qwalk::Complex> &values);

} // namespace qwepi::harness
