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

#include <ostream>
#include <string>
#include <vector>

#include "qwepi/qwalk/operators.hpp"

namespace qwepi::harness {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] const CheckResult *find(const std::string &name) const noexcept;
};

/// Golden checks against the built-in operator constructors.
VerifyReport run_verification();

/// Same checks, with the 8-site cycle operators supplied by the caller.
VerifyReport run_verification(const qwalk::CycleShift &cycle8);

/// One line per check: PASS|FAIL <name> max_deviation=<x> [detail]
void print_report(std::ostream &out, const VerifyReport &report);

} // namespace qwepi::harness
