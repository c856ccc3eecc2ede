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

#include <doctest.h>

#include <sstream>
#include <string>

#include "qwepi/harness/verify.hpp"

using namespace qwepi::harness;
using namespace qwepi::qwalk;

TEST_CASE("all built-in checks pass") {
    const auto report = run_verification();
    CHECK(report.checks.size() >= 5);
    CHECK(report.all_passed());
    for (const char *name : {"cycle8-inc-matrix", "cycle8-dec-matrix", "cycle8-shift-matrix", "cycle8-evolution-matrix",
                             "inc-dec-inverse", "unitarity-suite", "dft3-column-law", "line-walk-exact",
                             "hypercube-involution"}) {
        const auto *check = report.find(name);
        REQUIRE_MESSAGE(check != nullptr, name);
        CHECK_MESSAGE(check->passed, name);
        CHECK(check->max_deviation < 1e-12);
    }
    CHECK(report.find("no-such-check") == nullptr);
}

TEST_CASE("a corrupted increment is caught") {
    auto cycle = make_cycle_shift(3);
    // Swap two images: still a permutation, but not the increment.
    cycle.inc = Permutation({1, 0, 3, 4, 5, 6, 7, 2});
    const auto report = run_verification(cycle);
    CHECK(!report.all_passed());
    const auto *inc = report.find("cycle8-inc-matrix");
    REQUIRE(inc != nullptr);
    CHECK(!inc->passed);
    CHECK(report.find("cycle8-dec-matrix")->passed);

    std::ostringstream out;
    print_report(out, report);
    CHECK(out.str().find("FAIL cycle8-inc-matrix") != std::string::npos);
}
