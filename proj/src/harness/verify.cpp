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

#include "qwepi/harness/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qwepi/qwalk/reference.hpp"
#include "qwepi/qwalk/state.hpp"
#include "qwepi/qwalk/walk.hpp"

namespace qwepi::harness {

bool VerifyReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *VerifyReport::find(const std::string &name) const noexcept {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

using qwalk::Complex;
using qwalk::Matrix;
using qwalk::tolerance::kAlgebraic;

/// Entrywise comparison where reference zeros must be reproduced exactly.
template <std::size_t N>
CheckResult compare_golden(std::string name, const Matrix &built,
                           const std::array<std::array<int, N>, N> &reference, double scale) {
    CheckResult r{std::move(name), false, 0.0, {}};
    if (built.rows() != static_cast<Eigen::Index>(N) || built.cols() != static_cast<Eigen::Index>(N)) {
        r.detail = "shape mismatch";
        r.max_deviation = std::numeric_limits<double>::infinity();
        return r;
    }
    bool zeros_exact = true;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const Complex got = built(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            const double want = reference[i][j] * scale;
            r.max_deviation = std::max(r.max_deviation, std::abs(got - want));
            if (reference[i][j] == 0 && got != Complex{}) {
                zeros_exact = false;
            }
        }
    }
    r.passed = zeros_exact && r.max_deviation <= kAlgebraic;
    if (!zeros_exact) {
        r.detail = "nonzero where reference is zero";
    }
    return r;
}

CheckResult check_unitarity(const qwalk::CycleShift &cycle8) {
    CheckResult r{"unitarity-suite", false, 0.0, {}};
    const auto h = qwalk::make_hadamard_coin(1);
    std::vector<Matrix> ops{h.matrix(), qwalk::make_hadamard_coin(2).matrix(), qwalk::embed_dft3_gate().matrix()};
    for (int d = 2; d <= 6; ++d) {
        ops.push_back(qwalk::make_dft_coin(d).matrix());
    }
    ops.push_back(cycle8.shift.dense());
    ops.push_back(qwalk::make_torus_shift_2d(4, 4).dense());
    ops.push_back(qwalk::make_hypercube_shift(3).dense());
    ops.push_back(qwalk::evolution_operator(h, cycle8.shift).dense());
    ops.push_back(qwalk::evolution_operator(qwalk::make_hadamard_coin(2), qwalk::make_torus_shift_2d(4, 4)).dense());
    ops.push_back(qwalk::evolution_operator(qwalk::make_dft_coin(3), qwalk::make_hypercube_shift(3)).dense());
    for (const Matrix &m : ops) {
        r.max_deviation = std::max(r.max_deviation, qwalk::unitarity_deviation(m));
    }
    r.passed = r.max_deviation <= kAlgebraic;
    r.detail = fmt::format("{} operators", ops.size());
    return r;
}

CheckResult check_dft3_law() {
    CheckResult r{"dft3-column-law", false, 0.0, {}};
    qwalk::Vector e0 = qwalk::Vector::Zero(3);
    e0[0] = 1.0;
    const auto p3 = qwalk::coin_probabilities(std::span<const Complex>(
        qwalk::make_dft_coin(3).apply(e0).data(), 3));
    for (const double p : p3) {
        r.max_deviation = std::max(r.max_deviation, std::abs(p - 1.0 / 3.0));
    }
    qwalk::Vector g0 = qwalk::Vector::Zero(4);
    g0[0] = 1.0;
    const qwalk::Vector out = qwalk::embed_dft3_gate().apply(g0);
    const std::array<double, 4> want{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        r.max_deviation = std::max(r.max_deviation, std::abs(std::norm(out[i]) - want[static_cast<std::size_t>(i)]));
    }
    r.passed = r.max_deviation <= kAlgebraic;
    return r;
}

CheckResult check_line_walk() {
    CheckResult r{"line-walk-exact", false, 0.0, {}};
    qwalk::Vector up = qwalk::Vector::Zero(2);
    up[0] = 1.0;
    const qwalk::LineGeometry line{9};
    qwalk::QuantumWalk walk({line, qwalk::make_hadamard_coin(1), qwalk::origin_index(line), up});
    const std::size_t o = qwalk::origin_index(line);
    // Expected probabilities keyed by offset from the origin for t = 1, 2, 3.
    const std::array<std::vector<std::pair<int, double>>, 3> expected{{
        {{1, 0.5}, {-1, 0.5}},
        {{2, 0.25}, {0, 0.5}, {-2, 0.25}},
        {{3, 0.125}, {1, 0.625}, {-1, 0.125}, {-3, 0.125}},
    }};
    for (const auto &law : expected) {
        walk.advance();
        std::vector<double> want(line.extent, 0.0);
        for (const auto &[x, p] : law) {
            want[static_cast<std::size_t>(static_cast<int>(o) + x)] = p;
        }
        const auto got = walk.distribution();
        for (std::size_t i = 0; i < got.size(); ++i) {
            r.max_deviation = std::max(r.max_deviation, std::abs(got[i] - want[i]));
        }
    }
    r.passed = r.max_deviation <= kAlgebraic;
    return r;
}

CheckResult check_hypercube() {
    CheckResult r{"hypercube-involution", false, 0.0, {}};
    const auto shift = qwalk::make_hypercube_shift(3);
    bool ok = true;
    for (int j = 0; j < shift.coin_dim(); ++j) {
        ok = ok && shift.action(j).then(shift.action(j)).is_identity();
    }
    // Direction 1 takes 000 to 100, direction 2 then takes 100 to 110.
    ok = ok && shift.action(0)(0b000) == 0b100 && shift.action(1)(0b100) == 0b110;
    const double dev =
        qwalk::unitarity_deviation(qwalk::evolution_operator(qwalk::make_dft_coin(3), shift).dense());
    r.max_deviation = dev;
    r.passed = ok && dev <= kAlgebraic;
    if (!ok) {
        r.detail = "bit-flip action wrong";
    }
    return r;
}

CheckResult check_inc_dec(const qwalk::CycleShift &cycle8) {
    CheckResult r{"inc-dec-inverse", false, 0.0, {}};
    r.passed = cycle8.inc.then(cycle8.dec).is_identity() && cycle8.dec.then(cycle8.inc).is_identity();
    if (!r.passed) {
        r.detail = "INC and DEC are not mutually inverse";
    }
    return r;
}

} // namespace

VerifyReport run_verification() { return run_verification(qwalk::make_cycle_shift(3)); }

VerifyReport run_verification(const qwalk::CycleShift &cycle8) {
    namespace ref = qwalk::reference;
    VerifyReport report;
    report.checks.push_back(compare_golden("cycle8-inc-matrix", cycle8.inc.dense(), ref::kInc8, 1.0));
    report.checks.push_back(compare_golden("cycle8-dec-matrix", cycle8.dec.dense(), ref::kDec8, 1.0));
    report.checks.push_back(compare_golden("cycle8-shift-matrix", cycle8.shift.dense(), ref::kShift16, 1.0));
    report.checks.push_back(compare_golden(
        "cycle8-evolution-matrix",
        qwalk::evolution_operator(qwalk::make_hadamard_coin(1), cycle8.shift).dense(),
        ref::kEvolutionTimesSqrt2, 1.0 / std::numbers::sqrt2));
    report.checks.push_back(check_inc_dec(cycle8));
    report.checks.push_back(check_unitarity(cycle8));
    report.checks.push_back(check_dft3_law());
    report.checks.push_back(check_line_walk());
    report.checks.push_back(check_hypercube());
    return report;
}

void print_report(std::ostream &out, const VerifyReport &report) {
    for (const auto &c : report.checks) {
        out << fmt::format("{} {} max_deviation={:.3e}{}{}\n", c.passed ? "PASS" : "FAIL", c.name, c.max_deviation,
                           c.detail.empty() ? "" : " ", c.detail);
    }
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto &c) { return c.passed; });
    out << fmt::format("{}/{} checks passed\n", passed, report.checks.size());
}

} // namespace qwepi::harness
