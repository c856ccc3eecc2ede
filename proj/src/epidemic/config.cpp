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

#include "qwepi/epidemic/config.hpp"

#include <cmath>
#include <string>

#include "qwepi/error.hpp"

namespace qwepi::epidemic {

std::string_view to_string(Policy policy) noexcept {
    switch (policy) {
    case Policy::Classical:
        return "classical";
    case Policy::QuantumHistogram:
        return "quantum-histogram";
    case Policy::QuantumCollapse:
        return "quantum-collapse";
    case Policy::QuantumStatevector:
        return "quantum-statevector";
    }
    return "unknown";
}

std::string_view to_string(Boundary boundary) noexcept {
    return boundary == Boundary::Torus ? "torus" : "reflect";
}

std::optional<Policy> parse_policy(std::string_view text) noexcept {
    for (const Policy p : {Policy::Classical, Policy::QuantumHistogram, Policy::QuantumCollapse,
                           Policy::QuantumStatevector}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    return std::nullopt;
}

std::optional<Boundary> parse_boundary(std::string_view text) noexcept {
    if (text == "torus") {
        return Boundary::Torus;
    }
    if (text == "reflect") {
        return Boundary::Reflect;
    }
    return std::nullopt;
}

void EpidemicConfig::validate() const {
    if (L < 2) {
        throw Error(ErrorKind::InvalidConfig, "lattice extent L must be >= 2");
    }
    if (N < 1) {
        throw Error(ErrorKind::InvalidConfig, "N must be >= 1");
    }
    if (static_cast<long long>(N) > static_cast<long long>(L) * L) {
        throw Error(ErrorKind::OverfullLattice,
                    "N = " + std::to_string(N) + " exceeds the " + std::to_string(L * L) + " lattice sites");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "infection probability p must lie in [0, 1]");
    }
    if (tau < 1) {
        throw Error(ErrorKind::InvalidConfig, "walker lifetime tau must be >= 1");
    }
    if (initial_site.x < 0 || initial_site.x >= L || initial_site.y < 0 || initial_site.y >= L) {
        throw Error(ErrorKind::InvalidConfig, "initial site lies outside the lattice");
    }
    double norm = 0.0;
    for (const Complex a : initial_coin) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > qwalk::tolerance::kAccumulated) {
        throw Error(ErrorKind::InvalidConfig, "initial coin state is not normalized");
    }
    if (coin && coin->dim() != 4) {
        throw Error(ErrorKind::InvalidConfig, "lattice walkers need a 4-dimensional coin");
    }
    if (shots < 0) {
        throw Error(ErrorKind::InvalidConfig, "shots must be >= 0");
    }
    if (max_steps < 0) {
        throw Error(ErrorKind::InvalidConfig, "max_steps must be >= 0");
    }
    if (policy == Policy::QuantumStatevector && boundary == Boundary::Reflect) {
        throw Error(ErrorKind::InvalidConfig, "the statevector policy only supports the torus boundary");
    }
}

std::int64_t EpidemicConfig::step_cap() const noexcept {
    if (max_steps > 0) {
        return max_steps;
    }
    return (static_cast<std::int64_t>(N) + 1) * tau;
}

} // namespace qwepi::epidemic
