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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "qwepi/qwalk/operators.hpp"

namespace qwepi::epidemic {

using qwalk::Complex;

enum class Policy {
    Classical,
    /// Coin evolves coherently; each step samples a direction from |amp|^2.
    QuantumHistogram,
    /// As QuantumHistogram, then the coin is projected onto the sampled direction.
    QuantumCollapse,
    /// Full coin (x) position state; the nominal site is sampled from its marginal.
    QuantumStatevector,
};

enum class Boundary { Torus, Reflect };

std::string_view to_string(Policy policy) noexcept;
std::string_view to_string(Boundary boundary) noexcept;
std::optional<Policy> parse_policy(std::string_view text) noexcept;
std::optional<Boundary> parse_boundary(std::string_view text) noexcept;

struct Coord {
    int x = 0;
    int y = 0;
    friend bool operator==(Coord, Coord) = default;
};

struct EpidemicConfig {
    int L = 64;
    /// Agents: N - 1 susceptible plus the index case.
    int N = 4096;
    double p = 1.0;
    int tau = 1;
    Policy policy = Policy::QuantumHistogram;
    Coord initial_site{0, 0};
    /// Coin given to every new walker, ordered |00>, |01>, |10>, |11>.
    std::array<Complex, 4> initial_coin{Complex{1.0, 0.0}, {}, {}, {}};
    /// Coin applied before every quantum move; H (x) H when unset.
    std::optional<qwalk::CoinOperator> coin;
    std::uint64_t seed = 0;
    /// Tick cap; 0 selects (N + 1) * tau.
    std::int64_t max_steps = 0;
    Boundary boundary = Boundary::Torus;
    /// Measurement shots per move; 0 samples from exact amplitudes.
    int shots = 0;

    /// Throws InvalidConfig (or OverfullLattice when N > L^2).
    void validate() const;
    [[nodiscard]] std::int64_t step_cap() const noexcept;
};

} // namespace qwepi::epidemic
