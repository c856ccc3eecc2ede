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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qwepi/qwalk/operators.hpp"
#include "qwepi/qwalk/state.hpp"

namespace qwepi::qwalk {

struct CycleGeometry {
    std::size_t n_sites;
};

/// A line of `extent` sites realised as a cycle; the origin sits at index
/// extent / 2 and labels run from -extent/2 upward.
struct LineGeometry {
    std::size_t extent;
};

struct Torus2dGeometry {
    int lx;
    int ly;
};

struct HypercubeGeometry {
    int d = 3;
};

using Geometry = std::variant<CycleGeometry, LineGeometry, Torus2dGeometry, HypercubeGeometry>;

ShiftOperator make_shift(const Geometry &geometry);
std::size_t position_count(const Geometry &geometry);

/// Index of label 0 for a line, 0 for everything else.
std::size_t origin_index(const Geometry &geometry);

/// Human-readable position label: signed offset on a line, "x:y" on a torus,
/// a d-bit string on a hypercube, the index on a cycle.
std::string position_label(const Geometry &geometry, std::size_t index);

struct WalkSpec {
    Geometry geometry;
    CoinOperator coin;
    std::size_t initial_position;
    Vector initial_coin_state;
};

/// Statevector walk driven by U = S (C (x) I).
class QuantumWalk {
  public:
    explicit QuantumWalk(const WalkSpec &spec);

    void advance(int steps = 1);

    [[nodiscard]] int time() const noexcept { return time_; }
    [[nodiscard]] const AmplitudeVector &state() const noexcept { return state_; }
    [[nodiscard]] const EvolutionOperator &evolution() const noexcept { return u_; }
    [[nodiscard]] std::vector<double> distribution() const { return position_distribution(state_); }

  private:
    EvolutionOperator u_;
    AmplitudeVector state_;
    int time_ = 0;
};

struct VariancePoint {
    int t;
    double variance;
};

/// sigma^2(t) for t = 0..t_max from exact evolution on a line.
/// Requires LineGeometry with extent > 2 * t_max (else Wraparound) and t_max >= 10.
std::vector<VariancePoint> spread_variance(const WalkSpec &spec, int t_max);

/// Monte-Carlo sigma^2(t) of `walkers` independent unbiased +-1 walks.
std::vector<VariancePoint> classical_spread_variance(int t_max, std::size_t walkers, std::uint64_t seed);

/// Least-squares slope of log(sigma^2) against log(t) over t in [t_lo, t_hi].
double loglog_slope(std::span<const VariancePoint> series, int t_lo, int t_hi);

} // namespace qwepi::qwalk
