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

#include "qwepi/qwalk/walk.hpp"

#include <cmath>
#include <string>

#include "qwepi/error.hpp"
#include "qwepi/rng.hpp"

namespace qwepi::qwalk {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

ShiftOperator make_shift(const Geometry &geometry) {
    return std::visit(Overloaded{
                          [](const CycleGeometry &g) { return make_cycle_shift_sites(g.n_sites); },
                          [](const LineGeometry &g) { return make_cycle_shift_sites(g.extent); },
                          [](const Torus2dGeometry &g) { return make_torus_shift_2d(g.lx, g.ly); },
                          [](const HypercubeGeometry &g) { return make_hypercube_shift(g.d); },
                      },
                      geometry);
}

std::size_t position_count(const Geometry &geometry) {
    return std::visit(Overloaded{
                          [](const CycleGeometry &g) { return g.n_sites; },
                          [](const LineGeometry &g) { return g.extent; },
                          [](const Torus2dGeometry &g) {
                              return static_cast<std::size_t>(g.lx) * static_cast<std::size_t>(g.ly);
                          },
                          [](const HypercubeGeometry &g) { return std::size_t{1} << g.d; },
                      },
                      geometry);
}

std::size_t origin_index(const Geometry &geometry) {
    if (const auto *line = std::get_if<LineGeometry>(&geometry)) {
        return line->extent / 2;
    }
    return 0;
}

std::string position_label(const Geometry &geometry, std::size_t index) {
    return std::visit(Overloaded{
                          [&](const CycleGeometry &) { return std::to_string(index); },
                          [&](const LineGeometry &g) {
                              return std::to_string(static_cast<long long>(index) -
                                                    static_cast<long long>(g.extent / 2));
                          },
                          [&](const Torus2dGeometry &g) {
                              const auto lx = static_cast<std::size_t>(g.lx);
                              return std::to_string(index % lx) + ":" + std::to_string(index / lx);
                          },
                          [&](const HypercubeGeometry &g) {
                              std::string bits(static_cast<std::size_t>(g.d), '0');
                              for (int b = 0; b < g.d; ++b) {
                                  if ((index >> (g.d - 1 - b)) & 1U) {
                                      bits[static_cast<std::size_t>(b)] = '1';
                                  }
                              }
                              return bits;
                          },
                      },
                      geometry);
}

QuantumWalk::QuantumWalk(const WalkSpec &spec)
    : u_(evolution_operator(spec.coin, make_shift(spec.geometry))),
      state_(AmplitudeVector::localized(spec.initial_coin_state, spec.initial_position, u_.position_dim())) {
    if (spec.initial_coin_state.size() != spec.coin.dim()) {
        throw Error(ErrorKind::IncompatibleOperator, "initial coin state does not match coin dimension");
    }
}

void QuantumWalk::advance(int steps) {
    for (int i = 0; i < steps; ++i) {
        state_ = step(state_, u_);
        ++time_;
    }
}

namespace {

double variance_on_line(const std::vector<double> &p, std::size_t origin) {
    double mean = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double x = static_cast<double>(i) - static_cast<double>(origin);
        mean += p[i] * x;
        second += p[i] * x * x;
    }
    return second - mean * mean;
}

} // namespace

std::vector<VariancePoint> spread_variance(const WalkSpec &spec, int t_max) {
    const auto *line = std::get_if<LineGeometry>(&spec.geometry);
    if (line == nullptr) {
        throw Error(ErrorKind::InvalidConfig, "spread variance needs a line geometry");
    }
    if (t_max < 10) {
        throw Error(ErrorKind::InvalidConfig, "spread variance needs t_max >= 10");
    }
    if (line->extent <= 2 * static_cast<std::size_t>(t_max)) {
        throw Error(ErrorKind::Wraparound, "line extent " + std::to_string(line->extent) +
                                               " would wrap within " + std::to_string(t_max) + " steps");
    }
    QuantumWalk walk(spec);
    const std::size_t origin = origin_index(spec.geometry);
    std::vector<VariancePoint> series;
    series.reserve(static_cast<std::size_t>(t_max) + 1);
    series.push_back({0, variance_on_line(walk.distribution(), origin)});
    for (int t = 1; t <= t_max; ++t) {
        walk.advance();
        series.push_back({t, variance_on_line(walk.distribution(), origin)});
    }
    return series;
}

std::vector<VariancePoint> classical_spread_variance(int t_max, std::size_t walkers, std::uint64_t seed) {
    if (t_max < 1 || walkers == 0) {
        throw Error(ErrorKind::InvalidConfig, "classical spread needs t_max >= 1 and walkers >= 1");
    }
    std::vector<long long> sum(static_cast<std::size_t>(t_max) + 1, 0);
    std::vector<long long> sum_sq(static_cast<std::size_t>(t_max) + 1, 0);
    for (std::size_t w = 0; w < walkers; ++w) {
        Rng rng(derive_seed(seed, {w}));
        long long x = 0;
        for (int t = 1; t <= t_max; ++t) {
            x += (rng() >> 63) != 0 ? 1 : -1;
            sum[static_cast<std::size_t>(t)] += x;
            sum_sq[static_cast<std::size_t>(t)] += x * x;
        }
    }
    std::vector<VariancePoint> series;
    series.reserve(sum.size());
    const auto n = static_cast<double>(walkers);
    for (int t = 0; t <= t_max; ++t) {
        const double mean = static_cast<double>(sum[static_cast<std::size_t>(t)]) / n;
        const double second = static_cast<double>(sum_sq[static_cast<std::size_t>(t)]) / n;
        series.push_back({t, second - mean * mean});
    }
    return series;
}

double loglog_slope(std::span<const VariancePoint> series, int t_lo, int t_hi) {
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    int n = 0;
    for (const auto &pt : series) {
        if (pt.t < t_lo || pt.t > t_hi) {
            continue;
        }
        if (pt.t <= 0 || pt.variance <= 0.0) {
            throw Error(ErrorKind::InvalidConfig, "log-log fit needs positive t and variance");
        }
        const double x = std::log(static_cast<double>(pt.t));
        const double y = std::log(pt.variance);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) {
        throw Error(ErrorKind::InvalidConfig, "log-log fit needs at least two points");
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

} // namespace qwepi::qwalk
