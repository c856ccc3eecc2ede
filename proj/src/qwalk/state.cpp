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

#include "qwepi/qwalk/state.hpp"

#include <cmath>
#include <utility>

#include "qwepi/error.hpp"

namespace qwepi::qwalk {

AmplitudeVector::AmplitudeVector(int coin_dim, std::size_t position_dim, Vector amplitudes)
    : coin_dim_(coin_dim), position_dim_(position_dim), amps_(std::move(amplitudes)) {
    if (coin_dim_ < 1 || position_dim_ < 1) {
        throw Error(ErrorKind::InvalidDimension, "amplitude vector needs positive dimensions");
    }
    if (static_cast<std::size_t>(amps_.size()) != static_cast<std::size_t>(coin_dim_) * position_dim_) {
        throw Error(ErrorKind::DimensionMismatch, "amplitude count must equal coin_dim * position_dim");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > tolerance::kAccumulated) {
        throw Error(ErrorKind::InvalidState, "amplitude vector is not normalized");
    }
}

AmplitudeVector AmplitudeVector::localized(const Vector &coin_state, std::size_t position,
                                           std::size_t position_dim) {
    if (position >= position_dim) {
        throw Error(ErrorKind::InvalidDimension, "initial position out of range");
    }
    if (std::abs(coin_state.squaredNorm() - 1.0) > tolerance::kAlgebraic) {
        throw Error(ErrorKind::InvalidState, "initial coin state is not normalized");
    }
    const auto coin_dim = static_cast<int>(coin_state.size());
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(static_cast<std::size_t>(coin_dim) * position_dim));
    for (int c = 0; c < coin_dim; ++c) {
        amps[static_cast<Eigen::Index>(static_cast<std::size_t>(c) * position_dim + position)] = coin_state[c];
    }
    return {coin_dim, position_dim, std::move(amps)};
}

AmplitudeVector step(const AmplitudeVector &state, const EvolutionOperator &u) {
    if (state.coin_dim() != u.coin_dim() || state.position_dim() != u.position_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state and evolution operator dimensions differ");
    }
    Vector next;
    u.apply(state.amplitudes(), next);
    return {state.coin_dim(), state.position_dim(), std::move(next), true};
}

std::vector<double> position_distribution(const AmplitudeVector &state) {
    std::vector<double> p(state.position_dim(), 0.0);
    for (int c = 0; c < state.coin_dim(); ++c) {
        for (std::size_t x = 0; x < state.position_dim(); ++x) {
            p[x] += std::norm(state.at(c, x));
        }
    }
    return p;
}

std::vector<double> coin_probabilities(std::span<const Complex> coin_state) {
    std::vector<double> p;
    p.reserve(coin_state.size());
    double total = 0.0;
    for (const Complex a : coin_state) {
        p.push_back(std::norm(a));
        total += p.back();
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw Error(ErrorKind::InvalidState, "coin state is not normalized");
    }
    return p;
}

std::array<double, kLatticeDirections>
coin_distribution(std::span<const Complex, kLatticeDirections> coin_state) {
    const auto p = coin_probabilities(coin_state);
    return {p[0], p[1], p[2], p[3]};
}

std::size_t sample_index(std::span<const double> dist, Rng &rng) {
    double total = 0.0;
    for (const double w : dist) {
        if (!(w >= -1e-12)) {
            throw Error(ErrorKind::InvalidDistribution, "negative or NaN probability");
        }
        total += std::max(w, 0.0);
    }
    if (total <= 0.0) {
        throw Error(ErrorKind::InvalidDistribution, "all-zero distribution");
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw Error(ErrorKind::InvalidDistribution, "probabilities do not sum to one");
    }
    const double target = rng.uniform() * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double w = std::max(dist[i], 0.0);
        if (w > 0.0) {
            last_positive = i;
            cumulative += w;
            if (target < cumulative) {
                return i;
            }
        }
    }
    // Rounding left target at the very top of the range.
    return last_positive;
}

} // namespace qwepi::qwalk
