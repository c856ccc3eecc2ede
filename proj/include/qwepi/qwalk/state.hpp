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
#include <cstddef>
#include <span>
#include <vector>

#include "qwepi/qwalk/operators.hpp"
#include "qwepi/rng.hpp"

namespace qwepi::qwalk {

/// Walker state over coin (x) position, stored coin-major.
class AmplitudeVector {
  public:
    /// Validates the length and that the state is normalized to kAccumulated.
    AmplitudeVector(int coin_dim, std::size_t position_dim, Vector amplitudes);

    /// coin_state (x) |position>. coin_state must be normalized to kAlgebraic.
    static AmplitudeVector localized(const Vector &coin_state, std::size_t position,
                                     std::size_t position_dim);

    [[nodiscard]] int coin_dim() const noexcept { return coin_dim_; }
    [[nodiscard]] std::size_t position_dim() const noexcept { return position_dim_; }
    [[nodiscard]] const Vector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex at(int coin, std::size_t position) const {
        return amps_[static_cast<Eigen::Index>(static_cast<std::size_t>(coin) * position_dim_ + position)];
    }
    [[nodiscard]] double norm_squared() const { return amps_.squaredNorm(); }

  private:
    friend AmplitudeVector step(const AmplitudeVector &, const EvolutionOperator &);
    AmplitudeVector(int coin_dim, std::size_t position_dim, Vector amplitudes, bool /*unchecked*/)
        : coin_dim_(coin_dim), position_dim_(position_dim), amps_(std::move(amplitudes)) {}

    int coin_dim_;
    std::size_t position_dim_;
    Vector amps_;
};

/// U |state>. Throws DimensionMismatch when the operator does not fit.
AmplitudeVector step(const AmplitudeVector &state, const EvolutionOperator &u);

/// P(x) = sum over coin states of |amp(coin, x)|^2.
std::vector<double> position_distribution(const AmplitudeVector &state);

/// Born-rule probabilities of a coin register. Throws InvalidState when the
/// squared norm deviates from 1 by more than 1e-6.
std::vector<double> coin_probabilities(std::span<const Complex> coin_state);

/// Two-qubit coin specialisation; entries follow Direction order
/// (-x, -y, +x, +y).
std::array<double, kLatticeDirections> coin_distribution(std::span<const Complex, kLatticeDirections> coin_state);

/// Draws index i with probability dist[i] using one uniform draw.
/// Entries down to -1e-12 are clamped to zero; the total must be within
/// 1e-6 of one and is renormalized. Violations, including an all-zero
/// vector, throw InvalidDistribution.
std::size_t sample_index(std::span<const double> dist, Rng &rng);

} // namespace qwepi::qwalk
