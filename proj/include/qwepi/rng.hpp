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

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>

namespace qwepi {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Derives a substream seed from a master seed and an index path.
 *
 * The mapping is stateless and frozen: outputs for a given (master, indices)
 * pair never change between releases, so recorded seeds stay reproducible.
 * Each index is folded in position-dependently, so (s, [a, b]) and
 * (s, [b, a]) differ, as do paths of different length.
 */
std::uint64_t derive_seed(std::uint64_t master,
                          std::span<const std::uint64_t> indices) noexcept;

inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> indices) noexcept {
    return derive_seed(master, std::span<const std::uint64_t>(indices.begin(), indices.size()));
}

/**
 * Counter-based 64-bit generator: the i-th output is mix64(key + i * golden).
 *
 * Satisfies UniformRandomBitGenerator. The helper draws below are defined in
 * terms of raw outputs only, so sequences are identical across standard
 * library implementations.
 */
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t key = 0) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGolden);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    /// Unbiased integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept;

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace qwepi
