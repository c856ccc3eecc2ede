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

#include "qwepi/rng.hpp"

namespace qwepi {

namespace {
__extension__ typedef unsigned __int128 uint128;
} // namespace

std::uint64_t derive_seed(std::uint64_t master,
                          std::span<const std::uint64_t> indices) noexcept {
    std::uint64_t h = mix64(master ^ 0x6a09e667f3bcc909ULL);
    std::uint64_t position = 0;
    for (const std::uint64_t index : indices) {
        ++position;
        h = mix64(h ^ mix64(index + position * 0x9e3779b97f4a7c15ULL));
    }
    return mix64(h + indices.size());
}

std::uint64_t Rng::below(std::uint64_t n) noexcept {
    // Lemire's multiply-shift with rejection of the biased low band.
    uint128 m = static_cast<uint128>((*this)()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            m = static_cast<uint128>((*this)()) * n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace qwepi
