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
#include <filesystem>
#include <ostream>
#include <vector>

#include "qwepi/epidemic/lattice.hpp"

namespace qwepi::epidemic {

using Rgb = std::array<std::uint8_t, 3>;

namespace palette {
inline constexpr Rgb kActive{255, 0, 0};
inline constexpr Rgb kRemoved{0, 160, 0};
inline constexpr Rgb kVisited{255, 255, 0};
inline constexpr Rgb kSusceptible{0, 0, 255};
inline constexpr Rgb kEmpty{255, 255, 255};
} // namespace palette

/// Row-major RGB raster, row y = 0 first.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    [[nodiscard]] Rgb pixel(int x, int y) const {
        const auto i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }
};

/// Colour precedence: active walker > removed > visited > susceptible > empty.
Image render_snapshot(const LatticeState &lattice);

/// Binary PPM (P6, maxval 255).
void write_ppm(std::ostream &out, const Image &image);
void write_ppm(const std::filesystem::path &path, const Image &image);

std::size_t count_pixels(const Image &image, Rgb colour);

} // namespace qwepi::epidemic
