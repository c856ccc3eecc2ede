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

#include "qwepi/epidemic/snapshot.hpp"

#include <fstream>

#include "qwepi/error.hpp"

namespace qwepi::epidemic {

Image render_snapshot(const LatticeState &lattice) {
    const int L = lattice.config.L;
    Image image{L, L, std::vector<std::uint8_t>(3 * static_cast<std::size_t>(L) * static_cast<std::size_t>(L))};
    std::vector<std::uint8_t> occupied(lattice.sites.size(), 0);
    for (const Walker &w : lattice.walkers) {
        occupied[lattice.index(w.position)] = 1;
    }
    for (std::size_t i = 0; i < lattice.sites.size(); ++i) {
        Rgb c = palette::kEmpty;
        if (occupied[i] != 0) {
            c = palette::kActive;
        } else if (lattice.sites[i] == SiteState::Removed) {
            c = palette::kRemoved;
        } else if (lattice.visited[i] != 0) {
            c = palette::kVisited;
        } else if (lattice.sites[i] == SiteState::Susceptible) {
            c = palette::kSusceptible;
        }
        image.rgb[3 * i] = c[0];
        image.rgb[3 * i + 1] = c[1];
        image.rgb[3 * i + 2] = c[2];
    }
    return image;
}

void write_ppm(std::ostream &out, const Image &image) {
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char *>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
}

void write_ppm(const std::filesystem::path &path, const Image &image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    }
    write_ppm(out, image);
    if (!out) {
        throw Error(ErrorKind::Io, "failed writing " + path.string());
    }
}

std::size_t count_pixels(const Image &image, Rgb colour) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + 2 < image.rgb.size(); i += 3) {
        if (image.rgb[i] == colour[0] && image.rgb[i + 1] == colour[1] && image.rgb[i + 2] == colour[2]) {
            ++n;
        }
    }
    return n;
}

} // namespace qwepi::epidemic
