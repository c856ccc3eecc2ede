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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "qwepi/epidemic/snapshot.hpp"

using namespace qwepi::epidemic;

namespace {

EpidemicConfig small(std::uint64_t seed) {
    EpidemicConfig c;
    c.policy = Policy::Classical;
    c.L = 12;
    c.N = 80;
    c.p = 0.9;
    c.tau = 3;
    c.seed = seed;
    c.initial_site = {4, 6};
    return c;
}

std::size_t total(const Image &img) {
    return count_pixels(img, palette::kActive) + count_pixels(img, palette::kRemoved) +
           count_pixels(img, palette::kVisited) + count_pixels(img, palette::kSusceptible) +
           count_pixels(img, palette::kEmpty);
}

} // namespace

TEST_CASE("step 0 shows the index case as the only red pixel") {
    const auto lattice = init_lattice(small(1));
    const Image img = render_snapshot(lattice);
    CHECK(img.width == 12);
    CHECK(img.height == 12);
    CHECK(img.rgb.size() == 12 * 12 * 3);
    CHECK(count_pixels(img, palette::kActive) == 1);
    CHECK(img.pixel(4, 6) == palette::kActive);
    CHECK(count_pixels(img, palette::kSusceptible) == 79);
    CHECK(count_pixels(img, palette::kEmpty) == 144 - 80);
}

TEST_CASE("colour precedence and conservation through a run") {
    std::size_t frames = 0;
    run_realization(small(2), [&](const LatticeState &lat) {
        const Image img = render_snapshot(lat);
        CHECK(total(img) == 144);
        for (int y = 0; y < 12; ++y) {
            for (int x = 0; x < 12; ++x) {
                const Coord c{x, y};
                Rgb want = palette::kEmpty;
                bool active = false;
                for (const auto &w : lat.walkers) {
                    active = active || w.position == c;
                }
                if (active) {
                    want = palette::kActive;
                } else if (lat.at(c) == SiteState::Removed) {
                    want = palette::kRemoved;
                } else if (lat.is_visited(c)) {
                    want = palette::kVisited;
                } else if (lat.at(c) == SiteState::Susceptible) {
                    want = palette::kSusceptible;
                }
                CHECK(img.pixel(x, y) == want);
            }
        }
        if (lat.extinct()) {
            CHECK(count_pixels(img, palette::kActive) == 0);
        }
        ++frames;
    });
    CHECK(frames >= 2);
}

TEST_CASE("PPM encoding") {
    Image img;
    img.width = 2;
    img.height = 1;
    img.rgb = {1, 2, 3, 250, 251, 252};
    std::ostringstream out;
    write_ppm(out, img);
    const std::string want = std::string("P6\n2 1\n255\n") + "\x01\x02\x03\xfa\xfb\xfc";
    CHECK(out.str() == want);

    const auto path = std::filesystem::temp_directory_path() / "qwepi_snapshot_test.ppm";
    write_ppm(path, render_snapshot(init_lattice(small(3))));
    std::ifstream in(path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(bytes.size() == std::string("P6\n12 12\n255\n").size() + 144 * 3);
    CHECK(bytes.rfind("P6\n12 12\n255\n", 0) == 0);
    std::filesystem::remove(path);
}
