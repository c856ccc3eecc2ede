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
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "qwepi/epidemic/config.hpp"
#include "qwepi/qwalk/state.hpp"
#include "qwepi/rng.hpp"

namespace qwepi::epidemic {

enum class SiteState : std::uint8_t { Empty, Susceptible, Removed };

/// Coherent coin (x) position state of a statevector walker. The state lives
/// on a window torus centred on the spawn site that is wide enough for the
/// walker's whole lifetime, so it never wraps differently from the lattice.
struct LocalWave {
    qwalk::AmplitudeVector state;
    Coord spawn;
};

struct Walker {
    int id = 0;
    std::optional<int> parent_id;
    int generation = 0;
    Coord position;
    int age = 0;
    int lifetime = 1;
    std::optional<std::array<Complex, 4>> coin_state;
    std::optional<LocalWave> wave;
    Rng rng;

    [[nodiscard]] bool active() const noexcept { return age < lifetime; }
};

/// Everything a move needs besides the walker itself. Immutable and shared
/// between all walkers of a realization.
class MoveRules {
  public:
    explicit MoveRules(const EpidemicConfig &config);

    [[nodiscard]] Policy policy() const noexcept { return policy_; }
    [[nodiscard]] int extent() const noexcept { return extent_; }
    [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
    [[nodiscard]] int shots() const noexcept { return shots_; }
    [[nodiscard]] const qwalk::CoinOperator &coin() const noexcept { return coin_; }
    /// Window extent of statevector walkers (0 for other policies).
    [[nodiscard]] int window() const noexcept { return window_; }
    [[nodiscard]] const qwalk::EvolutionOperator *wave_operator() const noexcept {
        return wave_op_ ? &*wave_op_ : nullptr;
    }

    /// Lattice site for window index `index` of a wave spawned at `spawn`.
    [[nodiscard]] Coord window_to_lattice(Coord spawn, std::size_t index) const noexcept;
    /// Neighbour in direction d, honouring the boundary condition.
    [[nodiscard]] Coord neighbour(Coord from, qwalk::Direction d) const noexcept;

  private:
    Policy policy_;
    int extent_;
    Boundary boundary_;
    int shots_;
    qwalk::CoinOperator coin_;
    int window_ = 0;
    std::optional<qwalk::EvolutionOperator> wave_op_;
};

/// Fresh walker at `site` with the configured initial coin and its own
/// random substream.
Walker spawn_walker(const EpidemicConfig &config, const MoveRules &rules, int id,
                    std::optional<int> parent_id, int generation, Coord site);

/// Advances an active walker by one step. Throws InactiveWalker otherwise.
void walker_move(Walker &walker, const MoveRules &rules);

struct InfectionEvent {
    std::int64_t step;
    int infector_id;
    Coord site;
    /// Generation of the walker spawned by this infection.
    int generation;
};

struct LatticeState {
    EpidemicConfig config;
    std::shared_ptr<const MoveRules> rules;
    std::vector<SiteState> sites;
    std::vector<std::uint8_t> visited;
    std::size_t visited_count = 0;
    /// Active walkers in ascending id order.
    std::vector<Walker> walkers;
    int next_walker_id = 0;
    std::int64_t step_count = 0;
    std::vector<InfectionEvent> infection_log;
    std::size_t peak_active_walkers = 0;

    [[nodiscard]] std::size_t index(Coord c) const noexcept {
        return static_cast<std::size_t>(c.x) + static_cast<std::size_t>(config.L) * static_cast<std::size_t>(c.y);
    }
    [[nodiscard]] SiteState at(Coord c) const noexcept { return sites[index(c)]; }
    [[nodiscard]] bool is_visited(Coord c) const noexcept { return visited[index(c)] != 0; }
    [[nodiscard]] bool extinct() const noexcept { return walkers.empty(); }
    void mark_visited(Coord c) noexcept;
};

struct SiteCounts {
    std::size_t empty = 0;
    std::size_t susceptible = 0;
    std::size_t removed = 0;
};

SiteCounts count_sites(const LatticeState &lattice);

/// Places N - 1 susceptible agents uniformly without replacement away from
/// the initial site, marks the initial site removed and visited, and spawns
/// the index walker (id 0).
LatticeState init_lattice(const EpidemicConfig &config);

/// One infection attempt per walker at its current site, in ascending id
/// order. Walkers spawned here join the list but do not act until the next
/// tick.
std::vector<InfectionEvent> infection_sweep(LatticeState &lattice);

/// Move, mark visited, infect, retire expired walkers, advance the clock.
/// Throws Extinct when no walker is active and NonTermination at the cap.
std::vector<InfectionEvent> tick(LatticeState &lattice);

struct RealizationStats {
    std::int64_t first_generation_infections = 0;
    std::int64_t total_infections = 0;
    std::int64_t cluster_size_M = 0;
    std::int64_t steps_to_extinction = 0;
    std::int64_t peak_active_walkers = 0;

    friend bool operator==(const RealizationStats &, const RealizationStats &) = default;
};

RealizationStats realization_stats(const LatticeState &lattice);

/// Observer invoked on the initial lattice and after every tick.
using TickObserver = std::function<void(const LatticeState &)>;

RealizationStats run_realization(const EpidemicConfig &config, const TickObserver &observer = {});

/// step,infector_id,site_x,site_y,generation
void write_infection_log_csv(std::ostream &out, const std::vector<InfectionEvent> &log);

} // namespace qwepi::epidemic
