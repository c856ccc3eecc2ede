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

#include "qwepi/epidemic/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qwepi/error.hpp"

namespace qwepi::epidemic {

namespace {

constexpr std::uint64_t kPlacementStream = 0;
constexpr std::uint64_t kWalkerStream = 1;

int wrap(int v, int n) noexcept { return ((v % n) + n) % n; }

/// Replaces exact probabilities with the empirical frequencies of `shots`
/// simulated measurements.
std::vector<double> shot_histogram(std::span<const double> exact, int shots, Rng &rng) {
    std::vector<double> freq(exact.size(), 0.0);
    for (int s = 0; s < shots; ++s) {
        freq[qwalk::sample_index(exact, rng)] += 1.0;
    }
    for (double &f : freq) {
        f /= shots;
    }
    return freq;
}

std::size_t draw(std::span<const double> probabilities, int shots, Rng &rng) {
    if (shots > 0) {
        const auto histogram = shot_histogram(probabilities, shots, rng);
        return qwalk::sample_index(histogram, rng);
    }
    return qwalk::sample_index(probabilities, rng);
}

} // namespace

MoveRules::MoveRules(const EpidemicConfig &config)
    : policy_(config.policy), extent_(config.L), boundary_(config.boundary), shots_(config.shots),
      coin_(config.coin ? *config.coin : qwalk::make_hadamard_coin(2)) {
    if (policy_ == Policy::QuantumStatevector) {
        window_ = std::min(config.L, 2 * config.tau + 1);
        wave_op_.emplace(coin_, qwalk::make_torus_shift_2d(window_, window_));
    }
}

Coord MoveRules::window_to_lattice(Coord spawn, std::size_t index) const noexcept {
    const auto w = static_cast<std::size_t>(window_);
    const int centre = window_ / 2;
    const int wx = static_cast<int>(index % w);
    const int wy = static_cast<int>(index / w);
    return {wrap(spawn.x + wx - centre, extent_), wrap(spawn.y + wy - centre, extent_)};
}

Coord MoveRules::neighbour(Coord from, qwalk::Direction d) const noexcept {
    qwalk::Offset off = qwalk::direction_offset(d);
    if (boundary_ == Boundary::Reflect) {
        const int nx = from.x + off.dx;
        const int ny = from.y + off.dy;
        if (nx < 0 || nx >= extent_ || ny < 0 || ny >= extent_) {
            off = qwalk::direction_offset(qwalk::opposite(d));
        }
        return {from.x + off.dx, from.y + off.dy};
    }
    return {wrap(from.x + off.dx, extent_), wrap(from.y + off.dy, extent_)};
}

Walker spawn_walker(const EpidemicConfig &config, const MoveRules &rules, int id,
                    std::optional<int> parent_id, int generation, Coord site) {
    Walker w;
    w.id = id;
    w.parent_id = parent_id;
    w.generation = generation;
    w.position = site;
    w.lifetime = config.tau;
    w.rng = Rng(derive_seed(config.seed, {kWalkerStream, static_cast<std::uint64_t>(id)}));
    switch (rules.policy()) {
    case Policy::Classical:
        break;
    case Policy::QuantumHistogram:
    case Policy::QuantumCollapse:
        w.coin_state = config.initial_coin;
        break;
    case Policy::QuantumStatevector: {
        const int win = rules.window();
        const auto centre = static_cast<std::size_t>(win / 2);
        const std::size_t start = centre + static_cast<std::size_t>(win) * centre;
        qwalk::Vector coin(4);
        for (int c = 0; c < 4; ++c) {
            coin[c] = config.initial_coin[static_cast<std::size_t>(c)];
        }
        coin.normalize();
        w.wave.emplace(LocalWave{
            qwalk::AmplitudeVector::localized(coin, start, static_cast<std::size_t>(win) * static_cast<std::size_t>(win)),
            site});
        break;
    }
    }
    return w;
}

void walker_move(Walker &walker, const MoveRules &rules) {
    if (!walker.active()) {
        throw Error(ErrorKind::InactiveWalker, "walker " + std::to_string(walker.id) + " has expired");
    }
    switch (rules.policy()) {
    case Policy::Classical: {
        const auto d = static_cast<qwalk::Direction>(walker.rng.below(qwalk::kLatticeDirections));
        walker.position = rules.neighbour(walker.position, d);
        break;
    }
    case Policy::QuantumHistogram:
    case Policy::QuantumCollapse: {
        auto &coin = *walker.coin_state;
        const qwalk::Matrix &c = rules.coin().matrix();
        std::array<Complex, 4> next{};
        for (int r = 0; r < 4; ++r) {
            for (int k = 0; k < 4; ++k) {
                next[static_cast<std::size_t>(r)] += c(r, k) * coin[static_cast<std::size_t>(k)];
            }
        }
        coin = next;
        const auto probabilities = qwalk::coin_distribution(coin);
        const std::size_t d = draw(probabilities, rules.shots(), walker.rng);
        if (rules.policy() == Policy::QuantumCollapse) {
            const Complex kept = coin[d];
            coin.fill(Complex{});
            coin[d] = kept / std::abs(kept);
        }
        walker.position = rules.neighbour(walker.position, static_cast<qwalk::Direction>(d));
        break;
    }
    case Policy::QuantumStatevector: {
        auto &wave = *walker.wave;
        wave.state = qwalk::step(wave.state, *rules.wave_operator());
        const auto marginal = qwalk::position_distribution(wave.state);
        walker.position = rules.window_to_lattice(wave.spawn, draw(marginal, rules.shots(), walker.rng));
        break;
    }
    }
    ++walker.age;
}

void LatticeState::mark_visited(Coord c) noexcept {
    auto &flag = visited[index(c)];
    if (flag == 0) {
        flag = 1;
        ++visited_count;
    }
}

SiteCounts count_sites(const LatticeState &lattice) {
    SiteCounts counts;
    for (const SiteState s : lattice.sites) {
        switch (s) {
        case SiteState::Empty:
            ++counts.empty;
            break;
        case SiteState::Susceptible:
            ++counts.susceptible;
            break;
        case SiteState::Removed:
            ++counts.removed;
            break;
        }
    }
    return counts;
}

LatticeState init_lattice(const EpidemicConfig &config) {
    config.validate();
    LatticeState lattice;
    lattice.config = config;
    lattice.rules = std::make_shared<const MoveRules>(config);
    const auto sites = static_cast<std::size_t>(config.L) * static_cast<std::size_t>(config.L);
    lattice.sites.assign(sites, SiteState::Empty);
    lattice.visited.assign(sites, 0);

    const std::size_t origin = lattice.index(config.initial_site);
    std::vector<std::size_t> candidates;
    candidates.reserve(sites - 1);
    for (std::size_t i = 0; i < sites; ++i) {
        if (i != origin) {
            candidates.push_back(i);
        }
    }
    // Partial Fisher-Yates: the first N - 1 slots become a uniform sample.
    Rng placement(derive_seed(config.seed, {kPlacementStream}));
    const auto susceptible = static_cast<std::size_t>(config.N - 1);
    for (std::size_t i = 0; i < susceptible; ++i) {
        const std::size_t j = i + placement.below(candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        lattice.sites[candidates[i]] = SiteState::Susceptible;
    }

    lattice.sites[origin] = SiteState::Removed;
    lattice.mark_visited(config.initial_site);
    lattice.walkers.push_back(spawn_walker(config, *lattice.rules, 0, std::nullopt, 0, config.initial_site));
    lattice.next_walker_id = 1;
    lattice.peak_active_walkers = 1;
    return lattice;
}

std::vector<InfectionEvent> infection_sweep(LatticeState &lattice) {
    std::vector<InfectionEvent> events;
    const std::size_t acting = lattice.walkers.size();
    const double p = lattice.config.p;
    for (std::size_t i = 0; i < acting; ++i) {
        // Index access: spawning below may reallocate the walker vector.
        const Coord site = lattice.walkers[i].position;
        const std::size_t idx = lattice.index(site);
        if (lattice.sites[idx] != SiteState::Susceptible) {
            continue;
        }
        if (!lattice.walkers[i].rng.bernoulli(p)) {
            continue;
        }
        lattice.sites[idx] = SiteState::Removed;
        const int parent = lattice.walkers[i].id;
        const int generation = lattice.walkers[i].generation + 1;
        const InfectionEvent event{lattice.step_count + 1, parent, site, generation};
        lattice.infection_log.push_back(event);
        events.push_back(event);
        lattice.walkers.push_back(
            spawn_walker(lattice.config, *lattice.rules, lattice.next_walker_id++, parent, generation, site));
    }
    return events;
}

std::vector<InfectionEvent> tick(LatticeState &lattice) {
    if (lattice.extinct()) {
        throw Error(ErrorKind::Extinct, "no active walkers remain");
    }
    if (lattice.step_count >= lattice.config.step_cap()) {
        throw Error(ErrorKind::NonTermination,
                    "step cap " + std::to_string(lattice.config.step_cap()) + " reached with walkers still active");
    }
    for (Walker &w : lattice.walkers) {
        walker_move(w, *lattice.rules);
    }
    for (const Walker &w : lattice.walkers) {
        lattice.mark_visited(w.position);
    }
    auto events = infection_sweep(lattice);
    lattice.peak_active_walkers = std::max(lattice.peak_active_walkers, lattice.walkers.size());
    std::erase_if(lattice.walkers, [](const Walker &w) { return !w.active(); });
    ++lattice.step_count;
    return events;
}

RealizationStats realization_stats(const LatticeState &lattice) {
    RealizationStats stats;
    for (const auto &event : lattice.infection_log) {
        if (event.infector_id == 0) {
            ++stats.first_generation_infections;
        }
    }
    stats.total_infections = static_cast<std::int64_t>(lattice.infection_log.size());
    stats.cluster_size_M = static_cast<std::int64_t>(lattice.visited_count);
    stats.steps_to_extinction = lattice.step_count;
    stats.peak_active_walkers = static_cast<std::int64_t>(lattice.peak_active_walkers);
    return stats;
}

RealizationStats run_realization(const EpidemicConfig &config, const TickObserver &observer) {
    LatticeState lattice = init_lattice(config);
    if (observer) {
        observer(lattice);
    }
    while (!lattice.extinct()) {
        tick(lattice);
        if (observer) {
            observer(lattice);
        }
    }
    return realization_stats(lattice);
}

void write_infection_log_csv(std::ostream &out, const std::vector<InfectionEvent> &log) {
    out << "step,infector_id,site_x,site_y,generation\n";
    for (const auto &e : log) {
        out << e.step << ',' << e.infector_id << ',' << e.site.x << ',' << e.site.y << ',' << e.generation << '\n';
    }
}

} // namespace qwepi::epidemic
