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

#include "qwepi/analysis/estimators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "qwepi/epidemic/lattice.hpp"
#include "qwepi/error.hpp"
#include "qwepi/parallel.hpp"
#include "qwepi/rng.hpp"

namespace qwepi::analysis {

MeanError mean_and_stderr(std::span<const double> samples) {
    MeanError result;
    if (samples.empty()) {
        return result;
    }
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (const double s : samples) {
        sum += s;
    }
    result.mean = sum / n;
    if (samples.size() > 1) {
        double ss = 0.0;
        for (const double s : samples) {
            ss += (s - result.mean) * (s - result.mean);
        }
        result.stderr_of_mean = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return result;
}

namespace {

struct Cell {
    EpidemicConfig config;
    std::uint64_t seed;
};

enum class Metric { FirstGeneration, ClusterSize };

/// Runs every (cell, run) pair on one pool and reduces each cell in run order.
std::vector<MeanError> run_cells(const std::vector<Cell> &cells, int runs, Metric metric, int threads) {
    if (runs < 1) {
        throw Error(ErrorKind::InvalidConfig, "runs must be >= 1");
    }
    for (const Cell &c : cells) {
        c.config.validate();
    }
    const auto per_cell = static_cast<std::size_t>(runs);
    std::vector<double> samples(cells.size() * per_cell);
    parallel_for(samples.size(), threads, [&](std::size_t job) {
        const Cell &cell = cells[job / per_cell];
        EpidemicConfig config = cell.config;
        config.seed = derive_seed(cell.seed, {job % per_cell});
        const auto stats = epidemic::run_realization(config);
        samples[job] = static_cast<double>(metric == Metric::FirstGeneration ? stats.first_generation_infections
                                                                             : stats.cluster_size_M);
    });
    std::vector<MeanError> out;
    out.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        out.push_back(mean_and_stderr(std::span<const double>(samples).subspan(c * per_cell, per_cell)));
    }
    return out;
}

} // namespace

R0Estimate estimate_r0(const EpidemicConfig &base, int runs, std::uint64_t seed, int threads) {
    const auto result = run_cells({Cell{base, seed}}, runs, Metric::FirstGeneration, threads).front();
    return {base.p, base.tau, base.policy, runs, result.mean, result.stderr_of_mean, seed};
}

double naive_r0(double p, int tau) { return p * tau; }

R0Table r0_sweep(std::span<const double> p_list, std::span<const int> tau_list, Policy policy,
                 const EpidemicConfig &base, int runs, std::uint64_t seed, int threads) {
    if (p_list.empty() || tau_list.empty()) {
        throw Error(ErrorKind::InvalidConfig, "sweep needs at least one p and one tau");
    }
    R0Table table;
    table.policy = policy;
    table.p_list.assign(p_list.begin(), p_list.end());
    table.tau_list.assign(tau_list.begin(), tau_list.end());
    std::vector<Cell> cells;
    cells.reserve(p_list.size() * tau_list.size());
    for (std::size_t ti = 0; ti < tau_list.size(); ++ti) {
        for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
            EpidemicConfig config = base;
            config.p = p_list[pi];
            config.tau = tau_list[ti];
            config.policy = policy;
            cells.push_back({config, derive_seed(seed, {pi, ti})});
        }
    }
    const auto results = run_cells(cells, runs, Metric::FirstGeneration, threads);
    table.cells.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        table.cells.push_back({cells[i].config.p, cells[i].config.tau, policy, runs, results[i].mean,
                               results[i].stderr_of_mean, cells[i].seed});
    }
    return table;
}

std::vector<ClusterCurvePoint> cluster_growth(std::span<const int> n_list, const EpidemicConfig &base, int runs,
                                              std::uint64_t seed, int threads) {
    std::vector<Cell> cells;
    cells.reserve(n_list.size());
    for (const int n : n_list) {
        cells.push_back({base, derive_seed(seed, {static_cast<std::uint64_t>(n)})});
        cells.back().config.N = n;
    }
    const auto results = run_cells(cells, runs, Metric::ClusterSize, threads);
    std::vector<ClusterCurvePoint> points;
    points.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        points.push_back({n_list[i], runs, results[i].mean, results[i].stderr_of_mean});
    }
    return points;
}

std::vector<ComparisonRow> summarize_comparison(const R0Table &quantum, const R0Table &classical) {
    if (quantum.p_list != classical.p_list || quantum.tau_list != classical.tau_list ||
        quantum.cells.size() != classical.cells.size()) {
        throw Error(ErrorKind::IncompatibleTable, "quantum and classical tables cover different (p, tau) grids");
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(quantum.cells.size());
    for (std::size_t i = 0; i < quantum.cells.size(); ++i) {
        const R0Estimate &q = quantum.cells[i];
        const R0Estimate &c = classical.cells[i];
        ComparisonRow row{q.p, q.tau, q, c};
        if (c.mean != 0.0) {
            row.ratio = q.mean / c.mean;
        } else {
            row.ratio = q.mean == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
        }
        row.naive = naive_r0(q.p, q.tau);
        row.converged = std::abs(q.mean - c.mean) <= 3.0 * (q.stderr_of_mean + c.stderr_of_mean);
        rows.push_back(row);
    }
    return rows;
}

void write_r0_csv(std::ostream &out, std::span<const R0Table> tables) {
    out << "policy,p,tau,runs,seed,r0_mean,r0_stderr\n";
    for (const R0Table &table : tables) {
        for (const R0Estimate &e : table.cells) {
            out << fmt::format("{},{},{},{},{},{},{}\n", epidemic::to_string(e.policy), e.p, e.tau, e.runs, e.seed,
                               e.mean, e.stderr_of_mean);
        }
    }
}

void write_cluster_csv(std::ostream &out, const EpidemicConfig &base, std::span<const ClusterCurvePoint> points) {
    out << "policy,L,p,tau,N,runs,mean_M,stderr_M\n";
    for (const ClusterCurvePoint &pt : points) {
        out << fmt::format("{},{},{},{},{},{},{},{}\n", epidemic::to_string(base.policy), base.L, base.p, base.tau,
                           pt.N, pt.runs, pt.mean_M, pt.stderr_M);
    }
}

void write_comparison_csv(std::ostream &out, std::span<const ComparisonRow> rows) {
    out << "quantum_policy,p,tau,r0_q,r0_q_stderr,r0_c,r0_c_stderr,ratio_q_over_c,naive_p_tau,converged\n";
    for (const ComparisonRow &r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", epidemic::to_string(r.quantum.policy), r.p, r.tau,
                           r.quantum.mean, r.quantum.stderr_of_mean, r.classical.mean, r.classical.stderr_of_mean,
                           r.ratio, r.naive, r.converged ? "true" : "false");
    }
}

} // namespace qwepi::analysis
