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

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "qwepi/epidemic/config.hpp"

namespace qwepi::analysis {

using epidemic::EpidemicConfig;
using epidemic::Policy;

/// Sample mean and standard error (unbiased sample deviation / sqrt(n)).
/// The error is 0 for a single sample.
struct MeanError {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};

MeanError mean_and_stderr(std::span<const double> samples);

struct R0Estimate {
    double p = 0.0;
    int tau = 1;
    Policy policy = Policy::Classical;
    int runs = 0;
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const R0Estimate &, const R0Estimate &) = default;
};

/// Mean first-generation infections over `runs` realizations of `base`.
/// Run r uses seed derive_seed(seed, {r}); the result does not depend on
/// `threads`.
R0Estimate estimate_r0(const EpidemicConfig &base, int runs, std::uint64_t seed, int threads = 1);

/// p * tau, the estimate that ignores self-intersection of walker paths.
double naive_r0(double p, int tau);

/// Cross product of tau rows and p columns for one policy.
struct R0Table {
    Policy policy = Policy::Classical;
    std::vector<double> p_list;
    std::vector<int> tau_list;
    /// Row-major: cells[tau_index * p_list.size() + p_index].
    std::vector<R0Estimate> cells;

    [[nodiscard]] const R0Estimate &cell(std::size_t tau_index, std::size_t p_index) const {
        return cells.at(tau_index * p_list.size() + p_index);
    }
};

/// Every cell is an estimate_r0 call with seed derive_seed(seed, {p_index, tau_index}).
/// All (cell, run) pairs share one worker pool.
R0Table r0_sweep(std::span<const double> p_list, std::span<const int> tau_list, Policy policy,
                 const EpidemicConfig &base, int runs, std::uint64_t seed, int threads = 1);

struct ClusterCurvePoint {
    int N = 0;
    int runs = 0;
    double mean_M = 0.0;
    double stderr_M = 0.0;

    friend bool operator==(const ClusterCurvePoint &, const ClusterCurvePoint &) = default;
};

/// Mean visited-cluster size per agent count. The seed of each point is
/// derive_seed(seed, {N}), so repeated N values reproduce each other.
std::vector<ClusterCurvePoint> cluster_growth(std::span<const int> n_list, const EpidemicConfig &base, int runs,
                                              std::uint64_t seed, int threads = 1);

struct ComparisonRow {
    double p = 0.0;
    int tau = 1;
    R0Estimate quantum;
    R0Estimate classical;
    /// quantum / classical mean; 1 when both are zero.
    double ratio = 1.0;
    double naive = 0.0;
    /// |R0_q - R0_c| <= 3 (stderr_q + stderr_c)
    bool converged = false;
};

/// Throws IncompatibleTable when the tables do not cover the same (p, tau) grid.
std::vector<ComparisonRow> summarize_comparison(const R0Table &quantum, const R0Table &classical);

/// policy,p,tau,runs,seed,r0_mean,r0_stderr
void write_r0_csv(std::ostream &out, std::span<const R0Table> tables);

/// policy,L,p,tau,N,runs,mean_M,stderr_M
void write_cluster_csv(std::ostream &out, const EpidemicConfig &base, std::span<const ClusterCurvePoint> points);

/// quantum_policy,p,tau,r0_q,r0_q_stderr,r0_c,r0_c_stderr,ratio_q_over_c,naive_p_tau,converged
void write_comparison_csv(std::ostream &out, std::span<const ComparisonRow> rows);

} // namespace qwepi::analysis
