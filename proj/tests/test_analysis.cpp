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

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qwepi/error.hpp"
#include "qwepi/analysis/estimators.hpp"
#include "qwepi/epidemic/lattice.hpp"
#include "qwepi/rng.hpp"

using namespace qwepi::analysis;
using qwepi::Error;
using qwepi::ErrorKind;

namespace {

EpidemicConfig lattice(Policy policy, int L, int N, double p, int tau) {
    EpidemicConfig c;
    c.policy = policy;
    c.L = L;
    c.N = N;
    c.p = p;
    c.tau = tau;
    return c;
}

// Straightforward two-pass oracle for the sample mean and standard error.
MeanError oracle_stats(const std::vector<double> &x) {
    double m = 0.0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    const double n = static_cast<double>(x.size());
    return {m, x.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0};
}

} // namespace

TEST_CASE("mean and standard error") {
    const std::vector<double> x{1.0, 2.0, 4.0, 7.0};
    const auto got = mean_and_stderr(x);
    const auto want = oracle_stats(x);
    CHECK(got.mean == doctest::Approx(want.mean).epsilon(1e-14));
    CHECK(got.stderr_of_mean == doctest::Approx(want.stderr_of_mean).epsilon(1e-14));
    const std::vector<double> one{3.0};
    CHECK(mean_and_stderr(one).stderr_of_mean == 0.0);
}

TEST_CASE("naive estimate") {
    CHECK(naive_r0(1.0, 3) == 3.0);
    CHECK(naive_r0(0.0, 2) == 0.0);
    CHECK(naive_r0(0.5, 2) == 1.0);
}

TEST_CASE("p = 0 gives exactly zero for every policy") {
    for (const Policy policy : {Policy::Classical, Policy::QuantumHistogram, Policy::QuantumCollapse,
                                Policy::QuantumStatevector}) {
        const auto e = estimate_r0(lattice(policy, 16, 256, 0.0, 2), 50, 3, 2);
        CHECK(e.mean == 0.0);
        CHECK(e.stderr_of_mean == 0.0);
        CHECK(e.runs == 50);
        CHECK(e.policy == policy);
    }
    CHECK_THROWS_AS(estimate_r0(lattice(Policy::Classical, 16, 256, 0.5, 2), 0, 3), Error);
}

TEST_CASE("estimate_r0 equals the mean over independently seeded realizations") {
    const auto base = lattice(Policy::QuantumHistogram, 16, 200, 0.7, 2);
    const auto e = estimate_r0(base, 40, 1234, 3);
    std::vector<double> x;
    for (std::uint64_t r = 0; r < 40; ++r) {
        auto c = base;
        c.seed = qwepi::derive_seed(1234, {r});
        x.push_back(static_cast<double>(qwepi::epidemic::run_realization(c).first_generation_infections));
    }
    const auto want = oracle_stats(x);
    CHECK(e.mean == doctest::Approx(want.mean).epsilon(1e-14));
    CHECK(e.stderr_of_mean == doctest::Approx(want.stderr_of_mean).epsilon(1e-12));
    CHECK(e.seed == 1234);
}

TEST_CASE("sweeps are independent of the thread count") {
    const std::vector<double> ps{1.0, 0.25};
    const std::vector<int> taus{1, 3};
    const auto base = lattice(Policy::QuantumCollapse, 24, 500, 1.0, 1);
    const auto a = r0_sweep(ps, taus, Policy::QuantumCollapse, base, 60, 8, 1);
    const auto b = r0_sweep(ps, taus, Policy::QuantumCollapse, base, 60, 8, 8);
    CHECK(a.cells == b.cells);
    REQUIRE(a.cells.size() == 4);
    CHECK(a.cell(1, 0).tau == 3);
    CHECK(a.cell(1, 0).p == 1.0);
    CHECK(a.cell(0, 1).p == 0.25);

    SUBCASE("a one-cell sweep is estimate_r0 under the cell seed") {
        const std::vector<double> p1{0.5};
        const std::vector<int> t1{2};
        const auto sweep = r0_sweep(p1, t1, Policy::Classical, base, 80, 17, 4);
        auto cfg = base;
        cfg.policy = Policy::Classical;
        cfg.p = 0.5;
        cfg.tau = 2;
        CHECK(sweep.cells.front() == estimate_r0(cfg, 80, qwepi::derive_seed(17, {0, 0}), 2));
    }
    CHECK_THROWS_AS(r0_sweep({}, taus, Policy::Classical, base, 10, 1), Error);
}

TEST_CASE("stderr roughly halves when runs quadruple") {
    const auto base = lattice(Policy::Classical, 32, 1024, 0.5, 3);
    double ratio_sum = 0.0;
    const int repeats = 6;
    for (int k = 0; k < repeats; ++k) {
        const auto small = estimate_r0(base, 250, 100 + static_cast<std::uint64_t>(k), 4);
        const auto big = estimate_r0(base, 1000, 200 + static_cast<std::uint64_t>(k), 4);
        ratio_sum += big.stderr_of_mean / small.stderr_of_mean;
    }
    CHECK(std::abs(ratio_sum / repeats - 0.5) <= 0.15);
}

TEST_CASE("classical tau = 1 column equals p at full occupancy") {
    const std::vector<double> ps{1.0, 0.5, 0.125};
    const std::vector<int> taus{1};
    const auto t = r0_sweep(ps, taus, Policy::Classical, lattice(Policy::Classical, 32, 1024, 1.0, 1), 800, 5, 4);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto &c = t.cell(0, i);
        CHECK(std::abs(c.mean - ps[i]) <= 3.0 * c.stderr_of_mean + 1e-12);
    }
}

TEST_CASE("cluster growth") {
    const auto base = lattice(Policy::QuantumHistogram, 16, 1, 1.0, 3);
    const std::vector<int> ns{1, 64, 64, 256};
    const auto curve = cluster_growth(ns, base, 60, 4, 3);
    REQUIRE(curve.size() == 4);
    CHECK(curve[0].mean_M >= 1.0);
    CHECK(curve[0].mean_M <= 4.0);
    CHECK(curve[1] == curve[2]);
    CHECK(curve[3].mean_M > curve[1].mean_M);
    CHECK(curve == cluster_growth(ns, base, 60, 4, 1));
    for (const auto &pt : curve) {
        CHECK(pt.mean_M <= 256.0);
        CHECK(pt.runs == 60);
    }
    const std::vector<int> too_many{257};
    CHECK_THROWS_AS(cluster_growth(too_many, base, 5, 1), Error);
}

TEST_CASE("comparison report") {
    const std::vector<double> ps{1.0, 0.0625};
    const std::vector<int> taus{1, 2};
    const auto base = lattice(Policy::Classical, 32, 1024, 1.0, 1);
    const auto c = r0_sweep(ps, taus, Policy::Classical, base, 100, 3, 4);

    SUBCASE("identical tables have unit ratios and converge") {
        auto same = c;
        same.policy = Policy::QuantumHistogram;
        for (const auto &row : summarize_comparison(same, c)) {
            CHECK(row.ratio == 1.0);
            CHECK(row.converged);
            CHECK(row.naive == row.p * row.tau);
        }
    }
    SUBCASE("ratios, flags and zero handling") {
        auto q = c;
        q.policy = Policy::QuantumHistogram;
        q.cells[0].mean = c.cells[0].mean * 2.0;
        q.cells[1].mean = 0.0;
        q.cells[1].stderr_of_mean = 0.0;
        auto c2 = c;
        c2.cells[1].mean = 0.0;
        c2.cells[1].stderr_of_mean = 0.0;
        q.cells[2].mean = 1.0;
        c2.cells[2].mean = 0.0;
        const auto rows = summarize_comparison(q, c2);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].ratio == doctest::Approx(2.0));
        CHECK(!rows[0].converged);
        CHECK(rows[1].ratio == 1.0);
        CHECK(rows[1].converged);
        CHECK(rows[2].ratio == std::numeric_limits<double>::infinity());
    }
    SUBCASE("grids must match") {
        const std::vector<double> other{0.5, 0.0625};
        const auto q = r0_sweep(other, taus, Policy::QuantumHistogram, base, 5, 3);
        try {
            summarize_comparison(q, c);
            FAIL("expected incompatible-table error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::IncompatibleTable);
        }
    }
}

TEST_CASE("CSV layouts") {
    R0Table t;
    t.policy = Policy::Classical;
    t.p_list = {0.5};
    t.tau_list = {2};
    t.cells = {R0Estimate{0.5, 2, Policy::Classical, 10, 0.875, 0.125, 7}};
    std::ostringstream r0;
    write_r0_csv(r0, std::span<const R0Table>(&t, 1));
    CHECK(r0.str() == "policy,p,tau,runs,seed,r0_mean,r0_stderr\nclassical,0.5,2,10,7,0.875,0.125\n");

    std::ostringstream cl;
    const ClusterCurvePoint pt{64, 20, 12.5, 0.25};
    write_cluster_csv(cl, lattice(Policy::QuantumHistogram, 16, 64, 1, 3), std::span<const ClusterCurvePoint>(&pt, 1));
    CHECK(cl.str() == "policy,L,p,tau,N,runs,mean_M,stderr_M\nquantum-histogram,16,1,3,64,20,12.5,0.25\n");

    ComparisonRow row;
    row.p = 1.0;
    row.tau = 2;
    row.quantum = R0Estimate{1.0, 2, Policy::QuantumCollapse, 10, 1.5, 0.1, 1};
    row.classical = R0Estimate{1.0, 2, Policy::Classical, 10, 0.75, 0.1, 1};
    row.ratio = 2.0;
    row.naive = 2.0;
    row.converged = false;
    std::ostringstream cmp;
    write_comparison_csv(cmp, std::span<const ComparisonRow>(&row, 1));
    CHECK(cmp.str() == "quantum_policy,p,tau,r0_q,r0_q_stderr,r0_c,r0_c_stderr,ratio_q_over_c,naive_p_tau,converged\n"
                       "quantum-collapse,1,2,1.5,0.1,0.75,0.1,2,2,false\n");
}
