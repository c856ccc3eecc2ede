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
#include <vector>

#include "qwepi/error.hpp"
#include "qwepi/harness/cli.hpp"

namespace fs = std::filesystem;
using namespace qwepi::harness;
using qwepi::Error;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qwepi");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

/// Fresh scratch directory per test case.
struct Scratch {
    fs::path root;
    explicit Scratch(const std::string &name) : root(fs::temp_directory_path() / ("qwepi_cli_" + name)) {
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~Scratch() { fs::remove_all(root); }
    [[nodiscard]] std::string operator/(const std::string &leaf) const { return (root / leaf).string(); }
};

} // namespace

TEST_CASE("complex amplitude lists") {
    const auto v = parse_complex_list("1,0.5i,0.25-0.75i,-i,-2");
    REQUIRE(v.size() == 5);
    CHECK(v[0] == qwepi::qwalk::Complex(1, 0));
    CHECK(v[1] == qwepi::qwalk::Complex(0, 0.5));
    CHECK(v[2] == qwepi::qwalk::Complex(0.25, -0.75));
    CHECK(v[3] == qwepi::qwalk::Complex(0, -1));
    CHECK(v[4] == qwepi::qwalk::Complex(-2, 0));
    CHECK(parse_complex_list(format_complex_list(v)) == v);
    CHECK_THROWS_AS(parse_complex_list("1,abc"), Error);
    CHECK_THROWS_AS(parse_complex_list("1+2"), Error);
}

TEST_CASE("key=value parsing") {
    const auto kv = parse_key_value_text("# comment\n\n tau = 3\np=0.5\n");
    CHECK(kv.size() == 2);
    CHECK(kv.at("tau") == "3");
    CHECK(kv.at("p") == "0.5");
    CHECK_THROWS_AS(parse_key_value_text("no equals sign"), Error);
}

TEST_CASE("walk writes distributions") {
    Scratch s("walk");
    const auto r = cli({"walk", "--geometry", "line:9", "--steps", "3", "--out", s / "w"});
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(s.root / "w" / "walk.csv"));
    REQUIRE(rows.size() == 1 + 4 * 9);
    CHECK(rows[0] == "t,position,probability");
    CHECK(rows[1] == "0,-4,0");
    // t = 3 block: positions -4..4, expected 1/8 at -3, -1, 3 and 5/8 at 1.
    const auto probability = [&](std::size_t row) { return std::stod(rows[row].substr(rows[row].rfind(',') + 1)); };
    CHECK(rows[1 + 27 + 1].rfind("3,-3,", 0) == 0);
    CHECK(probability(1 + 27 + 1) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(rows[1 + 27 + 5].rfind("3,1,", 0) == 0);
    CHECK(probability(1 + 27 + 5) == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(fs::exists(s.root / "w" / "manifest.txt"));

    const auto final_only = cli({"walk", "--geometry", "hypercube", "--coin", "dft:3", "--steps", "4",
                                 "--final-only", "--out", s / "h"});
    REQUIRE(final_only.code == 0);
    const auto hrows = lines(slurp(s.root / "h" / "walk.csv"));
    REQUIRE(hrows.size() == 1 + 8);
    CHECK(hrows[1].rfind("4,000,", 0) == 0);

    CHECK(cli({"walk", "--geometry", "cycle:8", "--coin", "hadamard2", "--out", s / "x"}).code == 2);
    CHECK(cli({"walk", "--geometry", "blob", "--out", s / "x"}).code == 2);
}

TEST_CASE("run writes stats, the infection log and frames") {
    Scratch s("run");
    const auto r = cli({"run", "--L", "16", "--N", "200", "--tau", "3", "--policy", "classical", "--seed", "5",
                        "--snapshot-every", "2", "--out", s / "r"});
    REQUIRE(r.code == 0);
    const auto stats = lines(slurp(s.root / "r" / "stats.csv"));
    REQUIRE(stats.size() == 2);
    CHECK(stats[0] == "policy,L,N,p,tau,seed,first_generation_infections,total_infections,cluster_size_M,"
                      "steps_to_extinction,peak_active_walkers");
    CHECK(stats[1].rfind("classical,16,200,1,3,5,", 0) == 0);
    CHECK(lines(slurp(s.root / "r" / "infections.csv"))[0] == "step,infector_id,site_x,site_y,generation");
    CHECK(fs::exists(s.root / "r" / "frame_000000.ppm"));
    CHECK(fs::exists(s.root / "r" / "frame_000002.ppm"));
    CHECK(fs::file_size(s.root / "r" / "frame_000000.ppm") == std::string("P6\n16 16\n255\n").size() + 16 * 16 * 3);
}

TEST_CASE("r0 and cluster tables are thread-count independent") {
    Scratch s("r0");
    const std::vector<std::string> grid{"r0", "--p-list", "1,0.25", "--tau-list", "1,2", "--policy",
                                        "classical,quantum-collapse", "--runs", "30", "--L", "16", "--N", "256",
                                        "--seed", "9"};
    auto one = grid;
    one.insert(one.end(), {"--threads", "1", "--out", s / "a"});
    auto many = grid;
    many.insert(many.end(), {"--threads", "6", "--out", s / "b"});
    REQUIRE(cli(one).code == 0);
    REQUIRE(cli(many).code == 0);
    const std::string a = slurp(s.root / "a" / "r0.csv");
    CHECK(a == slurp(s.root / "b" / "r0.csv"));
    CHECK(slurp(s.root / "a" / "comparison.csv") == slurp(s.root / "b" / "comparison.csv"));
    const auto rows = lines(a);
    REQUIRE(rows.size() == 1 + 2 * 4);
    CHECK(rows[0] == "policy,p,tau,runs,seed,r0_mean,r0_stderr");
    CHECK(lines(slurp(s.root / "a" / "comparison.csv"))[0] ==
          "quantum_policy,p,tau,r0_q,r0_q_stderr,r0_c,r0_c_stderr,ratio_q_over_c,naive_p_tau,converged");

    const std::vector<std::string> curve{"cluster", "--n-list", "16,64", "--L", "12", "--runs", "20"};
    auto c1 = curve;
    c1.insert(c1.end(), {"--threads", "1", "--out", s / "c1"});
    auto c2 = curve;
    c2.insert(c2.end(), {"--threads", "5", "--out", s / "c2"});
    REQUIRE(cli(c1).code == 0);
    REQUIRE(cli(c2).code == 0);
    const std::string cl = slurp(s.root / "c1" / "cluster.csv");
    CHECK(cl == slurp(s.root / "c2" / "cluster.csv"));
    CHECK(lines(cl)[0] == "policy,L,p,tau,N,runs,mean_M,stderr_M");
    CHECK(lines(cl).size() == 3);
}

TEST_CASE("manifest replays as a config file") {
    Scratch s("manifest");
    REQUIRE(cli({"run", "--L", "20", "--N", "300", "--p", "0.75", "--tau", "2", "--policy", "quantum-statevector",
                 "--seed", "44", "--out", s / "first"})
                .code == 0);
    REQUIRE(cli({"run", "--config", s / "first/manifest.txt", "--out", s / "second"}).code == 0);
    CHECK(slurp(s.root / "first" / "stats.csv") == slurp(s.root / "second" / "stats.csv"));
    CHECK(slurp(s.root / "first" / "infections.csv") == slurp(s.root / "second" / "infections.csv"));
}

TEST_CASE("command line beats the config file, which beats defaults") {
    Scratch s("precedence");
    {
        std::ofstream cfg(s.root / "c.txt");
        cfg << "L=10\nN=50\ntau=3\npolicy=classical\n";
    }
    REQUIRE(cli({"run", "--config", s / "c.txt", "--tau", "1", "--out", s / "o"}).code == 0);
    const auto row = lines(slurp(s.root / "o" / "stats.csv")).at(1);
    // policy, L and N from the file; tau from the flag; p from the default.
    CHECK(row.rfind("classical,10,50,1,1,", 0) == 0);

    {
        std::ofstream bad(s.root / "bad.txt");
        bad << "bogus-key=1\n";
    }
    CHECK(cli({"run", "--config", s / "bad.txt", "--out", s / "o2"}).code == 2);
}

TEST_CASE("exit codes") {
    Scratch s("codes");
    CHECK(cli({"run", "--p", "2", "--out", s / "x"}).code == 2);
    CHECK(cli({"run", "--L", "4", "--N", "17", "--out", s / "x"}).code == 2);
    CHECK(cli({"run", "--policy", "nope", "--out", s / "x"}).code == 2);
    CHECK(cli({"r0", "--runs", "0", "--out", s / "x"}).code == 2);
    CHECK(cli({"run", "--shots", "many", "--out", s / "x"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"run", "--config", s / "missing.txt", "--out", s / "x"}).code == 3);
    {
        std::ofstream blocker(s.root / "file");
        blocker << "x";
    }
    CHECK(cli({"walk", "--out", s / "file/sub"}).code == 3);
    const auto v = cli({"verify"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("PASS cycle8-inc-matrix") != std::string::npos);
}
