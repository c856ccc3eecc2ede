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

#include "qwepi/harness/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "qwepi/analysis/estimators.hpp"
#include "qwepi/epidemic/lattice.hpp"
#include "qwepi/epidemic/snapshot.hpp"
#include "qwepi/error.hpp"
#include "qwepi/harness/verify.hpp"
#include "qwepi/parallel.hpp"
#include "qwepi/qwalk/walk.hpp"

namespace qwepi::harness {

namespace fs = std::filesystem;
using qwalk::Complex;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

bool parse_double(std::string_view s, std::size_t &pos, double &value) {
    const auto *begin = s.data() + pos;
    const auto *end = s.data() + s.size();
    // from_chars rejects a leading '+', strtod-style input allows it.
    bool negate = false;
    if (begin != end && (*begin == '+' || *begin == '-')) {
        negate = *begin == '-';
        ++begin;
    }
    if (begin != end && *begin == 'i') {
        value = negate ? -1.0 : 1.0;
        pos = static_cast<std::size_t>(begin - s.data());
        return true;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) {
        return false;
    }
    if (negate) {
        value = -value;
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    return true;
}

Complex parse_complex(std::string_view token) {
    const auto fail = [&] {
        return Error(ErrorKind::InvalidConfig, "cannot parse complex amplitude '" + std::string(token) + "'");
    };
    std::size_t pos = 0;
    double first = 0.0;
    if (token.empty() || !parse_double(token, pos, first)) {
        throw fail();
    }
    if (pos == token.size()) {
        return {first, 0.0};
    }
    if (token[pos] == 'i' && pos + 1 == token.size()) {
        return {0.0, first};
    }
    double second = 0.0;
    if ((token[pos] != '+' && token[pos] != '-') || !parse_double(token, pos, second) || pos + 1 != token.size() ||
        token[pos] != 'i') {
        throw fail();
    }
    return {first, second};
}

void write_text_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw Error(ErrorKind::Io, "failed writing " + path.string());
    }
}

std::string read_text_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path prepare_out_dir(const std::string &out) {
    if (out.empty()) {
        throw Error(ErrorKind::InvalidConfig, "--out is required");
    }
    const fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorKind::Io, "cannot create output directory " + out);
    }
    return dir;
}

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Keys written by the manifest that are not flags.
const std::set<std::string, std::less<>> kManifestMetadata{"tool_version", "timestamp",   "command_line",
                                                           "subcommand",   "outputs",     "master_seed"};

void write_manifest(const fs::path &dir, const std::vector<std::string> &args, const std::string &subcommand,
                    std::uint64_t seed, const ConfigEntries &config, const std::vector<std::string> &outputs) {
    std::string text = "# qwepi run manifest; reusable as --config\n";
    text += fmt::format("tool_version={}\n", kToolVersion);
    text += fmt::format("timestamp={:%Y-%m-%dT%H:%M:%SZ}\n",
                        fmt::gmtime(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now())));
    std::string line;
    for (const auto &a : args) {
        line += (line.empty() ? "" : " ") + a;
    }
    text += fmt::format("command_line={}\n", line);
    text += fmt::format("subcommand={}\n", subcommand);
    text += fmt::format("master_seed={}\n", seed);
    std::string outs;
    for (const auto &o : outputs) {
        outs += (outs.empty() ? "" : ",") + o;
    }
    text += fmt::format("outputs={}\n", outs);
    for (const auto &[key, value] : config) {
        text += fmt::format("{}={}\n", key, value);
    }
    write_text_file(dir / "manifest.txt", text);
}

template <class T> std::string join(const std::vector<T> &values) {
    std::string s;
    for (const auto &v : values) {
        s += (s.empty() ? "" : ",") + fmt::format("{}", v);
    }
    return s;
}

// ---- shared flags -------------------------------------------------------

struct SharedFlags {
    std::uint64_t seed = 1;
    int threads = default_threads();
    std::string out;
    std::string config;
    std::string shots = "exact";
    std::string boundary = "torus";
};

void add_core_flags(CLI::App *sub, SharedFlags &flags) {
    sub->add_option("--seed", flags.seed, "Master seed")->capture_default_str();
    sub->add_option("--threads", flags.threads, "Worker threads")->capture_default_str();
    sub->add_option("--out", flags.out, "Output directory");
    sub->add_option("--config", flags.config, "Flat key=value config file (CLI flags take precedence)");
}

void add_epidemic_flags(CLI::App *sub, SharedFlags &flags) {
    sub->add_option("--shots", flags.shots, "Movement sampling: exact or a shot count")->capture_default_str();
    sub->add_option("--boundary", flags.boundary, "torus or reflect")->capture_default_str();
}

int parse_shots(const std::string &text) {
    if (text == "exact") {
        return 0;
    }
    int shots = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), shots);
    if (ec != std::errc{} || ptr != text.data() + text.size() || shots < 1) {
        throw Error(ErrorKind::InvalidConfig, "--shots must be 'exact' or a positive integer");
    }
    return shots;
}

epidemic::Policy parse_policy_flag(const std::string &text) {
    const auto policy = epidemic::parse_policy(text);
    if (!policy) {
        throw Error(ErrorKind::InvalidConfig, "unknown policy '" + text + "'");
    }
    return *policy;
}

epidemic::Boundary parse_boundary_flag(const std::string &text) {
    const auto boundary = epidemic::parse_boundary(text);
    if (!boundary) {
        throw Error(ErrorKind::InvalidConfig, "unknown boundary '" + text + "'");
    }
    return *boundary;
}

void check_threads(int threads) {
    if (threads < 1) {
        throw Error(ErrorKind::InvalidConfig, "--threads must be >= 1");
    }
}

/// Fills options the user did not pass on the command line from the config file.
void apply_config_file(CLI::App *sub, const std::string &path) {
    if (path.empty()) {
        return;
    }
    for (const auto &[key, value] : parse_key_value_text(read_text_file(path))) {
        if (kManifestMetadata.count(key) != 0 || key == "config") {
            continue;
        }
        CLI::Option *opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) {
            throw Error(ErrorKind::InvalidConfig, "unknown config key '" + key + "' for " + sub->get_name());
        }
        if (opt->count() == 0) {
            opt->add_result(value);
            opt->run_callback();
        }
    }
}

// ---- walk ---------------------------------------------------------------

struct WalkFlags {
    std::string geometry = "cycle:8";
    std::string coin = "auto";
    int steps = 5;
    long long initial_position = -1;
    std::string initial_coin;
    bool final_only = false;
};

qwalk::Geometry parse_geometry(const std::string &text) {
    const auto parts = split(text, ':');
    const auto number = [&](std::string_view s) {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
            throw Error(ErrorKind::InvalidConfig, "bad size in geometry '" + text + "'");
        }
        return v;
    };
    const std::string_view kind = parts[0];
    if (kind == "cycle" && parts.size() == 2) {
        return qwalk::CycleGeometry{static_cast<std::size_t>(number(parts[1]))};
    }
    if (kind == "line" && parts.size() == 2) {
        return qwalk::LineGeometry{static_cast<std::size_t>(number(parts[1]))};
    }
    if (kind == "torus" && parts.size() == 2) {
        const auto dims = split(parts[1], 'x');
        if (dims.size() == 1) {
            const int l = static_cast<int>(number(dims[0]));
            return qwalk::Torus2dGeometry{l, l};
        }
        if (dims.size() == 2) {
            return qwalk::Torus2dGeometry{static_cast<int>(number(dims[0])), static_cast<int>(number(dims[1]))};
        }
    }
    if (kind == "hypercube") {
        return qwalk::HypercubeGeometry{parts.size() == 2 ? static_cast<int>(number(parts[1])) : 3};
    }
    throw Error(ErrorKind::InvalidConfig,
                "geometry must be cycle:N, line:N, torus:L[xL] or hypercube[:d], got '" + text + "'");
}

qwalk::CoinOperator parse_coin(const std::string &text, const qwalk::Geometry &geometry) {
    if (text == "auto") {
        if (std::holds_alternative<qwalk::Torus2dGeometry>(geometry)) {
            return qwalk::make_hadamard_coin(2);
        }
        if (const auto *cube = std::get_if<qwalk::HypercubeGeometry>(&geometry)) {
            return qwalk::make_dft_coin(cube->d);
        }
        return qwalk::make_hadamard_coin(1);
    }
    if (text == "hadamard") {
        return qwalk::make_hadamard_coin(1);
    }
    if (text == "hadamard2") {
        return qwalk::make_hadamard_coin(2);
    }
    if (text == "dft3gate") {
        return qwalk::embed_dft3_gate();
    }
    if (text.rfind("dft:", 0) == 0) {
        return qwalk::make_dft_coin(std::stoi(text.substr(4)));
    }
    if (text.rfind("identity:", 0) == 0) {
        return qwalk::make_identity_coin(std::stoi(text.substr(9)));
    }
    throw Error(ErrorKind::UnsupportedCoin, "unknown coin '" + text + "'");
}

int cmd_walk(const std::vector<std::string> &args, const SharedFlags &shared, const WalkFlags &flags,
             std::ostream &out) {
    const qwalk::Geometry geometry = parse_geometry(flags.geometry);
    qwalk::CoinOperator coin = parse_coin(flags.coin, geometry);
    const auto shift = qwalk::make_shift(geometry);
    if (coin.dim() != shift.coin_dim()) {
        throw Error(ErrorKind::IncompatibleOperator,
                    fmt::format("invalid geometry/coin pairing: coin dimension {} vs {} shift directions", coin.dim(),
                                shift.coin_dim()));
    }
    qwalk::Vector coin_state = qwalk::Vector::Zero(coin.dim());
    if (flags.initial_coin.empty()) {
        coin_state[0] = 1.0;
    } else {
        const auto amps = parse_complex_list(flags.initial_coin);
        if (static_cast<int>(amps.size()) != coin.dim()) {
            throw Error(ErrorKind::InvalidConfig, "--initial-coin needs one amplitude per coin state");
        }
        for (int i = 0; i < coin.dim(); ++i) {
            coin_state[i] = amps[static_cast<std::size_t>(i)];
        }
    }
    if (flags.steps < 0) {
        throw Error(ErrorKind::InvalidConfig, "--steps must be >= 0");
    }
    const std::size_t start = flags.initial_position < 0 ? qwalk::origin_index(geometry)
                                                         : static_cast<std::size_t>(flags.initial_position);
    const fs::path dir = prepare_out_dir(shared.out);
    qwalk::QuantumWalk walk({geometry, coin, start, coin_state});

    std::string csv = "t,position,probability\n";
    const auto dump = [&] {
        const auto p = walk.distribution();
        for (std::size_t i = 0; i < p.size(); ++i) {
            csv += fmt::format("{},{},{}\n", walk.time(), qwalk::position_label(geometry, i), p[i]);
        }
    };
    if (!flags.final_only) {
        dump();
    }
    for (int t = 0; t < flags.steps; ++t) {
        walk.advance();
        if (!flags.final_only) {
            dump();
        }
    }
    if (flags.final_only) {
        dump();
    }
    write_text_file(dir / "walk.csv", csv);
    std::vector<Complex> initial(coin_state.data(), coin_state.data() + coin_state.size());
    write_manifest(dir, args, "walk", shared.seed,
                   {{"geometry", flags.geometry},
                    {"coin", flags.coin},
                    {"steps", std::to_string(flags.steps)},
                    {"initial-position", std::to_string(start)},
                    {"initial-coin", format_complex_list(initial)},
                    {"final-only", flags.final_only ? "true" : "false"}},
                   {"walk.csv"});
    out << fmt::format("walk: {} steps on {} written to {}\n", flags.steps, flags.geometry, (dir / "walk.csv").string());
    return kExitOk;
}

// ---- run ----------------------------------------------------------------

struct RunFlags {
    int L = 64;
    int N = 4096;
    double p = 1.0;
    int tau = 3;
    std::string policy = "quantum-histogram";
    int initial_x = 0;
    int initial_y = 0;
    std::string initial_coin = "1,0,0,0";
    long long max_steps = 0;
    int snapshot_every = 0;
};

std::array<Complex, 4> lattice_coin(const std::string &text) {
    const auto amps = parse_complex_list(text);
    if (amps.size() != 4) {
        throw Error(ErrorKind::InvalidConfig, "lattice walkers need four coin amplitudes");
    }
    return {amps[0], amps[1], amps[2], amps[3]};
}

epidemic::EpidemicConfig epidemic_config(const SharedFlags &shared, int L, int N, double p, int tau,
                                         const std::string &policy) {
    epidemic::EpidemicConfig config;
    config.L = L;
    config.N = N;
    config.p = p;
    config.tau = tau;
    config.policy = parse_policy_flag(policy);
    config.seed = shared.seed;
    config.boundary = parse_boundary_flag(shared.boundary);
    config.shots = parse_shots(shared.shots);
    return config;
}

ConfigEntries epidemic_entries(const SharedFlags &shared) {
    return {{"seed", std::to_string(shared.seed)}, {"shots", shared.shots}, {"boundary", shared.boundary}};
}

int cmd_run(const std::vector<std::string> &args, const SharedFlags &shared, const RunFlags &flags,
            std::ostream &out) {
    auto config = epidemic_config(shared, flags.L, flags.N, flags.p, flags.tau, flags.policy);
    config.initial_site = {flags.initial_x, flags.initial_y};
    config.initial_coin = lattice_coin(flags.initial_coin);
    config.max_steps = flags.max_steps;
    if (flags.snapshot_every < 0) {
        throw Error(ErrorKind::InvalidConfig, "--snapshot-every must be >= 0");
    }
    epidemic::LatticeState lattice = epidemic::init_lattice(config);
    const fs::path dir = prepare_out_dir(shared.out);

    std::vector<std::string> outputs;
    std::int64_t last_frame = -1;
    const auto frame = [&] {
        const std::string name = fmt::format("frame_{:06}.ppm", lattice.step_count);
        epidemic::write_ppm(dir / name, epidemic::render_snapshot(lattice));
        outputs.push_back(name);
        last_frame = lattice.step_count;
    };
    if (flags.snapshot_every > 0) {
        frame();
    }
    while (!lattice.extinct()) {
        epidemic::tick(lattice);
        if (flags.snapshot_every > 0 && lattice.step_count % flags.snapshot_every == 0) {
            frame();
        }
    }
    if (flags.snapshot_every > 0 && last_frame != lattice.step_count) {
        frame();
    }

    const auto stats = epidemic::realization_stats(lattice);
    write_text_file(
        dir / "stats.csv",
        fmt::format("policy,L,N,p,tau,seed,first_generation_infections,total_infections,cluster_size_M,"
                    "steps_to_extinction,peak_active_walkers\n{},{},{},{},{},{},{},{},{},{},{}\n",
                    epidemic::to_string(config.policy), config.L, config.N, config.p, config.tau, config.seed,
                    stats.first_generation_infections, stats.total_infections, stats.cluster_size_M,
                    stats.steps_to_extinction, stats.peak_active_walkers));
    std::ostringstream log;
    epidemic::write_infection_log_csv(log, lattice.infection_log);
    write_text_file(dir / "infections.csv", log.str());
    outputs.insert(outputs.begin(), {"stats.csv", "infections.csv"});

    ConfigEntries entries = epidemic_entries(shared);
    entries.insert(entries.end(), {{"L", std::to_string(flags.L)},
                                   {"N", std::to_string(flags.N)},
                                   {"p", fmt::format("{}", flags.p)},
                                   {"tau", std::to_string(flags.tau)},
                                   {"policy", flags.policy},
                                   {"initial-x", std::to_string(flags.initial_x)},
                                   {"initial-y", std::to_string(flags.initial_y)},
                                   {"initial-coin", flags.initial_coin},
                                   {"max-steps", std::to_string(flags.max_steps)},
                                   {"snapshot-every", std::to_string(flags.snapshot_every)}});
    write_manifest(dir, args, "run", shared.seed, entries, outputs);
    out << fmt::format("run: R0 contribution {} | total infections {} | M {} | {} steps\n",
                       stats.first_generation_infections, stats.total_infections, stats.cluster_size_M,
                       stats.steps_to_extinction);
    return kExitOk;
}

// ---- r0 -----------------------------------------------------------------

struct R0Flags {
    std::vector<double> p_list{1.0, 0.5, 0.25, 0.125, 0.0625};
    std::vector<int> tau_list{1, 2, 3};
    std::vector<std::string> policies{"classical", "quantum-histogram"};
    int runs = 2000;
    int L = 64;
    int N = 4096;
};

int cmd_r0(const std::vector<std::string> &args, const SharedFlags &shared, const R0Flags &flags,
           std::ostream &out) {
    check_threads(shared.threads);
    if (flags.policies.empty()) {
        throw Error(ErrorKind::InvalidConfig, "at least one --policy is required");
    }
    const auto base = epidemic_config(shared, flags.L, flags.N, flags.p_list.front(), flags.tau_list.front(),
                                      flags.policies.front());
    std::vector<analysis::R0Table> tables;
    for (const auto &name : flags.policies) {
        tables.push_back(analysis::r0_sweep(flags.p_list, flags.tau_list, parse_policy_flag(name), base, flags.runs,
                                            shared.seed, shared.threads));
    }
    const fs::path dir = prepare_out_dir(shared.out);
    std::ostringstream r0csv;
    analysis::write_r0_csv(r0csv, tables);
    write_text_file(dir / "r0.csv", r0csv.str());
    std::vector<std::string> outputs{"r0.csv"};

    const auto classical = std::find_if(tables.begin(), tables.end(), [](const analysis::R0Table &t) {
        return t.policy == epidemic::Policy::Classical;
    });
    if (classical != tables.end()) {
        std::vector<analysis::ComparisonRow> rows;
        for (const auto &t : tables) {
            if (t.policy != epidemic::Policy::Classical) {
                const auto cmp = analysis::summarize_comparison(t, *classical);
                rows.insert(rows.end(), cmp.begin(), cmp.end());
            }
        }
        if (!rows.empty()) {
            std::ostringstream cmpcsv;
            analysis::write_comparison_csv(cmpcsv, rows);
            write_text_file(dir / "comparison.csv", cmpcsv.str());
            outputs.emplace_back("comparison.csv");
        }
    }
    ConfigEntries entries = epidemic_entries(shared);
    entries.insert(entries.end(), {{"p-list", join(flags.p_list)},
                                   {"tau-list", join(flags.tau_list)},
                                   {"policy", join(flags.policies)},
                                   {"runs", std::to_string(flags.runs)},
                                   {"L", std::to_string(flags.L)},
                                   {"N", std::to_string(flags.N)}});
    write_manifest(dir, args, "r0", shared.seed, entries, outputs);

    for (const auto &t : tables) {
        out << fmt::format("R0 [{}] rows tau, columns p = {}\n", epidemic::to_string(t.policy), join(t.p_list));
        for (std::size_t ti = 0; ti < t.tau_list.size(); ++ti) {
            std::string row = fmt::format("  tau={}:", t.tau_list[ti]);
            for (std::size_t pi = 0; pi < t.p_list.size(); ++pi) {
                const auto &c = t.cell(ti, pi);
                row += fmt::format(" {:.4f}({:.4f})", c.mean, c.stderr_of_mean);
            }
            out << row << '\n';
        }
    }
    return kExitOk;
}

// ---- cluster ------------------------------------------------------------

struct ClusterFlags {
    std::vector<int> n_list{32, 128, 512, 1024};
    int L = 32;
    double p = 1.0;
    int tau = 3;
    std::string policy = "quantum-histogram";
    int runs = 200;
};

int cmd_cluster(const std::vector<std::string> &args, const SharedFlags &shared, const ClusterFlags &flags,
                std::ostream &out) {
    check_threads(shared.threads);
    if (flags.n_list.empty()) {
        throw Error(ErrorKind::InvalidConfig, "--n-list must not be empty");
    }
    auto base = epidemic_config(shared, flags.L, flags.n_list.front(), flags.p, flags.tau, flags.policy);
    const auto points = analysis::cluster_growth(flags.n_list, base, flags.runs, shared.seed, shared.threads);
    const fs::path dir = prepare_out_dir(shared.out);
    std::ostringstream csv;
    analysis::write_cluster_csv(csv, base, points);
    write_text_file(dir / "cluster.csv", csv.str());
    ConfigEntries entries = epidemic_entries(shared);
    entries.insert(entries.end(), {{"n-list", join(flags.n_list)},
                                   {"L", std::to_string(flags.L)},
                                   {"p", fmt::format("{}", flags.p)},
                                   {"tau", std::to_string(flags.tau)},
                                   {"policy", flags.policy},
                                   {"runs", std::to_string(flags.runs)}});
    write_manifest(dir, args, "cluster", shared.seed, entries, {"cluster.csv"});
    for (const auto &pt : points) {
        out << fmt::format("N={} <M>={:.3f} ({:.3f})\n", pt.N, pt.mean_M, pt.stderr_M);
    }
    return kExitOk;
}

} // namespace

std::map<std::string, std::string> parse_key_value_text(std::string_view text) {
    std::map<std::string, std::string> entries;
    std::size_t line_no = 0;
    for (const std::string_view raw : split(text, '\n')) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
            throw Error(ErrorKind::InvalidConfig, fmt::format("config line {} is not key=value", line_no));
        }
        entries[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
    }
    return entries;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> values;
    for (const std::string_view token : split(text, ',')) {
        values.push_back(parse_complex(token));
    }
    return values;
}

std::string format_complex_list(const std::vector<Complex> &values) {
    std::string s;
    for (const Complex v : values) {
        if (!s.empty()) {
            s += ',';
        }
        s += v.imag() == 0.0 ? fmt::format("{}", v.real()) : fmt::format("{}{:+}i", v.real(), v.imag());
    }
    return s;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum and classical random-walk epidemics on lattices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    SharedFlags shared;

    WalkFlags walk_flags;
    auto *walk = app.add_subcommand("walk", "Evolve a quantum walk and dump position distributions");
    add_core_flags(walk, shared);
    walk->add_option("--geometry", walk_flags.geometry, "cycle:N | line:N | torus:L[xL] | hypercube[:d]")
        ->capture_default_str();
    walk->add_option("--coin", walk_flags.coin, "auto | hadamard | hadamard2 | dft:d | dft3gate | identity:d")
        ->capture_default_str();
    walk->add_option("--steps", walk_flags.steps, "Iterations")->capture_default_str();
    walk->add_option("--initial-position", walk_flags.initial_position, "Start index (default: origin)");
    walk->add_option("--initial-coin", walk_flags.initial_coin, "Coin amplitudes, e.g. 0.7071067811865476,0.7071067811865476i");
    walk->add_flag("--final-only", walk_flags.final_only, "Only write the last distribution");

    RunFlags run_flags;
    auto *run = app.add_subcommand("run", "Run one epidemic realization with snapshots");
    add_core_flags(run, shared);
    add_epidemic_flags(run, shared);
    run->add_option("--L", run_flags.L, "Lattice extent")->capture_default_str();
    run->add_option("--N", run_flags.N, "Agents including the index case")->capture_default_str();
    run->add_option("--p", run_flags.p, "Infection probability")->capture_default_str();
    run->add_option("--tau", run_flags.tau, "Walker lifetime in steps")->capture_default_str();
    run->add_option("--policy", run_flags.policy, "classical | quantum-histogram | quantum-collapse | quantum-statevector")
        ->capture_default_str();
    run->add_option("--initial-x", run_flags.initial_x)->capture_default_str();
    run->add_option("--initial-y", run_flags.initial_y)->capture_default_str();
    run->add_option("--initial-coin", run_flags.initial_coin, "Four coin amplitudes")->capture_default_str();
    run->add_option("--max-steps", run_flags.max_steps, "Tick cap (0: (N+1)*tau)")->capture_default_str();
    run->add_option("--snapshot-every", run_flags.snapshot_every, "PPM frame cadence (0: none)")->capture_default_str();

    R0Flags r0_flags;
    auto *r0 = app.add_subcommand("r0", "Estimate R0 over a (p, tau) grid");
    add_core_flags(r0, shared);
    add_epidemic_flags(r0, shared);
    r0->add_option("--p-list", r0_flags.p_list, "Infection probabilities")->delimiter(',')->capture_default_str();
    r0->add_option("--tau-list", r0_flags.tau_list, "Walker lifetimes")->delimiter(',')->capture_default_str();
    r0->add_option("--policy", r0_flags.policies, "Policies to sweep")->delimiter(',')->capture_default_str();
    r0->add_option("--runs", r0_flags.runs, "Realizations per cell")->capture_default_str();
    r0->add_option("--L", r0_flags.L)->capture_default_str();
    r0->add_option("--N", r0_flags.N)->capture_default_str();

    ClusterFlags cluster_flags;
    auto *cluster = app.add_subcommand("cluster", "Mean visited-cluster size against agent count");
    add_core_flags(cluster, shared);
    add_epidemic_flags(cluster, shared);
    cluster->add_option("--n-list", cluster_flags.n_list, "Agent counts")->delimiter(',')->capture_default_str();
    cluster->add_option("--L", cluster_flags.L)->capture_default_str();
    cluster->add_option("--p", cluster_flags.p)->capture_default_str();
    cluster->add_option("--tau", cluster_flags.tau)->capture_default_str();
    cluster->add_option("--policy", cluster_flags.policy)->capture_default_str();
    cluster->add_option("--runs", cluster_flags.runs)->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Run the built-in golden operator checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }

    try {
        for (auto *sub : {walk, run, r0, cluster}) {
            if (sub->parsed()) {
                apply_config_file(sub, shared.config);
            }
        }
        if (walk->parsed()) {
            return cmd_walk(args, shared, walk_flags, out);
        }
        if (run->parsed()) {
            return cmd_run(args, shared, run_flags, out);
        }
        if (r0->parsed()) {
            return cmd_r0(args, shared, r0_flags, out);
        }
        if (cluster->parsed()) {
            return cmd_cluster(args, shared, cluster_flags, out);
        }
        if (verify->parsed()) {
            const auto report = run_verification();
            print_report(out, report);
            return report.all_passed() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kExitIoFailure : kExitInvalidConfig;
    } catch (const CLI::Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const fs::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitIoFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    return kExitInvalidConfig;
}

} // namespace qwepi::harness
