// Copyright 2026 The fockfringe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockfringe/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockfringe/analysis.h"
#include "fockfringe/oracle.h"
#include "fockfringe/parallel.h"
#include "fockfringe/records.h"
#include "fockfringe/rng.h"

namespace fockfringe {

namespace {

using Json = nlohmann::ordered_json;

struct CommandSpec {
    Command command;
    const char *name;
    const char *help;
    std::vector<std::string> keys;
};

// Keys appear in canonical order; config.txt follows it.
const std::vector<CommandSpec> &command_specs() {
    static const std::vector<CommandSpec> specs{
        {Command::kShot,
         "shot",
         "Sample one detection record and fit its fringe.",
         {"state", "pair", "d", "D", "seed", "stream", "format", "out"}},
        {Command::kEnsemble,
         "ensemble",
         "Fringe noise over R independent shots of one state.",
         {"state", "pair", "d", "D", "R", "seed", "workers", "out"}},
        {Command::kNoiseCompare,
         "noise-compare",
         "Noise of |d/2, d/2> against the random-phase state.",
         {"pair", "d", "D", "R", "seed", "workers", "out"}},
        {Command::kIdentityCheck,
         "identity-check",
         "Binomial mixture of |j, d-j> noise against random-phase noise.",
         {"pair", "d", "D", "R", "seed", "workers", "out"}},
        {Command::kAsymProfile,
         "asym-profile",
         "Noise of every |j, d-j>, j = 0..d.",
         {"pair", "d", "D", "R", "seed", "workers", "out"}},
        {Command::kVerifyOracle,
         "verify-oracle",
         "Compare the mixture marginal with the ladder-operator density.",
         {"pair", "n-max", "d-max", "tuples", "seed", "workers", "out"}},
        {Command::kDensityTable,
         "density-table",
         "Exact, brute-force and phase-averaged densities on a grid.",
         {"state", "pair", "d", "grid", "workers", "out"}},
        {Command::kAverageDensity,
         "average-density",
         "Bin-wise mean of R single-shot histograms.",
         {"state", "pair", "d", "D", "R", "seed", "workers", "out"}},
    };
    return specs;
}

const CommandSpec &spec_for(Command command) {
    for (const auto &s : command_specs()) {
        if (s.command == command) {
            return s;
        }
    }
    throw std::logic_error("unregistered command");
}

bool has_key(const CommandSpec &spec, const std::string &key) {
    return std::find(spec.keys.begin(), spec.keys.end(), key) != spec.keys.end();
}

std::string key_help(const std::string &key) {
    static const std::map<std::string, std::string> help{
        {"state", "fock:n1,n2 | phase:d | phase:d,random | phase:d,<phi>"},
        {"pair", "plane-wave | split-box | fourier:<file>"},
        {"d", "number of detections"},
        {"D", "histogram bins"},
        {"R", "realizations"},
        {"seed", "master seed (default: FOCKFRINGE_SEED)"},
        {"stream", "stream index of the shot"},
        {"format", "records format: csv | jsonl"},
        {"grid", "grid points per axis"},
        {"n-max", "largest n checked"},
        {"d-max", "largest d checked"},
        {"tuples", "random position tuples per (n, d)"},
        {"workers", "worker threads"},
        {"out", "output directory"},
    };
    return help.at(key);
}

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

template <typename T>
T parse_number(const std::string &key, const std::string &text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("--" + key + " expects a non-negative integer, got '" + text + "'");
    }
    return value;
}

int parse_count(const std::string &key, const std::string &text, int minimum) {
    if (!text.empty() && text[0] == '-') {
        throw UsageError("--" + key + " must be at least " + std::to_string(minimum) + ", got " + text);
    }
    int value = parse_number<int>(key, text);
    if (value < minimum) {
        throw UsageError("--" + key + " must be at least " + std::to_string(minimum) + ", got " + text);
    }
    return value;
}

Json summary_json(const Summary &s) {
    Json j;
    j["mean"] = s.mean;
    j["stderr"] = s.std_error;
    return j;
}

Json params_json(const RunConfig &config) {
    Json j = Json::object();
    for (const auto &[k, v] : config.resolved) {
        j[k] = v;
    }
    return j;
}

class OutputDir {
  public:
    explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        if (ec) {
            throw UsageError("cannot create output directory " + root_.string() + ": " + ec.message());
        }
    }

    void write(const std::string &name, const std::string &content) {
        std::ofstream f(root_ / name, std::ios::binary);
        f << content;
        f.close();
        if (!f) {
            throw UsageError("cannot write " + (root_ / name).string());
        }
        files_.push_back(name);
    }

    void write_json(const std::string &name, const Json &j) { write(name, j.dump(2) + "\n"); }

    const std::vector<std::string> &files() const { return files_; }

  private:
    std::filesystem::path root_;
    std::vector<std::string> files_;
};

std::string realizations_csv(const std::vector<Realization> &rows) {
    std::ostringstream s;
    s << "stream,chi2,phi_star\n";
    for (const auto &r : rows) {
        s << r.stream << ',' << format_real(r.fit.chi2) << ',' << format_real(r.fit.phi) << '\n';
    }
    return s.str();
}

int run_shot_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    auto pair = mode_pair_from_tag(config.pair);
    auto rec = run_shot(*config.state, pair, config.d, config.seed, config.stream);
    if (config.format == "jsonl") {
        std::ostringstream s;
        write_records_jsonl(s, std::span<const DetectionRecord>(&rec, 1));
        dir.write("records.jsonl", s.str());
    } else {
        std::ostringstream s;
        s << "index,position\n";
        for (std::size_t i = 0; i < rec.positions.size(); i++) {
            s << i << ',' << format_real(rec.positions[i]) << '\n';
        }
        dir.write("records.csv", s.str());
    }
    auto h = build_histogram(rec, config.bins);
    std::ostringstream hist;
    hist << "bin_center,count\n";
    for (int i = 0; i < h.bins; i++) {
        hist << format_real(h.center(i)) << ',' << h.counts[i] << '\n';
    }
    dir.write("histogram.csv", hist.str());

    auto fit = chi2_noise(h, pair);
    std::ostringstream fits;
    fits << "chi2,phi_star,visibility\n";
    fits << format_real(fit.chi2) << ',' << format_real(fit.phi) << ',';
    if (pair.kind() == ModePair::Kind::kPlaneWave) {
        fits << format_real(visibility(h, pair));
    }
    fits << '\n';
    dir.write("fits.csv", fits.str());
    log << "chi2 = " << format_real(fit.chi2) << ", phi* = " << format_real(fit.phi) << "\n";
    return kExitOk;
}

int run_ensemble_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    auto pair = mode_pair_from_tag(config.pair);
    auto report = mean_noise(
        *config.state, pair, config.d, config.bins, config.realizations, config.seed, {config.workers, 0});
    dir.write("realizations.csv", realizations_csv(report.per_shot));
    Json j = summary_json(report.chi2);
    j["R"] = config.realizations;
    j["params"] = params_json(config);
    dir.write_json("summary.json", j);
    log << "mean chi2 = " << format_real(report.chi2.mean) << " +- " << format_real(report.chi2.std_error) << "\n";
    return kExitOk;
}

int run_noise_compare_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    constexpr double kThreshold = 3;
    auto pair = mode_pair_from_tag(config.pair);
    auto cmp = noise_comparison(config.d, config.bins, config.realizations, pair, config.seed, config.workers);
    dir.write("fock_realizations.csv", realizations_csv(cmp.fock.per_shot));
    dir.write("phase_realizations.csv", realizations_csv(cmp.phase.per_shot));
    bool pass = std::abs(cmp.z) < kThreshold;
    Json j;
    j["fock"] = summary_json(cmp.fock.chi2);
    j["phase"] = summary_json(cmp.phase.chi2);
    j["z"] = cmp.z;
    j["threshold"] = kThreshold;
    j["pass"] = pass;
    j["R"] = config.realizations;
    j["params"] = params_json(config);
    dir.write_json("summary.json", j);
    log << "fock " << format_real(cmp.fock.chi2.mean) << ", phase " << format_real(cmp.phase.chi2.mean)
        << ", z = " << format_real(cmp.z) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_identity_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    constexpr double kThreshold = 4;
    auto pair = mode_pair_from_tag(config.pair);
    auto rep = noise_identity_check(config.d, config.bins, config.realizations, pair, config.seed, config.workers);
    bool pass = std::abs(rep.z) < kThreshold;
    Json j;
    j["lhs"] = summary_json(rep.lhs);
    j["rhs"] = summary_json(rep.rhs);
    j["z"] = rep.z;
    j["threshold"] = kThreshold;
    j["pass"] = pass;
    j["R"] = config.realizations;
    j["params"] = params_json(config);
    dir.write_json("summary.json", j);
    log << "lhs " << format_real(rep.lhs.mean) << ", rhs " << format_real(rep.rhs.mean) << ", z = "
        << format_real(rep.z) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_asym_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    auto pair = mode_pair_from_tag(config.pair);
    auto profile = asym_noise_profile(config.d, config.bins, config.realizations, pair, config.seed, config.workers);
    std::ostringstream csv;
    csv << "j,mean,stderr\n";
    for (const auto &row : profile.rows) {
        csv << row.j << ',' << format_real(row.chi2.mean) << ',' << format_real(row.chi2.std_error) << '\n';
    }
    dir.write("profile.csv", csv.str());
    double endpoint_z = z_score(profile.rows.front().chi2, profile.rows[config.d / 2].chi2);
    Json j;
    j["endpoint_z"] = endpoint_z;
    j["R"] = config.realizations;
    j["params"] = params_json(config);
    dir.write_json("summary.json", j);
    log << "endpoint vs center z = " << format_real(endpoint_z) << "\n";
    return kExitOk;
}

int run_verify_oracle_command(const RunConfig &config, OutputDir &dir, std::ostream &log) {
    constexpr double kTolerance = 1e-10;
    std::vector<std::string> tags;
    if (config.pair == "all") {
        tags = {"plane-wave", "split-box"};
    } else {
        tags = {config.pair};
    }
    struct Case {
        std::string tag;
        int n;
        int d;
    };
    std::vector<Case> cases;
    for (const auto &tag : tags) {
        for (int n = 1; n <= config.n_max; n++) {
            for (int d = 1; d <= std::min(2 * n, config.d_max); d++) {
                cases.push_back({tag, n, d});
            }
        }
    }
    std::vector<ModePair> pairs;
    for (const auto &tag : tags) {
        pairs.push_back(mode_pair_from_tag(tag));
    }
    auto errors = parallel_map<double>(cases.size(), config.workers, [&](std::size_t i) {
        const auto &c = cases[i];
        const auto &pair = pairs[std::find(tags.begin(), tags.end(), c.tag) - tags.begin()];
        Stream rng(config.seed, i);
        std::vector<double> xs(c.d);
        double worst = 0;
        for (int t = 0; t < config.tuples; t++) {
            for (auto &x : xs) {
                x = rng.uniform();
            }
            double exact = fock_marginal_density(c.n, c.d, xs, pair);
            double brute = fock_marginal_bruteforce(c.n, c.d, xs, pair);
            worst = std::max(worst, std::abs(exact - brute) / std::max(std::abs(exact), 1e-300));
        }
        return worst;
    });
    std::ostringstream csv;
    csv << "pair,n,d,max_rel_error\n";
    double worst = 0;
    for (std::size_t i = 0; i < cases.size(); i++) {
        csv << cases[i].tag << ',' << cases[i].n << ',' << cases[i].d << ',' << format_real(errors[i]) << '\n';
        worst = std::max(worst, errors[i]);
    }
    dir.write("oracle_errors.csv", csv.str());
    bool pass = worst <= kTolerance;
    Json j;
    j["max_rel_error"] = worst;
    j["tolerance"] = kTolerance;
    j["cases"] = cases.size();
    j["pass"] = pass;
    j["params"] = params_json(config);
    dir.write_json("summary.json", j);
    log << "max relative error " << format_real(worst) << (pass ? " (pass)" : " (FAIL)") << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_density_table_command(const RunConfig &config, OutputDir &dir, std::ostream &) {
    auto pair = mode_pair_from_tag(config.pair);
    const auto &fock = std::get<FockState>(*config.state);
    int d = config.d;
    std::size_t rows = 1;
    for (int k = 0; k < d; k++) {
        rows *= static_cast<std::size_t>(config.grid);
    }
    auto lines = parallel_map<std::string>(rows, config.workers, [&](std::size_t r) {
        // Row index in base `grid`, x1 varying slowest.
        std::vector<double> xs(d);
        std::size_t rem = r;
        for (int k = d - 1; k >= 0; k--) {
            xs[k] = (static_cast<double>(rem % config.grid) + 0.5) / config.grid;
            rem /= config.grid;
        }
        std::string line;
        for (double x : xs) {
            line += format_real(x) + ',';
        }
        line += format_real(fock_marginal_density(fock.n1, d, xs, pair)) + ',';
        line += format_real(fock_marginal_bruteforce(fock.n1, d, xs, pair)) + ',';
        line += format_real(approx_density(d, xs, pair)) + '\n';
        return line;
    });
    std::string csv;
    for (int k = 1; k <= d; k++) {
        csv += "x" + std::to_string(k) + ',';
    }
    csv += "exact,bruteforce,approx\n";
    for (const auto &line : lines) {
        csv += line;
    }
    dir.write("density.csv", csv);
    return kExitOk;
}

int run_average_density_command(const RunConfig &config, OutputDir &dir, std::ostream &) {
    auto pair = mode_pair_from_tag(config.pair);
    auto avg = average_density(
        *config.state, pair, config.d, config.bins, config.realizations, config.seed, config.workers);
    std::ostringstream csv;
    csv << "bin_center,mean,stderr\n";
    for (int i = 0; i < avg.bins; i++) {
        csv << format_real((i + 0.5) / avg.bins) << ',' << format_real(avg.per_bin[i].mean) << ','
            << format_real(avg.per_bin[i].std_error) << '\n';
    }
    dir.write("average_density.csv", csv.str());
    return kExitOk;
}

// Thrown by the parser when help or the version was requested.
struct EarlyExit {
    std::string text;
};

}  // namespace

std::string command_name(Command command) { return spec_for(command).name; }

std::map<std::string, std::string> parse_config_text(const std::string &text) {
    std::map<std::string, std::string> values;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        number++;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(number) + " is not key=value: " + t);
        }
        auto key = trim(std::string_view(t).substr(0, eq));
        auto value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) {
            throw UsageError("config line " + std::to_string(number) + " has an empty key");
        }
        if (!values.emplace(key, value).second) {
            throw UsageError("config key '" + key + "' given twice");
        }
    }
    return values;
}

RunConfig resolve_config(
    Command command,
    const std::map<std::string, std::string> &file_values,
    const std::map<std::string, std::string> &flag_values,
    const std::optional<std::string> &env_seed) {
    const auto &spec = spec_for(command);
    std::map<std::string, std::string> v;
    for (const auto &[key, value] : file_values) {
        if (!has_key(spec, key)) {
            throw UsageError("config key '" + key + "' does not apply to " + spec.name);
        }
        v[key] = value;
    }
    for (const auto &[key, value] : flag_values) {
        if (!has_key(spec, key)) {
            throw UsageError("--" + key + " does not apply to " + spec.name);
        }
        v[key] = value;
    }
    auto get = [&](const std::string &key) -> std::optional<std::string> {
        auto it = v.find(key);
        if (it == v.end()) {
            return std::nullopt;
        }
        return it->second;
    };

    RunConfig c;
    c.command = command;
    if (command == Command::kVerifyOracle) {
        c.pair = "all";
    }

    if (has_key(spec, "state")) {
        auto text = get("state");
        if (!text) {
            throw UsageError(std::string(spec.name) + " needs --state");
        }
        try {
            c.state = parse_state(*text);
        } catch (const ArgumentError &e) {
            throw UsageError(e.what());
        }
    }
    if (auto p = get("pair")) {
        c.pair = *p;
    }
    if (!(command == Command::kVerifyOracle && c.pair == "all")) {
        try {
            mode_pair_from_tag(c.pair);
        } catch (const ArgumentError &e) {
            throw UsageError(e.what());
        }
    }

    if (has_key(spec, "d")) {
        if (auto text = get("d")) {
            c.d = parse_count("d", *text, 1);
        } else if (c.state) {
            c.d = max_detections(*c.state);
        } else {
            throw UsageError(std::string(spec.name) + " needs --d");
        }
    }
    if (auto t = get("D")) {
        c.bins = parse_count("D", *t, 2);
    }
    if (auto t = get("R")) {
        c.realizations = parse_count("R", *t, 2);
    }
    if (auto t = get("stream")) {
        c.stream = parse_number<std::uint64_t>("stream", *t);
    }
    if (auto t = get("workers")) {
        c.workers = parse_count("workers", *t, 1);
    }
    if (auto t = get("out")) {
        if (t->empty()) {
            throw UsageError("--out is empty");
        }
        c.out = *t;
    }
    if (auto t = get("format")) {
        if (*t != "csv" && *t != "jsonl") {
            throw UsageError("--format must be csv or jsonl, got '" + *t + "'");
        }
        c.format = *t;
    }
    if (auto t = get("grid")) {
        c.grid = parse_count("grid", *t, 1);
    }
    if (auto t = get("n-max")) {
        c.n_max = parse_count("n-max", *t, 1);
    }
    if (auto t = get("d-max")) {
        c.d_max = parse_count("d-max", *t, 1);
    }
    if (auto t = get("tuples")) {
        c.tuples = parse_count("tuples", *t, 1);
    }
    if (has_key(spec, "seed")) {
        auto text = get("seed");
        if (!text) {
            text = env_seed;
        }
        if (!text) {
            throw UsageError(std::string(spec.name) + " needs --seed or FOCKFRINGE_SEED");
        }
        c.seed = parse_number<std::uint64_t>("seed", *text);
    }

    // Command-specific constraints.
    if (c.state) {
        int limit = max_detections(*c.state);
        if (c.d > limit) {
            throw UsageError(
                "d=" + std::to_string(c.d) + " exceeds the " + std::to_string(limit) + " particles of " +
                format_state(*c.state));
        }
        if (std::holds_alternative<PhaseState>(*c.state) && c.d != limit) {
            throw UsageError("a phase state is measured completely; d must be " + std::to_string(limit));
        }
    }
    switch (command) {
        case Command::kNoiseCompare:
        case Command::kAsymProfile:
            if (c.d % 2 != 0) {
                throw UsageError(std::string(spec.name) + " needs an even d");
            }
            break;
        case Command::kIdentityCheck:
            if (c.d % 2 != 0 || c.d < 4) {
                throw UsageError("identity-check needs an even d >= 4");
            }
            break;
        case Command::kAverageDensity:
            if (c.realizations < 10) {
                throw UsageError("average-density needs R >= 10");
            }
            break;
        case Command::kVerifyOracle:
            if (c.d_max > kMaxEnumeratedParticles) {
                throw UsageError("--d-max is limited to " + std::to_string(kMaxEnumeratedParticles));
            }
            if (c.n_max > kMaxBruteforceOccupation) {
                throw UsageError("--n-max is limited to " + std::to_string(kMaxBruteforceOccupation));
            }
            break;
        case Command::kDensityTable: {
            const auto *fock = std::get_if<FockState>(&*c.state);
            if (fock == nullptr || fock->n1 != fock->n2) {
                throw UsageError("density-table needs a symmetric state fock:n,n");
            }
            if (fock->n1 > kMaxBruteforceOccupation) {
                throw UsageError("density-table is limited to n <= " + std::to_string(kMaxBruteforceOccupation));
            }
            if (c.d > kMaxEnumeratedParticles) {
                throw UsageError("density-table is limited to d <= " + std::to_string(kMaxEnumeratedParticles));
            }
            double rows = std::pow(static_cast<double>(c.grid), c.d);
            if (rows > 1e6) {
                throw UsageError("density-table would have more than 1e6 rows; lower --grid or --d");
            }
            break;
        }
        default:
            break;
    }

    // Result-determining keys only; workers and out change nothing in the data.
    for (const auto &key : spec.keys) {
        if (key == "workers" || key == "out") {
            continue;
        }
        std::string value;
        if (key == "state") {
            value = format_state(*c.state);
        } else if (key == "pair") {
            value = c.pair;
        } else if (key == "d") {
            value = std::to_string(c.d);
        } else if (key == "D") {
            value = std::to_string(c.bins);
        } else if (key == "R") {
            value = std::to_string(c.realizations);
        } else if (key == "seed") {
            value = std::to_string(c.seed);
        } else if (key == "stream") {
            value = std::to_string(c.stream);
        } else if (key == "format") {
            value = c.format;
        } else if (key == "grid") {
            value = std::to_string(c.grid);
        } else if (key == "n-max") {
            value = std::to_string(c.n_max);
        } else if (key == "d-max") {
            value = std::to_string(c.d_max);
        } else if (key == "tuples") {
            value = std::to_string(c.tuples);
        }
        c.resolved.emplace_back(key, value);
    }
    return c;
}

RunConfig parse_command_line(const std::vector<std::string> &args, const std::optional<std::string> &env_seed) {
    CLI::App app{"Single-shot position measurements of two-mode boson states.", "fockfringe"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);

    std::map<Command, std::map<std::string, std::string>> storage;
    std::map<Command, std::string> config_paths;
    std::vector<std::pair<Command, CLI::App *>> subs;
    for (const auto &spec : command_specs()) {
        auto *sub = app.add_subcommand(spec.name, spec.help);
        for (const auto &key : spec.keys) {
            sub->add_option("--" + key, storage[spec.command][key], key_help(key));
        }
        sub->add_option("--config", config_paths[spec.command], "flat key=value file; flags override it");
        subs.emplace_back(spec.command, sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw EarlyExit{app.help()};
    } catch (const CLI::CallForAllHelp &) {
        throw EarlyExit{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion &) {
        throw EarlyExit{std::string(kVersion) + "\n"};
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    for (const auto &[command, sub] : subs) {
        if (!sub->parsed()) {
            continue;
        }
        std::map<std::string, std::string> flags;
        for (const auto &key : spec_for(command).keys) {
            if (sub->get_option("--" + key)->count() > 0) {
                flags[key] = storage[command][key];
            }
        }
        std::map<std::string, std::string> file_values;
        if (sub->get_option("--config")->count() > 0) {
            std::ifstream f(config_paths[command]);
            if (!f) {
                throw UsageError("cannot read config file " + config_paths[command]);
            }
            std::stringstream text;
            text << f.rdbuf();
            file_values = parse_config_text(text.str());
        }
        return resolve_config(command, file_values, flags, env_seed);
    }
    throw UsageError("no command given");
}

int execute(const RunConfig &config, std::ostream &log) {
    auto start = std::chrono::steady_clock::now();
    OutputDir dir(config.out);
    int code = kExitOk;
    switch (config.command) {
        case Command::kShot:
            code = run_shot_command(config, dir, log);
            break;
        case Command::kEnsemble:
            code = run_ensemble_command(config, dir, log);
            break;
        case Command::kNoiseCompare:
            code = run_noise_compare_command(config, dir, log);
            break;
        case Command::kIdentityCheck:
            code = run_identity_command(config, dir, log);
            break;
        case Command::kAsymProfile:
            code = run_asym_command(config, dir, log);
            break;
        case Command::kVerifyOracle:
            code = run_verify_oracle_command(config, dir, log);
            break;
        case Command::kDensityTable:
            code = run_density_table_command(config, dir, log);
            break;
        case Command::kAverageDensity:
            code = run_average_density_command(config, dir, log);
            break;
    }

    std::string config_text;
    for (const auto &[k, v] : config.resolved) {
        config_text += k + "=" + v + "\n";
    }
    dir.write("config.txt", config_text);

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto config_file = (std::filesystem::path(config.out) / "config.txt").string();
    Json m;
    m["command"] = command_name(config.command);
    m["version"] = kVersion;
    m["config"] = params_json(config);
    m["config"]["workers"] = std::to_string(config.workers);
    m["config"]["out"] = config.out;
    m["replay"] = "fockfringe " + command_name(config.command) + " --config " + config_file + " --out " + config.out;
    m["outputs"] = dir.files();
    m["exit_code"] = code;
    m["wall_time_seconds"] = wall;
    dir.write_json("manifest.json", m);
    return code;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::optional<std::string> env_seed;
    if (const char *s = std::getenv("FOCKFRINGE_SEED"); s != nullptr && *s != '\0') {
        env_seed = s;
    }
    RunConfig config;
    try {
        config = parse_command_line(args, env_seed);
    } catch (const EarlyExit &e) {
        out << e.text;
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n(run with --help for the list of commands and flags)\n";
        return kExitUsage;
    }
    try {
        return execute(config, out);
    } catch (const ArgumentError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}

}  // namespace fockfringe
