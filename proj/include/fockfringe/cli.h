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

// Command line front end. Parsing, validation and execution are separate so
// tests can drive each piece without spawning processes.

#ifndef FOCKFRINGE_CLI_H
#define FOCKFRINGE_CLI_H

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fockfringe/errors.h"
#include "fockfringe/state.h"

namespace fockfringe {

constexpr const char *kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

/// Bad command line or config file.
struct UsageError : ArgumentError {
    using ArgumentError::ArgumentError;
};

enum class Command {
    kShot,
    kEnsemble,
    kNoiseCompare,
    kIdentityCheck,
    kAsymProfile,
    kVerifyOracle,
    kDensityTable,
    kAverageDensity,
};

std::string command_name(Command command);

/// Fully resolved run parameters. `resolved` lists the keys that determine the
/// results, in canonical order, and is what config.txt stores. Scheduling keys
/// (workers, out) are kept out of it.
struct RunConfig {
    Command command = Command::kShot;
    std::optional<StateDescriptor> state;
    std::string pair = "plane-wave";
    int d = 0;
    int bins = 20;
    int realizations = 1000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    int workers = 1;
    std::string out = "fockfringe-out";
    std::string format = "csv";
    int grid = 8;
    int n_max = 4;
    int d_max = 6;
    int tuples = 200;
    std::vector<std::pair<std::string, std::string>> resolved;
};

/// Flat key=value text. Blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> parse_config_text(const std::string &text);

/// Merges config-file values with flags (flags win), fills defaults and
/// validates. `env_seed` is the FOCKFRINGE_SEED fallback. Throws UsageError.
RunConfig resolve_config(
    Command command,
    const std::map<std::string, std::string> &file_values,
    const std::map<std::string, std::string> &flag_values,
    const std::optional<std::string> &env_seed);

/// Parses argv-style arguments (without the program name).
RunConfig parse_command_line(const std::vector<std::string> &args, const std::optional<std::string> &env_seed);

/// Runs the command and writes its outputs, config.txt and manifest.json into
/// config.out. Returns an exit code.
int execute(const RunConfig &config, std::ostream &log);

/// Whole program: parse, execute, report errors. Returns an exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace fockfringe

#endif  // FOCKFRINGE_CLI_H
