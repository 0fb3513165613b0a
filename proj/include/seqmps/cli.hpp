// Copyright 2026 The seqmps Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file cli.hpp
 * Command-line front end: gate files, angle and range parsing, run
 * configurations and the CSV-emitting commands.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seqmps/densemat.hpp"
#include "seqmps/gates.hpp"

namespace seqmps::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputDirEnv = "SEQMPS_OUTPUT_DIR";

/// Parses decimal radians or sums of pi multiples such as "pi/2", "-3pi/4",
/// "2*pi", "pi-0.1". Throws InputError on anything else.
double parse_angle(std::string_view text);

/// Comma-separated angles.
std::vector<double> parse_angle_list(std::string_view text);

/// "re" or "re,im".
cplx parse_complex(std::string_view text);

/// "a:b" (every integer), "a:b:step", or a comma list; ascending output.
std::vector<std::size_t> parse_size_range(std::string_view text);

/// Gate from a parsed gate file: {"family": tag, "params": [...]} or
/// {"matrix": [[[re, im] x4] x4]}.
Gate gate_from_json(const nlohmann::json &j);
Gate load_gate_file(const std::string &path);
/// Matrix form of a gate, suitable for gate_from_json.
nlohmann::json gate_to_json(const Gate &g);

struct RunConfig {
    std::string command;
    /// Family tag; commands that need a gate require it or gate_file.
    std::string gate;
    /// One entry per --params occurrence; each holds angle expressions.
    std::vector<std::string> params;
    std::string gate_file;
    /// Command defaults apply when unset: (1, 0), or (1, 1)/sqrt 2 for fig3.
    std::optional<std::string> c0;
    std::optional<std::string> c1;
    std::optional<std::size_t> n;
    std::string n_range;
    std::string bloch = "0,0,1";
    std::optional<std::string> theta;
    std::string chi_t;
    /// Seed or seed range for the random family when params are absent.
    std::string seed = "0";
    double tol = 1e-8;
    std::string out;

    [[nodiscard]] nlohmann::json to_json() const;
};

struct CommandResult {
    /// CSV text, starting with a '#' line holding the configuration.
    std::string csv;
    /// Set when a checked quantity missed its tolerance (exit code 3).
    bool tolerance_failure = false;
};

CommandResult run_command(const RunConfig &config);

/// Full command-line entry point. Writes CSV to --out, to
/// $SEQMPS_OUTPUT_DIR/<command>.csv, or to out; diagnostics go to err.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// %.17g formatting used for every number in the CSV output.
std::string format_double(double x);

} // namespace seqmps::cli
