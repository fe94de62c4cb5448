// fdiui: link-level simulator for BS-assisted inter-user interference suppression
// Copyright (C) 2026 fdiui project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace fdiui::cli {

// Process exit codes of the runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

/// One experiment request: name, resolved parameters, output file, seed.
struct ExperimentSpec {
    std::string experiment;
    std::map<std::string, double> params;
    std::string output_path;
    std::uint64_t seed = 1;
};

bool is_known_experiment(const std::string& name);

/// Defaults for one experiment; the key set is also the set of legal keys.
std::map<std::string, double> default_params(const std::string& experiment);

/// Writes one line per experiment with its parameters and defaults.
void print_experiment_list(std::ostream& os);

/// Runs the experiment and writes its CSV. Returns a process exit code;
/// diagnostics go to the given stream.
int run_experiment(const ExperimentSpec& spec, std::ostream& diagnostics);

}  // namespace fdiui::cli
