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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiments.hpp"

namespace {

using fdiui::cli::ExperimentSpec;
using fdiui::cli::kExitIo;
using fdiui::cli::kExitUsage;

// Parses "key=value" into the spec's parameter map.
bool add_param(ExperimentSpec& spec, const std::string& item) {
    const auto pos = item.find('=');
    if (pos == std::string::npos || pos == 0) {
        return false;
    }
    const std::string key = item.substr(0, pos);
    const std::string text = item.substr(pos + 1);
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        return false;
    }
    spec.params[key] = value;
    return true;
}

// Flat key=value config file; '#' starts a comment.
int load_config(ExperimentSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return kExitIo;
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::string compact;
        for (char c : line) {
            if (c != ' ' && c != '\t' && c != '\r') {
                compact += c;
            }
        }
        if (compact.empty()) {
            continue;
        }
        if (!add_param(spec, compact)) {
            std::cerr << "error: bad config line '" << line << "'\n";
            return kExitUsage;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fdiui: full-duplex inter-user interference suppression experiments"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run an experiment and write its CSV");
    std::string experiment;
    std::string out_path;
    std::string config_path;
    std::vector<std::string> param_items;
    std::uint64_t seed = 1;
    run->add_option("experiment", experiment, "Experiment name (see 'list')")->required();
    run->add_option("--param", param_items, "Override one parameter, key=value")
        ->take_all();
    run->add_option("--config", config_path, "Key=value parameter file");
    run->add_option("--out", out_path, "Output CSV path")->required();
    run->add_option("--seed", seed, "Monte Carlo seed");

    auto* list = app.add_subcommand("list", "List experiments and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (list->parsed()) {
        fdiui::cli::print_experiment_list(std::cout);
        return 0;
    }

    if (!fdiui::cli::is_known_experiment(experiment)) {
        std::cerr << "error: unknown experiment '" << experiment << "' (try 'list')\n";
        return kExitUsage;
    }

    ExperimentSpec spec;
    spec.experiment = experiment;
    spec.output_path = out_path;
    spec.seed = seed;
    if (!config_path.empty()) {
        const int rc = load_config(spec, config_path);
        if (rc != 0) {
            return rc;
        }
    }
    for (const std::string& item : param_items) {
        if (!add_param(spec, item)) {
            std::cerr << "error: bad --param '" << item << "', expected key=value\n";
            return kExitUsage;
        }
    }
    return fdiui::cli::run_experiment(spec, std::cerr);
}
