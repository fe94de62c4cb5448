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
//
// Times the serial reference against the OpenMP kernels on the Monte Carlo
// scenario engines and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "fdiui/scenarios.hpp"

using namespace fdiui;

namespace {

double time_once(const std::function<double()>& fn, double* result) {
    const auto start = std::chrono::steady_clock::now();
    *result = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void compare(const char* name, std::size_t trials,
             const std::function<double(Execution)>& run) {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double t_serial = time_once([&] { return run(Execution::Serial); }, &serial_value);
    const double t_parallel =
        time_once([&] { return run(Execution::Parallel); }, &parallel_value);
    const bool identical = serial_value == parallel_value;
    std::printf("%-22s %10zu trials  serial %8.3f s  openmp %8.3f s  speedup %5.2fx  %s\n",
                name, trials, t_serial, t_parallel, t_serial / t_parallel,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("OpenMP max threads: %d\n", omp_get_max_threads());

    FadingSpec fading;
    fading.seed = 7;

    ScenarioConfig config;
    config.total_power = 20.0;
    config.trials = 2000000;

    compare("rate_fd_proposed", config.trials, [&](Execution exec) {
        return rate_fd_proposed(config, fading, exec).mean_rate;
    });
    compare("rate_fd_unsuppressed", config.trials, [&](Execution exec) {
        return rate_fd_unsuppressed(config, fading, exec).mean_rate;
    });

    ScenarioConfig ee_config;
    ee_config.total_power = 100.0;
    ee_config.trials = 500000;
    compare("energy fd_proposed", ee_config.trials, [&](Execution exec) {
        return energy_efficiency(ScenarioCase::FdProposed, ee_config, fading, exec)
            .energy_efficiency;
    });
    return 0;
}
