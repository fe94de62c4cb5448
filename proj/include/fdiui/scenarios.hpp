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

#include <cstddef>
#include <optional>

#include "fdiui/channel.hpp"
#include "fdiui/narrowband.hpp"

namespace fdiui {

/// Trial loops run OpenMP-parallel by default. The serial path is the
/// reference implementation; both fill one per-trial value vector indexed
/// by trial and reduce it in index order, so results are bit-identical
/// regardless of policy or thread count.
enum class Execution { Serial, Parallel };

/// Parameters shared by the four comparison scenarios.
struct ScenarioConfig {
    double mu = 0.5;              // HD uplink time fraction
    double beta_threshold = 1.0;  // uplink-power gate coefficient
    double t_d = 0.1;             // downlink-power gate for the energy split
    double total_power;           // P; per-link power is P/2 unless solved
    double noise_power = 1.0;     // sigma_n^2
    std::size_t trials = 100000;
};

/// Monte Carlo mean with its standard error, plus the closed-form Jensen
/// upper bound where one exists.
struct ScenarioReport {
    double mean_rate;                   // bits/s/Hz
    std::optional<double> jensen_bound; // bits/s/Hz (rates) or per power unit (EE)
    double energy_efficiency;           // mean_rate / total_power
    std::size_t trials_used;
    double std_error;
};

enum class ScenarioCase { Hd, FdIdeal, FdUnsuppressed, FdProposed };

/// Half-duplex baseline: uplink a fraction mu of the time, downlink the
/// rest, each at P/2.
ScenarioReport rate_hd(const ScenarioConfig& config, const FadingSpec& fading,
                       Execution exec = Execution::Parallel);

/// Full duplex with the downlink user hidden from the uplink user (no IUI).
ScenarioReport rate_fd_ideal(const ScenarioConfig& config, const FadingSpec& fading,
                             Execution exec = Execution::Parallel);

/// Full duplex treating the IUI as noise. The Jensen bound uses the
/// exponential-integral closed form of E[|hd|^2 Pd / (|hi|^2 Pu + sigma^2)].
ScenarioReport rate_fd_unsuppressed(const ScenarioConfig& config, const FadingSpec& fading,
                                    Execution exec = Execution::Parallel);

/// Full duplex with counter-injection: per trial the BS suppresses when
/// |hu|^2 > beta sigma^2 / Pu and stays silent otherwise. The bound adds
/// the two empirical conditional branch means under one log each.
ScenarioReport rate_fd_proposed(const ScenarioConfig& config, const FadingSpec& fading,
                                Execution exec = Execution::Parallel);

/// Power the BS spends on the counter-injection signal at the optimal
/// coefficient, E[|h* hu Xu|^2] = |h*|^2 |hu|^2 Pu:
///
///     Pj = Pu^3 |hu|^4 |hi|^2 / ( |hd|^2 (|hu|^2 Pu + sigma^2)^2 )
double counter_injection_power(const LinkRealization& link, double p_u);

/// Solves Pj(Pu) + 2 Pu = P for the symmetric split Pu = Pd under a total
/// budget, safeguarded Newton on the bracket [0, P/2]. Residual below
/// 1e-10 * P; returns exactly P/2 when there is no interference.
PowerPair solve_power_budget(const LinkRealization& link, double total_power,
                             double noise_power);

/// Energy efficiency (mean sum rate / P) of one scenario. FdProposed runs
/// the gated budget split: when |hd|^2 > t_d the cubic is solved and, if
/// the uplink gate also passes, the suppressed-branch rate is used at the
/// solved power; every other path falls back to the P/2 unsuppressed split.
ScenarioReport energy_efficiency(ScenarioCase scenario, const ScenarioConfig& config,
                                 const FadingSpec& fading,
                                 Execution exec = Execution::Parallel);

}  // namespace fdiui
