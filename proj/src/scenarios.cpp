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

#include "fdiui/scenarios.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "fdiui/errors.hpp"
#include "fdiui/specfun.hpp"
#include "fdiui/stats.hpp"

namespace fdiui {
namespace {

double log2_1p(double x) {
    return std::log1p(x) / std::numbers::ln2;
}

void check_config(const ScenarioConfig& config) {
    if (config.trials == 0) {
        throw EmptyRequestError("scenario: trials must be at least 1");
    }
    if (!(config.mu >= 0.0 && config.mu <= 1.0)) {
        throw DomainError("scenario: mu must lie in [0, 1]");
    }
    if (!(config.beta_threshold >= 0.0)) {  // +inf allowed: gate never opens
        throw DomainError("scenario: beta_threshold must be non-negative");
    }
    detail::check_non_negative(config.t_d, "t_d");
    detail::check_positive(config.total_power, "total_power");
    detail::check_positive(config.noise_power, "noise_power");
}

void check_fading(const FadingSpec& fading) {
    detail::check_positive(fading.variance_uplink, "variance_uplink");
    detail::check_positive(fading.variance_downlink, "variance_downlink");
    detail::check_positive(fading.variance_interference, "variance_interference");
}

// Squared channel gains of one trial draw.
struct ChannelPowers {
    double uplink;
    double downlink;
    double interference;
};

ChannelPowers draw_powers(const FadingSpec& fading, std::uint64_t trial, double noise_power) {
    const LinkRealization link = sample_link(fading, trial, noise_power, ComplexGain{0.0});
    return {std::norm(link.uplink), std::norm(link.downlink), std::norm(link.interference)};
}

// Fills out[i] = fn(i) for i in [0, n). The parallel kernel and the serial
// reference write the same per-trial values (counter-based RNG keyed by the
// trial index), so both paths are bit-identical after the ordered reduction.
template <typename Fn>
std::vector<double> run_trials(std::size_t n, Execution exec, Fn&& fn) {
    std::vector<double> out(n);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
        }
    } else {
        for (std::uint64_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
    }
    return out;
}

ScenarioReport make_report(const std::vector<double>& rates, std::optional<double> bound,
                           double total_power) {
    const MeanStdErr stats = mean_std_error(rates);
    ScenarioReport report;
    report.mean_rate = stats.mean;
    report.jensen_bound = bound;
    report.energy_efficiency = stats.mean / total_power;
    report.trials_used = rates.size();
    report.std_error = stats.std_error;
    return report;
}

double suppressed_downlink_sinr(const ChannelPowers& cp, double p_u, double p_d, double s2) {
    return cp.downlink * p_d / (cp.interference * p_u * s2 / (cp.uplink * p_u + s2) + s2);
}

double unsuppressed_downlink_sinr(const ChannelPowers& cp, double p_u, double p_d, double s2) {
    return cp.downlink * p_d / (cp.interference * p_u + s2);
}

double fallback_rate(const ChannelPowers& cp, double total_power, double s2) {
    const double half = total_power / 2.0;
    return log2_1p(cp.uplink * half / s2) +
           log2_1p(unsuppressed_downlink_sinr(cp, half, half, s2));
}

}  // namespace

ScenarioReport rate_hd(const ScenarioConfig& config, const FadingSpec& fading, Execution exec) {
    check_config(config);
    check_fading(fading);
    const double half = config.total_power / 2.0;
    const double s2 = config.noise_power;
    const double mu = config.mu;

    const auto rates = run_trials(config.trials, exec, [&](std::uint64_t i) {
        const ChannelPowers cp = draw_powers(fading, i, s2);
        return mu * log2_1p(cp.uplink * half / s2) +
               (1.0 - mu) * log2_1p(cp.downlink * half / s2);
    });
    const double bound = mu * log2_1p(fading.variance_uplink * half / s2) +
                         (1.0 - mu) * log2_1p(fading.variance_downlink * half / s2);
    return make_report(rates, bound, config.total_power);
}

ScenarioReport rate_fd_ideal(const ScenarioConfig& config, const FadingSpec& fading,
                             Execution exec) {
    check_config(config);
    check_fading(fading);
    const double half = config.total_power / 2.0;
    const double s2 = config.noise_power;

    const auto rates = run_trials(config.trials, exec, [&](std::uint64_t i) {
        const ChannelPowers cp = draw_powers(fading, i, s2);
        return log2_1p(cp.uplink * half / s2) + log2_1p(cp.downlink * half / s2);
    });
    const double bound = log2_1p(fading.variance_uplink * half / s2) +
                         log2_1p(fading.variance_downlink * half / s2);
    return make_report(rates, bound, config.total_power);
}

ScenarioReport rate_fd_unsuppressed(const ScenarioConfig& config, const FadingSpec& fading,
                                    Execution exec) {
    check_config(config);
    check_fading(fading);
    const double half = config.total_power / 2.0;
    const double s2 = config.noise_power;

    const auto rates = run_trials(config.trials, exec, [&](std::uint64_t i) {
        const ChannelPowers cp = draw_powers(fading, i, s2);
        return log2_1p(cp.uplink * half / s2) +
               log2_1p(unsuppressed_downlink_sinr(cp, half, half, s2));
    });
    // E[|hd|^2 Pd / (|hi|^2 Pu + s2)] = (vd Pd / (vi Pu)) e^x E1(x), x = s2/(vi Pu).
    const double x = s2 / (fading.variance_interference * half);
    const double mean_sinr = fading.variance_downlink * half /
                             (fading.variance_interference * half) * exp_scaled_e1(x);
    const double bound = log2_1p(fading.variance_uplink * half / s2) + log2_1p(mean_sinr);
    return make_report(rates, bound, config.total_power);
}

ScenarioReport rate_fd_proposed(const ScenarioConfig& config, const FadingSpec& fading,
                                Execution exec) {
    check_config(config);
    check_fading(fading);
    const std::size_t n = config.trials;
    const double half = config.total_power / 2.0;
    const double s2 = config.noise_power;
    const double gate = config.beta_threshold * s2 / half;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> rates(n);
    std::vector<double> gated_sinr(n);    // suppressed-branch SINR, NaN off-branch
    std::vector<double> ungated_sinr(n);  // unsuppressed-branch SINR, NaN off-branch
    const auto body = [&](std::uint64_t i) {
        const ChannelPowers cp = draw_powers(fading, i, s2);
        double sinr_d;
        if (cp.uplink > gate) {
            sinr_d = suppressed_downlink_sinr(cp, half, half, s2);
            gated_sinr[i] = sinr_d;
            ungated_sinr[i] = nan;
        } else {
            sinr_d = unsuppressed_downlink_sinr(cp, half, half, s2);
            gated_sinr[i] = nan;
            ungated_sinr[i] = sinr_d;
        }
        rates[i] = log2_1p(cp.uplink * half / s2) + log2_1p(sinr_d);
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            body(static_cast<std::uint64_t>(i));
        }
    } else {
        for (std::uint64_t i = 0; i < n; ++i) {
            body(i);
        }
    }

    // Empirical conditional branch means; an empty branch drops its term.
    const auto conditional_mean = [](const std::vector<double>& values) {
        double sum = 0.0;
        std::size_t count = 0;
        for (double v : values) {
            if (!std::isnan(v)) {
                sum += v;
                ++count;
            }
        }
        return count > 0 ? sum / static_cast<double>(count) : 0.0;
    };
    const double bound = log2_1p(fading.variance_uplink * half / s2) +
                         log2_1p(conditional_mean(gated_sinr)) +
                         log2_1p(conditional_mean(ungated_sinr));
    return make_report(rates, bound, config.total_power);
}

double counter_injection_power(const LinkRealization& link, double p_u) {
    detail::check_non_negative(p_u, "uplink power");
    const double hd2 = std::norm(link.downlink);
    if (hd2 == 0.0) {
        throw DegenerateChannelError("counter_injection_power: downlink gain is zero");
    }
    const double hu2 = std::norm(link.uplink);
    const double hi2 = std::norm(link.interference);
    const double s2 = link.noise_power;
    const double denom = hu2 * p_u + s2;
    return p_u * p_u * p_u * hu2 * hu2 * hi2 / (hd2 * denom * denom);
}

PowerPair solve_power_budget(const LinkRealization& link, double total_power,
                             double noise_power) {
    detail::check_positive(total_power, "total_power");
    detail::check_positive(noise_power, "noise_power");
    const double hd2 = std::norm(link.downlink);
    if (hd2 == 0.0) {
        throw DegenerateChannelError("solve_power_budget: downlink gain is zero");
    }
    const double hu2 = std::norm(link.uplink);
    const double hi2 = std::norm(link.interference);
    const double s2 = noise_power;
    const double a = hu2 * hu2 * hi2 / hd2;
    const double half = total_power / 2.0;
    if (a == 0.0) {
        return {half, half};  // no counter-injection cost, exact split
    }

    const auto residual = [&](double pu) {
        const double d = hu2 * pu + s2;
        return a * pu * pu * pu / (d * d) + 2.0 * pu - total_power;
    };
    const auto slope = [&](double pu) {
        const double d = hu2 * pu + s2;
        return a * pu * pu * (hu2 * pu + 3.0 * s2) / (d * d * d) + 2.0;
    };

    // residual(0) = -P and residual(P/2) = Pj(P/2) >= 0 bracket the unique
    // root; the residual is strictly increasing, so Newton with a bisection
    // safeguard cannot escape.
    double lo = 0.0;
    double hi = half;
    double pu = half * 0.5;
    const double tol = 1e-13 * total_power;
    for (int iter = 0; iter < 200; ++iter) {
        const double g = residual(pu);
        if (std::abs(g) <= tol) {
            return {pu, pu};
        }
        if (g > 0.0) {
            hi = pu;
        } else {
            lo = pu;
        }
        double next = pu - g / slope(pu);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (next == pu) {
            break;  // stuck at double resolution
        }
        pu = next;
    }
    if (std::abs(residual(pu)) <= 1e-10 * total_power) {
        return {pu, pu};
    }
    throw SolverError("solve_power_budget: no positive root found");
}

ScenarioReport energy_efficiency(ScenarioCase scenario, const ScenarioConfig& config,
                                 const FadingSpec& fading, Execution exec) {
    if (scenario != ScenarioCase::FdProposed) {
        ScenarioReport report;
        switch (scenario) {
            case ScenarioCase::Hd:
                report = rate_hd(config, fading, exec);
                break;
            case ScenarioCase::FdIdeal:
                report = rate_fd_ideal(config, fading, exec);
                break;
            default:
                report = rate_fd_unsuppressed(config, fading, exec);
                break;
        }
        return report;
    }

    check_config(config);
    check_fading(fading);
    const double p = config.total_power;
    const double s2 = config.noise_power;
    const double beta = config.beta_threshold;
    const double t_d = config.t_d;

    const auto rates = run_trials(config.trials, exec, [&](std::uint64_t i) {
        const LinkRealization link = sample_link(fading, i, s2, ComplexGain{0.0});
        const ChannelPowers cp{std::norm(link.uplink), std::norm(link.downlink),
                               std::norm(link.interference)};
        if (cp.downlink > t_d) {
            const double pu = solve_power_budget(link, p, s2).uplink;
            if (cp.uplink >= beta * s2 / pu) {
                return log2_1p(cp.uplink * pu / s2) +
                       log2_1p(suppressed_downlink_sinr(cp, pu, pu, s2));
            }
        }
        return fallback_rate(cp, p, s2);
    });
    return make_report(rates, std::nullopt, p);
}

}  // namespace fdiui
