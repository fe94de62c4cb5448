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

#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "fdiui/errors.hpp"
#include "fdiui/phase.hpp"
#include "fdiui/pulse.hpp"
#include "fdiui/scenarios.hpp"
#include "fdiui/wideband.hpp"

namespace fdiui::cli {
namespace {

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Rows are assembled in memory and written in one shot so a failing path
// never leaves a half-written file behind.
class CsvBuilder {
  public:
    explicit CsvBuilder(std::string header) { buffer_ = std::move(header) + "\n"; }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            buffer_ += fmt(values[i]);
            buffer_ += (i + 1 < values.size()) ? "," : "\n";
        }
    }

    void row_leading_count(std::size_t count, const std::vector<double>& values) {
        buffer_ += std::to_string(count);
        for (double v : values) {
            buffer_ += ",";
            buffer_ += fmt(v);
        }
        buffer_ += "\n";
    }

    [[nodiscard]] const std::string& str() const { return buffer_; }

  private:
    std::string buffer_;
};

int write_file(const std::string& path, const std::string& content, std::ostream& diag) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        diag << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    out << content;
    out.flush();
    if (!out) {
        diag << "error: write to '" << path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

struct ExperimentInfo {
    const char* name;
    const char* description;
    std::map<std::string, double> defaults;
};

const std::vector<ExperimentInfo>& experiment_table() {
    static const std::vector<ExperimentInfo> table = {
        {"delay_sweep",
         "analytic IUI suppression ratio vs delay difference",
         {{"symbol_duration", 100e-6}, {"rolloff", 0.22}, {"tau_max", 5e-6}, {"steps", 200}}},
        {"rate_vs_snr",
         "sum-rate Monte Carlo of the four scenarios plus Jensen bounds",
         {{"snr_db_min", 0.0},
          {"snr_db_max", 30.0},
          {"snr_db_step", 5.0},
          {"trials", 100000},
          {"beta", 1.0},
          {"mu", 0.5},
          {"noise_power", 1.0}}},
        {"energy_vs_power",
         "energy efficiency vs total normalized transmit power",
         {{"p_db_min", 0.0},
          {"p_db_max", 30.0},
          {"p_db_step", 5.0},
          {"trials", 100000},
          {"t_d", 0.1},
          {"beta", 1.0},
          {"mu", 0.5},
          {"noise_power", 1.0}}},
        {"ee_convergence",
         "proposed-scheme energy efficiency vs Monte Carlo trial count",
         {{"p_db", 10.0},
          {"t_d", 0.1},
          {"beta", 1.0},
          {"noise_power", 1.0},
          {"trials_min", 100},
          {"trials_max", 100000}}},
        {"wideband_demo",
         "per-subcarrier residual IUI of the synthesized TDINIS filter",
         {{"n_subcarriers", 256},
          {"cp_length", 32},
          {"p_u", 1.0},
          {"p_d", 1.0},
          {"noise_power", 1.0},
          {"tap2_gain_re", 0.6},
          {"tap2_gain_im", -0.3},
          {"tap2_delay", 3}}},
        {"point_eval",
         "one-shot narrowband calculator for fixed gains",
         {{"hu_re", 1.0},
          {"hu_im", 0.0},
          {"hd_re", 1.0},
          {"hd_im", 0.0},
          {"hi_re", 1.0},
          {"hi_im", 0.0},
          {"residual_si_re", 0.0},
          {"residual_si_im", 0.0},
          {"p_u", 1.0},
          {"p_d", 1.0},
          {"noise_power", 1.0}}},
    };
    return table;
}

const ExperimentInfo* find_experiment(const std::string& name) {
    for (const auto& info : experiment_table()) {
        if (name == info.name) {
            return &info;
        }
    }
    return nullptr;
}

ScenarioConfig scenario_config(const std::map<std::string, double>& p, double total_power) {
    ScenarioConfig config;
    config.total_power = total_power;
    config.noise_power = p.at("noise_power");
    if (p.count("trials") != 0) {
        config.trials = static_cast<std::size_t>(p.at("trials"));
    }
    if (p.count("beta") != 0) {
        config.beta_threshold = p.at("beta");
    }
    if (p.count("mu") != 0) {
        config.mu = p.at("mu");
    }
    if (p.count("t_d") != 0) {
        config.t_d = p.at("t_d");
    }
    return config;
}

std::string run_delay_sweep(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    const PulseSpec pulse{p.at("symbol_duration"), p.at("rolloff")};
    const int steps = static_cast<int>(p.at("steps"));
    CsvBuilder csv("tau_s,suppression_ratio,suppression_db");
    for (int i = 0; i <= steps; ++i) {
        const double tau = p.at("tau_max") * i / steps;
        const double ratio = suppression_ratio(tau, pulse);
        csv.row({tau, ratio, 10.0 * std::log10(ratio)});
    }
    return csv.str();
}

std::string run_rate_vs_snr(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    FadingSpec fading;
    fading.seed = spec.seed;
    CsvBuilder csv(
        "snr_db,hd,hd_se,hd_bound,fd_ideal,fd_ideal_se,fd_ideal_bound,"
        "fd_unsuppressed,fd_unsuppressed_se,fd_unsuppressed_bound,"
        "fd_proposed,fd_proposed_se,fd_proposed_bound");
    for (double snr_db = p.at("snr_db_min"); snr_db <= p.at("snr_db_max") + 1e-9;
         snr_db += p.at("snr_db_step")) {
        // Per-link power P/2 set so that SNR_u = SNR_d = INR_i = snr.
        const double total = 2.0 * db_to_linear(snr_db) * p.at("noise_power");
        const auto config = scenario_config(p, total);
        const auto hd = rate_hd(config, fading);
        const auto ideal = rate_fd_ideal(config, fading);
        const auto unsup = rate_fd_unsuppressed(config, fading);
        const auto proposed = rate_fd_proposed(config, fading);
        csv.row({snr_db, hd.mean_rate, hd.std_error, hd.jensen_bound.value(),
                 ideal.mean_rate, ideal.std_error, ideal.jensen_bound.value(),
                 unsup.mean_rate, unsup.std_error, unsup.jensen_bound.value(),
                 proposed.mean_rate, proposed.std_error, proposed.jensen_bound.value()});
    }
    return csv.str();
}

std::string run_energy_vs_power(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    FadingSpec fading;
    fading.seed = spec.seed;
    CsvBuilder csv(
        "p_db,ee_hd,ee_hd_se,ee_fd_ideal,ee_fd_ideal_se,"
        "ee_fd_unsuppressed,ee_fd_unsuppressed_se,ee_fd_proposed,ee_fd_proposed_se");
    for (double p_db = p.at("p_db_min"); p_db <= p.at("p_db_max") + 1e-9;
         p_db += p.at("p_db_step")) {
        const double total = db_to_linear(p_db) * p.at("noise_power");
        const auto config = scenario_config(p, total);
        const auto hd = energy_efficiency(ScenarioCase::Hd, config, fading);
        const auto ideal = energy_efficiency(ScenarioCase::FdIdeal, config, fading);
        const auto unsup = energy_efficiency(ScenarioCase::FdUnsuppressed, config, fading);
        const auto prop = energy_efficiency(ScenarioCase::FdProposed, config, fading);
        csv.row({p_db, hd.energy_efficiency, hd.std_error / total, ideal.energy_efficiency,
                 ideal.std_error / total, unsup.energy_efficiency, unsup.std_error / total,
                 prop.energy_efficiency, prop.std_error / total});
    }
    return csv.str();
}

std::string run_ee_convergence(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    FadingSpec fading;
    fading.seed = spec.seed;
    const double total = db_to_linear(p.at("p_db")) * p.at("noise_power");
    CsvBuilder csv("trials,ee_fd_proposed,ee_fd_proposed_se");
    for (double trials = p.at("trials_min"); trials <= p.at("trials_max") * 1.000001;
         trials *= 10.0) {
        auto config = scenario_config(p, total);
        config.trials = static_cast<std::size_t>(trials);
        const auto report = energy_efficiency(ScenarioCase::FdProposed, config, fading);
        csv.row_leading_count(config.trials,
                              {report.energy_efficiency, report.std_error / total});
    }
    return csv.str();
}

std::string run_wideband_demo(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    const OfdmSpec ofdm{static_cast<std::size_t>(p.at("n_subcarriers")),
                        static_cast<std::size_t>(p.at("cp_length")), 1e6};
    const PowerPair powers{p.at("p_u"), p.at("p_d")};
    const double noise = p.at("noise_power");
    const MultipathChannel ch_u{{{0, {1.0, 0.0}}}};
    const MultipathChannel ch_d{{{0, {1.0, 0.0}}}};
    const MultipathChannel ch_i{
        {{0, {1.0, 0.0}},
         {static_cast<std::size_t>(p.at("tap2_delay")),
          {p.at("tap2_gain_re"), p.at("tap2_gain_im")}}}};

    const auto coeffs = per_subcarrier_coefficients(ch_u, ch_d, ch_i, ofdm, powers, noise);
    const auto filter = synthesize_tdinis_filter(coeffs.coeffs, ofdm);
    const auto residual =
        per_subcarrier_residual_iui(ch_u, ch_d, ch_i, filter, ofdm, powers, noise);
    const auto h_i = channel_frequency_response(ch_i, ofdm.n_subcarriers);

    CsvBuilder csv("subcarrier,unfiltered_power,residual_power,suppression_db");
    for (std::size_t k = 0; k < residual.size(); ++k) {
        const double raw = std::norm(h_i[k]) * powers.uplink;
        csv.row_leading_count(k, {raw, residual[k], 10.0 * std::log10(residual[k] / raw)});
    }
    return csv.str();
}

std::string run_point_eval(const ExperimentSpec& spec) {
    const auto& p = spec.params;
    const auto link = deterministic_link({p.at("hu_re"), p.at("hu_im")},
                                         {p.at("hd_re"), p.at("hd_im")},
                                         {p.at("hi_re"), p.at("hi_im")},
                                         {p.at("residual_si_re"), p.at("residual_si_im")},
                                         p.at("noise_power"));
    const PowerPair powers{p.at("p_u"), p.at("p_d")};
    const ComplexGain h = optimal_suppression_coefficient(link, powers);
    const auto report = evaluate_sinr(link, powers, h);
    const double p_j = counter_injection_power(link, powers.uplink);

    CsvBuilder csv(
        "h_opt_re,h_opt_im,sinr_d,sinr_u,rate_d,rate_u,rate_sum,p_j,sinr_d_db");
    csv.row({h.real(), h.imag(), report.downlink_sinr, report.uplink_sinr,
             report.downlink_rate, report.uplink_rate, report.sum_rate, p_j,
             10.0 * std::log10(report.downlink_sinr)});
    return csv.str();
}

}  // namespace

bool is_known_experiment(const std::string& name) {
    return find_experiment(name) != nullptr;
}

std::map<std::string, double> default_params(const std::string& experiment) {
    const ExperimentInfo* info = find_experiment(experiment);
    return info != nullptr ? info->defaults : std::map<std::string, double>{};
}

void print_experiment_list(std::ostream& os) {
    for (const auto& info : experiment_table()) {
        os << info.name << ": " << info.description << "\n  parameters:";
        for (const auto& [key, value] : info.defaults) {
            os << " " << key << "=" << fmt(value);
        }
        os << "\n";
    }
}

int run_experiment(const ExperimentSpec& spec, std::ostream& diagnostics) {
    const ExperimentInfo* info = find_experiment(spec.experiment);
    if (info == nullptr) {
        diagnostics << "error: unknown experiment '" << spec.experiment << "'\n";
        return kExitUsage;
    }
    for (const auto& [key, value] : spec.params) {
        if (info->defaults.count(key) == 0) {
            diagnostics << "error: unknown parameter '" << key << "' for experiment '"
                        << spec.experiment << "'\n";
            return kExitUsage;
        }
        (void)value;
    }

    ExperimentSpec resolved = spec;
    for (const auto& [key, value] : info->defaults) {
        resolved.params.emplace(key, value);  // keeps explicit overrides
    }

    std::string csv;
    try {
        if (spec.experiment == "delay_sweep") {
            csv = run_delay_sweep(resolved);
        } else if (spec.experiment == "rate_vs_snr") {
            csv = run_rate_vs_snr(resolved);
        } else if (spec.experiment == "energy_vs_power") {
            csv = run_energy_vs_power(resolved);
        } else if (spec.experiment == "ee_convergence") {
            csv = run_ee_convergence(resolved);
        } else if (spec.experiment == "wideband_demo") {
            csv = run_wideband_demo(resolved);
        } else {
            csv = run_point_eval(resolved);
        }
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return write_file(spec.output_path, csv, diagnostics);
}

}  // namespace fdiui::cli
