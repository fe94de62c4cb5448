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

#include "fdiui/wideband.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "fdiui/errors.hpp"
#include "fdiui/rng.hpp"

namespace fdiui {
namespace {

// A downlink bin with response magnitude at or below this cannot be
// suppressed and gets flagged instead.
constexpr double kDeadBinThreshold = 1e-12;

std::mutex& plan_mutex() {
    static std::mutex m;  // fftw planning is not thread-safe
    return m;
}

std::vector<ComplexGain> dft(const std::vector<ComplexGain>& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<ComplexGain> out(in.size());
    auto* in_ptr = reinterpret_cast<fftw_complex*>(const_cast<ComplexGain*>(in.data()));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(n, in_ptr, out_ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

void check_spec(const OfdmSpec& spec) {
    const std::size_t n = spec.n_subcarriers;
    if (n < 2 || (n & (n - 1)) != 0) {
        throw DomainError("n_subcarriers must be a power of two, at least 2");
    }
    if (spec.cp_length >= n) {
        throw DomainError("cp_length must be smaller than n_subcarriers");
    }
    detail::check_positive(spec.sample_rate, "sample_rate");
}

void check_channel(const MultipathChannel& channel, const OfdmSpec& spec, const char* name) {
    std::size_t prev = 0;
    bool first = true;
    for (const MultipathTap& tap : channel.taps) {
        detail::check_finite(tap.gain, name);
        if (!first && tap.delay_samples <= prev) {
            throw DomainError(std::string(name) + ": tap delays must be strictly increasing");
        }
        prev = tap.delay_samples;
        first = false;
    }
    if (!channel.taps.empty() && channel.taps.back().delay_samples > spec.cp_length) {
        throw DomainError(std::string(name) + ": channel memory exceeds the cyclic prefix");
    }
}

std::size_t channel_memory(const MultipathChannel& channel) {
    return channel.taps.empty() ? 0 : channel.taps.back().delay_samples;
}

// y += x convolved with a sparse tapped delay line.
void convolve_into(const std::vector<ComplexGain>& x, const MultipathChannel& channel,
                   std::vector<ComplexGain>& y) {
    for (const MultipathTap& tap : channel.taps) {
        for (std::size_t j = 0; j + tap.delay_samples < y.size() && j < x.size(); ++j) {
            y[j + tap.delay_samples] += tap.gain * x[j];
        }
    }
}

}  // namespace

std::vector<ComplexGain> channel_frequency_response(const MultipathChannel& channel,
                                                    std::size_t n) {
    std::vector<ComplexGain> response(n, ComplexGain{0.0});
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (const MultipathTap& tap : channel.taps) {
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = step * static_cast<double>(k * tap.delay_samples % n);
            response[k] += tap.gain * std::polar(1.0, angle);
        }
    }
    return response;
}

std::vector<ComplexGain> filter_frequency_response(const TdinisFilter& filter) {
    if (filter.taps.empty()) {
        throw DomainError("filter_frequency_response: filter has no taps");
    }
    return dft(filter.taps, FFTW_FORWARD);
}

SubcarrierCoefficients per_subcarrier_coefficients(const MultipathChannel& ch_uplink,
                                                   const MultipathChannel& ch_downlink,
                                                   const MultipathChannel& ch_interference,
                                                   const OfdmSpec& spec,
                                                   const PowerPair& powers,
                                                   double noise_power) {
    check_spec(spec);
    check_channel(ch_uplink, spec, "uplink channel");
    check_channel(ch_downlink, spec, "downlink channel");
    check_channel(ch_interference, spec, "interference channel");
    detail::check_non_negative(powers.uplink, "uplink power");
    detail::check_non_negative(powers.downlink, "downlink power");
    detail::check_positive(noise_power, "noise_power");

    const std::size_t n = spec.n_subcarriers;
    const auto h_u = channel_frequency_response(ch_uplink, n);
    const auto h_d = channel_frequency_response(ch_downlink, n);
    const auto h_i = channel_frequency_response(ch_interference, n);

    SubcarrierCoefficients result;
    result.coeffs.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(h_d[k]) <= kDeadBinThreshold) {
            result.coeffs[k] = ComplexGain{0.0};
            result.flagged.push_back(k);
            continue;
        }
        const double denom = std::norm(h_d[k] * h_u[k]) * powers.uplink +
                             std::norm(h_d[k]) * noise_power;
        result.coeffs[k] =
            -h_i[k] * std::conj(h_d[k]) * std::conj(h_u[k]) * powers.uplink / denom;
    }
    return result;
}

TdinisFilter synthesize_tdinis_filter(const std::vector<ComplexGain>& coeffs,
                                      const OfdmSpec& spec) {
    check_spec(spec);
    if (coeffs.size() != spec.n_subcarriers) {
        throw DomainError("synthesize_tdinis_filter: coefficient count must equal "
                          "n_subcarriers");
    }
    TdinisFilter filter;
    filter.taps = dft(coeffs, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(spec.n_subcarriers);
    for (ComplexGain& tap : filter.taps) {
        tap *= scale;
    }
    return filter;
}

std::size_t effective_filter_length(const TdinisFilter& filter) {
    double peak = 0.0;
    for (const ComplexGain& tap : filter.taps) {
        peak = std::max(peak, std::abs(tap));
    }
    if (peak == 0.0) {
        return 1;
    }
    std::size_t last = 0;
    for (std::size_t i = 0; i < filter.taps.size(); ++i) {
        if (std::abs(filter.taps[i]) > 1e-12 * peak) {
            last = i;
        }
    }
    return last + 1;
}

std::vector<double> per_subcarrier_residual_iui(const MultipathChannel& ch_uplink,
                                                const MultipathChannel& ch_downlink,
                                                const MultipathChannel& ch_interference,
                                                const TdinisFilter& filter,
                                                const OfdmSpec& spec,
                                                const PowerPair& powers,
                                                double noise_power) {
    check_spec(spec);
    check_channel(ch_uplink, spec, "uplink channel");
    check_channel(ch_downlink, spec, "downlink channel");
    check_channel(ch_interference, spec, "interference channel");
    detail::check_non_negative(powers.uplink, "uplink power");
    detail::check_positive(noise_power, "noise_power");
    const std::size_t n = spec.n_subcarriers;
    if (filter.taps.size() != n) {
        throw DomainError("per_subcarrier_residual_iui: filter length must equal "
                          "n_subcarriers");
    }

    const std::size_t filter_len = effective_filter_length(filter);
    const std::size_t bs_path_memory =
        channel_memory(ch_uplink) + (filter_len - 1) + channel_memory(ch_downlink);
    if (bs_path_memory > spec.cp_length) {
        throw CyclicPrefixError("per_subcarrier_residual_iui: combined channel and filter "
                                "memory exceeds the cyclic prefix");
    }

    // One frame of unit-power QPSK, fixed internal seed: the result is a
    // deterministic transfer-function measurement.
    SplitRng rng(0xFD1D5EEDULL);
    std::vector<ComplexGain> symbols(n);
    for (ComplexGain& s : symbols) {
        const double re = rng.next_unit() < 0.5 ? -1.0 : 1.0;
        const double im = rng.next_unit() < 0.5 ? -1.0 : 1.0;
        s = ComplexGain{re, im} / std::sqrt(2.0);
    }

    auto time_signal = dft(symbols, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(n);
    for (ComplexGain& v : time_signal) {
        v *= scale;
    }

    // Cyclic prefix.
    const std::size_t cp = spec.cp_length;
    std::vector<ComplexGain> tx(cp + n);
    for (std::size_t j = 0; j < cp; ++j) {
        tx[j] = time_signal[n - cp + j];
    }
    for (std::size_t j = 0; j < n; ++j) {
        tx[cp + j] = time_signal[j];
    }

    const std::size_t frame = tx.size() + spec.cp_length;  // room for all path delays

    // Direct interference path U1 -> U2.
    std::vector<ComplexGain> rx(frame, ComplexGain{0.0});
    convolve_into(tx, ch_interference, rx);

    // BS path: U1 -> BS, TDINIS filter, BS -> U2.
    std::vector<ComplexGain> at_bs(frame, ComplexGain{0.0});
    convolve_into(tx, ch_uplink, at_bs);
    std::vector<ComplexGain> retransmit(frame, ComplexGain{0.0});
    for (std::size_t t = 0; t < filter_len; ++t) {
        const ComplexGain tap = filter.taps[t];
        if (tap == ComplexGain{0.0}) {
            continue;
        }
        for (std::size_t j = 0; j + t < frame; ++j) {
            retransmit[j + t] += tap * at_bs[j];
        }
    }
    convolve_into(retransmit, ch_downlink, rx);

    // Strip the prefix and demodulate.
    std::vector<ComplexGain> frame_body(rx.begin() + static_cast<std::ptrdiff_t>(cp),
                                        rx.begin() + static_cast<std::ptrdiff_t>(cp + n));
    const auto received = dft(frame_body, FFTW_FORWARD);

    // Amplified BS noise reaches U2 through filter and downlink channel.
    std::vector<ComplexGain> truncated(n, ComplexGain{0.0});
    for (std::size_t t = 0; t < filter_len; ++t) {
        truncated[t] = filter.taps[t];
    }
    const auto filter_resp = dft(truncated, FFTW_FORWARD);
    const auto h_d = channel_frequency_response(ch_downlink, n);

    std::vector<double> residual(n);
    for (std::size_t k = 0; k < n; ++k) {
        const ComplexGain transfer = received[k] / symbols[k];
        const ComplexGain noise_path = h_d[k] * filter_resp[k];
        residual[k] = std::norm(transfer) * powers.uplink +
                      std::norm(noise_path) * noise_power;
    }
    return residual;
}

}  // namespace fdiui
