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
#include <vector>

#include "fdiui/narrowband.hpp"

namespace fdiui {

/// OFDM numerology for the wideband extension.
struct OfdmSpec {
    std::size_t n_subcarriers;  // power of two, >= 2
    std::size_t cp_length;      // cyclic prefix samples, < n_subcarriers
    double sample_rate;         // Hz
};

struct MultipathTap {
    std::size_t delay_samples;
    ComplexGain gain;
};

/// Sparse tapped-delay-line channel; delays strictly increasing.
struct MultipathChannel {
    std::vector<MultipathTap> taps;
};

/// Time-domain IUI-suppression filter applied by the BS to the received
/// uplink signal before retransmission. Its frequency response at the
/// subcarrier bins equals the per-subcarrier optimal coefficients.
struct TdinisFilter {
    std::vector<ComplexGain> taps;  // length n_subcarriers
};

/// Per-subcarrier coefficients plus the bins where the downlink response
/// vanished (coefficient forced to 0 there: nothing can be suppressed
/// where no downlink exists).
struct SubcarrierCoefficients {
    std::vector<ComplexGain> coeffs;
    std::vector<std::size_t> flagged;
};

/// Frequency response of a tapped-delay-line channel at the n bins.
std::vector<ComplexGain> channel_frequency_response(const MultipathChannel& channel,
                                                    std::size_t n);

/// Frequency response of the filter taps at the n_subcarriers bins.
std::vector<ComplexGain> filter_frequency_response(const TdinisFilter& filter);

/// Optimal narrowband coefficient applied independently on every
/// subcarrier of the transformed channels.
SubcarrierCoefficients per_subcarrier_coefficients(const MultipathChannel& ch_uplink,
                                                   const MultipathChannel& ch_downlink,
                                                   const MultipathChannel& ch_interference,
                                                   const OfdmSpec& spec,
                                                   const PowerPair& powers,
                                                   double noise_power);

/// Frequency-sampling synthesis: inverse transform of the per-bin
/// coefficients. Exact at bin centers under cyclic-prefix OFDM.
TdinisFilter synthesize_tdinis_filter(const std::vector<ComplexGain>& coeffs,
                                      const OfdmSpec& spec);

/// Index one past the last filter tap that is not negligibly small
/// (relative threshold 1e-12 of the largest tap).
std::size_t effective_filter_length(const TdinisFilter& filter);

/// Simulates one OFDM frame of the interference paths - direct U1->U2 plus
/// U1->BS->filter->U2 - and returns the per-subcarrier residual
/// interference-plus-amplified-noise power,
/// |Hi + Hd C Hu|^2 Pu + |Hd C|^2 sigma^2 at each bin. Throws
/// CyclicPrefixError when the combined channel and filter memory does not
/// fit in the cyclic prefix.
std::vector<double> per_subcarrier_residual_iui(const MultipathChannel& ch_uplink,
                                                const MultipathChannel& ch_downlink,
                                                const MultipathChannel& ch_interference,
                                                const TdinisFilter& filter,
                                                const OfdmSpec& spec,
                                                const PowerPair& powers,
                                                double noise_power);

}  // namespace fdiui
