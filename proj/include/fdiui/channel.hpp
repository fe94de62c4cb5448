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

#include <complex>
#include <cstdint>
#include <vector>

#include "fdiui/rng.hpp"

namespace fdiui {

/// Complex amplitude gain of a link, or a suppression weight.
using ComplexGain = std::complex<double>;

/// One draw of every channel in the three-node network.
///
/// The residual self-interference gain is the BS cancellation error
/// (h_si - h~si); it is a capability parameter held fixed per experiment,
/// not a faded link.
struct LinkRealization {
    ComplexGain uplink;        // U1 -> BS
    ComplexGain downlink;      // BS -> U2
    ComplexGain interference;  // U1 -> U2
    ComplexGain residual_si;   // SI left after cancellation at the BS
    double noise_power;        // sigma_n^2, linear scale
};

/// Per-link variances of the circularly symmetric complex Gaussian fading.
struct FadingSpec {
    double variance_uplink = 1.0;
    double variance_downlink = 1.0;
    double variance_interference = 1.0;
    std::uint64_t seed = 0;
};

/// Wraps fixed gains for closed-form evaluation. Throws DomainError on
/// non-finite gains or non-positive noise power.
LinkRealization deterministic_link(ComplexGain uplink, ComplexGain downlink,
                                   ComplexGain interference, ComplexGain residual_si,
                                   double noise_power);

/// Draws one Rayleigh-faded realization from the trial stream `trial` of
/// the generator seeded by spec.seed. Draw order is uplink, downlink,
/// interference, so identical trial indices see identical channels across
/// scenarios and thread schedules.
LinkRealization sample_link(const FadingSpec& spec, std::uint64_t trial, double noise_power,
                            ComplexGain residual_si);

/// `count` independent Rayleigh draws; reproducible for a fixed seed.
/// Throws EmptyRequestError when count == 0.
std::vector<LinkRealization> sample_rayleigh(const FadingSpec& spec, double noise_power,
                                             ComplexGain residual_si, std::size_t count);

}  // namespace fdiui
