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

#include "fdiui/channel.hpp"

#include "fdiui/errors.hpp"

namespace fdiui {
namespace {

void check_positive_variances(const FadingSpec& spec) {
    detail::check_positive(spec.variance_uplink, "variance_uplink");
    detail::check_positive(spec.variance_downlink, "variance_downlink");
    detail::check_positive(spec.variance_interference, "variance_interference");
}

}  // namespace

LinkRealization deterministic_link(ComplexGain uplink, ComplexGain downlink,
                                   ComplexGain interference, ComplexGain residual_si,
                                   double noise_power) {
    detail::check_finite(uplink, "uplink gain");
    detail::check_finite(downlink, "downlink gain");
    detail::check_finite(interference, "interference gain");
    detail::check_finite(residual_si, "residual_si gain");
    detail::check_positive(noise_power, "noise_power");
    return {uplink, downlink, interference, residual_si, noise_power};
}

LinkRealization sample_link(const FadingSpec& spec, std::uint64_t trial, double noise_power,
                            ComplexGain residual_si) {
    SplitRng rng = SplitRng(spec.seed).split(trial);
    LinkRealization link;
    link.uplink = rng.next_cgaussian(spec.variance_uplink);
    link.downlink = rng.next_cgaussian(spec.variance_downlink);
    link.interference = rng.next_cgaussian(spec.variance_interference);
    link.residual_si = residual_si;
    link.noise_power = noise_power;
    return link;
}

std::vector<LinkRealization> sample_rayleigh(const FadingSpec& spec, double noise_power,
                                             ComplexGain residual_si, std::size_t count) {
    if (count == 0) {
        throw EmptyRequestError("sample_rayleigh: count must be at least 1");
    }
    check_positive_variances(spec);
    detail::check_positive(noise_power, "noise_power");
    detail::check_finite(residual_si, "residual_si gain");

    std::vector<LinkRealization> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(sample_link(spec, i, noise_power, residual_si));
    }
    return out;
}

}  // namespace fdiui
