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

#include "fdiui/narrowband.hpp"

#include <cmath>
#include <numbers>

#include "fdiui/errors.hpp"

namespace fdiui {
namespace {

void check_powers(const PowerPair& powers) {
    detail::check_non_negative(powers.uplink, "uplink power");
    detail::check_non_negative(powers.downlink, "downlink power");
}

double log2_1p(double x) {
    return std::log1p(x) / std::numbers::ln2;
}

}  // namespace

double interference_plus_noise_power(const LinkRealization& link, const PowerPair& powers,
                                     ComplexGain h) {
    check_powers(powers);
    detail::check_finite(h, "suppression coefficient");
    if (link.residual_si != ComplexGain{0.0, 0.0}) {
        throw DomainError(
            "interference_plus_noise_power: ideal-SI formula requires residual_si == 0");
    }
    const double s2 = link.noise_power;
    const double iui = std::norm(h * link.downlink * link.uplink + link.interference);
    return iui * powers.uplink + std::norm(link.downlink * h) * s2 + s2;
}

ComplexGain optimal_suppression_coefficient(const LinkRealization& link,
                                            const PowerPair& powers) {
    check_powers(powers);
    if (std::norm(link.downlink) == 0.0) {
        throw DegenerateChannelError(
            "optimal_suppression_coefficient: downlink gain is zero");
    }
    const double denom = std::norm(link.downlink * link.uplink) * powers.uplink +
                         std::norm(link.downlink) * link.noise_power;
    return -link.interference * std::conj(link.downlink) * std::conj(link.uplink) *
           powers.uplink / denom;
}

double residual_interference_power(const LinkRealization& link, const PowerPair& powers) {
    check_powers(powers);
    const double s2 = link.noise_power;
    return std::norm(link.interference) * powers.uplink * s2 /
           (std::norm(link.uplink) * powers.uplink + s2);
}

double optimal_downlink_sinr(const LinkRealization& link, const PowerPair& powers) {
    if (std::norm(link.downlink) == 0.0) {
        throw DegenerateChannelError("optimal_downlink_sinr: downlink gain is zero");
    }
    return std::norm(link.downlink) * powers.downlink /
           (residual_interference_power(link, powers) + link.noise_power);
}

SinrReport evaluate_sinr(const LinkRealization& link, const PowerPair& powers, ComplexGain h) {
    check_powers(powers);
    detail::check_finite(h, "suppression coefficient");

    const ComplexGain e = link.residual_si;
    const ComplexGain loop = 1.0 - e * h;
    if (std::abs(loop) <= kPoleEpsilon) {
        throw InstabilityError("evaluate_sinr: retransmission loop diverges, "
                               "|1 - residual_si * h| below pole guard");
    }
    const double s2 = link.noise_power;

    // Downlink user: wanted Xd through hd, IUI from Xu, BS noise re-injected
    // through the loop plus local noise.
    const double sig_d = std::norm(link.downlink / loop) * powers.downlink;
    const double iui_d = std::norm(h * link.uplink * link.downlink / loop + link.interference) *
                         powers.uplink;
    const double noise_d = (std::norm(h * link.downlink / loop) + 1.0) * s2;
    const double sinr_d = sig_d / (iui_d + noise_d);

    // BS receiver: wanted Xu plus its own echo through the residual loop;
    // Xd leakage and noise re-circulation in the denominator.
    const double sig_u = std::norm(link.uplink + h * link.uplink * e / loop) * powers.uplink;
    const double den_u = std::norm(e / loop) * powers.downlink +
                         std::norm(h * e / loop + 1.0) * s2;
    const double sinr_u = sig_u / den_u;

    SinrReport report;
    report.downlink_sinr = sinr_d;
    report.uplink_sinr = sinr_u;
    report.downlink_rate = log2_1p(sinr_d);
    report.uplink_rate = log2_1p(sinr_u);
    report.sum_rate = report.downlink_rate + report.uplink_rate;
    return report;
}

double sum_rate(const LinkRealization& link, const PowerPair& powers, ComplexGain h) {
    return evaluate_sinr(link, powers, h).sum_rate;
}

}  // namespace fdiui
