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

#include "fdiui/channel.hpp"

namespace fdiui {

/// Uplink / downlink transmit powers, linear scale.
struct PowerPair {
    double uplink = 0.0;
    double downlink = 0.0;
};

/// SINRs (linear) and achievable rates (bits/s/Hz) for one coefficient choice.
struct SinrReport {
    double downlink_sinr;
    double uplink_sinr;
    double downlink_rate;  // log2(1 + downlink_sinr)
    double uplink_rate;    // log2(1 + uplink_sinr)
    double sum_rate;       // downlink_rate + uplink_rate
};

/// Loop pole guard: |1 - residual_si * h| at or below this means the BS
/// retransmission feedback diverges and we refuse to evaluate.
inline constexpr double kPoleEpsilon = 1e-6;

/// Interference-plus-noise power at the downlink user for suppression
/// coefficient h, under perfect SI cancellation:
///
///     INP(h) = |h hd hu + hi|^2 Pu + |hd h|^2 sigma^2 + sigma^2
///
/// Requires link.residual_si == 0; always >= sigma^2.
double interference_plus_noise_power(const LinkRealization& link, const PowerPair& powers,
                                     ComplexGain h);

/// The INP-minimizing counter-injection coefficient:
///
///     h* = - hi hd* hu* Pu / (|hd hu|^2 Pu + |hd|^2 sigma^2)
///
/// Zero interference gives exactly zero. Throws DegenerateChannelError when
/// the downlink gain vanishes (nothing to protect, denominator is zero).
ComplexGain optimal_suppression_coefficient(const LinkRealization& link,
                                            const PowerPair& powers);

/// Downlink SINR achieved at the optimal coefficient:
///
///     SINR* = |hd|^2 Pd / ( |hi|^2 Pu sigma^2 / (|hu|^2 Pu + sigma^2) + sigma^2 )
double optimal_downlink_sinr(const LinkRealization& link, const PowerPair& powers);

/// Interference power left in the SINR* denominator,
/// |hi|^2 Pu sigma^2 / (|hu|^2 Pu + sigma^2). Halves the IUI exactly when
/// the received uplink power equals the noise floor.
double residual_interference_power(const LinkRealization& link, const PowerPair& powers);

/// Both SINRs and rates for an arbitrary coefficient h, including the
/// residual-SI feedback of the BS loop. With residual_si = 0 this reduces
/// exactly to the ideal-case closed forms. Throws InstabilityError when
/// |1 - residual_si * h| <= kPoleEpsilon.
SinrReport evaluate_sinr(const LinkRealization& link, const PowerPair& powers, ComplexGain h);

/// Sum achievable rate R_d + R_u at coefficient h.
double sum_rate(const LinkRealization& link, const PowerPair& powers, ComplexGain h);

}  // namespace fdiui
