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

#include "fdiui/narrowband.hpp"

namespace fdiui {

// Distribution of the difference of two independent U[-pi, pi) phases,
// supported on [-2 pi, 2 pi]. Out-of-support arguments throw DomainError.

/// CDF: 1/2 + g/(2 pi) -+ g^2/(8 pi^2) (minus for g >= 0, plus for g < 0).
double phase_diff_cdf(double gamma);

/// Triangular PDF: 1/(2 pi) - |g|/(4 pi^2).
double phase_diff_pdf(double gamma);

/// E[cos(gamma - theta_f)] by composite quadrature of cos times the
/// triangular density. Identically zero in exact arithmetic for every
/// constant offset theta_f; the numerical value stays below 1e-10.
double expected_cos_offset(double theta_f);

/// Same expectation from the piecewise antiderivative. Kept alongside the
/// quadrature route so a sign slip in either branch shows up as a mismatch.
double expected_cos_offset_closed_form(double theta_f);

/// Known link amplitudes when the downlink/interference phases are not.
struct LinkMagnitudes {
    double uplink;
    double downlink;
    double interference;
};

/// Expected downlink INP when the downlink and interference phases are
/// uniform-unknown; the cross term averages out and what remains is
///
///     |h|^2 |hd|^2 |hu|^2 Pu + |hi|^2 Pu + |hd|^2 |h|^2 sigma^2 + sigma^2
///
/// Strictly increasing in h_magnitude, so the best the BS can do without
/// phase knowledge is not transmit at all (h = 0).
double expected_inp_unknown_phase(const LinkMagnitudes& magnitudes, const PowerPair& powers,
                                  double noise_power, double h_magnitude);

}  // namespace fdiui
