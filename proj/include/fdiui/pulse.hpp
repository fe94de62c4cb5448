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

namespace fdiui {

/// Raised-cosine shaping parameters. rolloff in [0, 1].
struct PulseSpec {
    double symbol_duration;  // T, seconds
    double rolloff;          // beta
};

/// sinc(x) = sin(pi x) / (pi x), sinc(0) = 1.
double sinc(double x);

/// Raised-cosine impulse response p_T(t), normalized so p_T(0) = 1/T.
/// Total function: the removable singularity at t = +-T/(2 beta) is
/// evaluated by its closed-form limit pi/(4T) sinc(1/(2 beta)).
double raised_cosine(double t, const PulseSpec& spec);

/// Autocorrelation R(tau) of the raised-cosine pulse (closed form),
/// R(0) = T (1 - beta/4). Removable singularities at tau = T/(2 beta)
/// and tau = T/beta are evaluated by closed-form limits.
double raised_cosine_autocorrelation(double tau, const PulseSpec& spec);

/// Residual-to-original IUI power ratio when the counter-injection signal
/// lags the interference by delay_diff seconds:
///
///     r(tau) = 2 (R(0) - R(tau)) / R(0)
///
/// Zero at zero delay; bounded by 4.
double suppression_ratio(double delay_diff, const PulseSpec& spec);

}  // namespace fdiui
