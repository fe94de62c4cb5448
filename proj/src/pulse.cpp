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

#include "fdiui/pulse.hpp"

#include <cmath>
#include <numbers>

#include "fdiui/errors.hpp"

namespace fdiui {
namespace {

constexpr double kPi = std::numbers::pi;

// Half-width (in t/T units) of the window around a removable singularity
// inside which the closed-form limit is used instead of the raw quotient.
constexpr double kSingularWindow = 1e-8;

void check_spec(const PulseSpec& spec) {
    detail::check_positive(spec.symbol_duration, "symbol_duration");
    if (!(spec.rolloff >= 0.0 && spec.rolloff <= 1.0)) {
        throw DomainError("rolloff must lie in [0, 1]");
    }
}

}  // namespace

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = kPi * x;
    return std::sin(px) / px;
}

double raised_cosine(double t, const PulseSpec& spec) {
    check_spec(spec);
    detail::check_finite(t, "t");
    const double beta = spec.rolloff;
    const double big_t = spec.symbol_duration;
    const double u = t / big_t;

    if (beta > 0.0) {
        const double u0 = 1.0 / (2.0 * beta);
        if (std::abs(std::abs(u) - u0) < kSingularWindow) {
            return kPi / (4.0 * big_t) * sinc(u0);
        }
    }
    const double x = 2.0 * beta * u;
    return sinc(u) * std::cos(kPi * beta * u) / ((1.0 - x * x) * big_t);
}

double raised_cosine_autocorrelation(double tau, const PulseSpec& spec) {
    check_spec(spec);
    detail::check_finite(tau, "tau");
    const double beta = spec.rolloff;
    const double big_t = spec.symbol_duration;
    const double u = std::abs(tau) / big_t;  // R is even

    // First term: sinc(u) cos(pi beta u) / (1 - (2 beta u)^2); the 0/0 at
    // u = 1/(2 beta) resolves to (pi/4) sinc(u).
    double term1;
    if (beta > 0.0 && std::abs(u - 1.0 / (2.0 * beta)) < kSingularWindow) {
        term1 = kPi / 4.0 * sinc(u);
    } else {
        const double x = 2.0 * beta * u;
        term1 = sinc(u) * std::cos(kPi * beta * u) / (1.0 - x * x);
    }

    // Second term: (beta/4) sinc(beta u) cos(pi u) / (1 - (beta u)^2); the
    // 0/0 at u = 1/beta resolves to (beta/8) cos(pi u).
    double term2;
    if (beta > 0.0 && std::abs(u - 1.0 / beta) < kSingularWindow) {
        term2 = beta / 8.0 * std::cos(kPi * u);
    } else {
        const double y = beta * u;
        term2 = beta / 4.0 * sinc(y) * std::cos(kPi * u) / (1.0 - y * y);
    }

    return big_t * (term1 - term2);
}

double suppression_ratio(double delay_diff, const PulseSpec& spec) {
    const double r0 = raised_cosine_autocorrelation(0.0, spec);
    const double r_tau = raised_cosine_autocorrelation(delay_diff, spec);
    return 2.0 * (r0 - r_tau) / r0;
}

}  // namespace fdiui
