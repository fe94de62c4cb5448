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

#include "fdiui/phase.hpp"

#include <cmath>
#include <numbers>

#include "fdiui/errors.hpp"

namespace fdiui {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void check_support(double gamma, const char* where) {
    if (!(std::abs(gamma) <= kTwoPi)) {
        throw DomainError(std::string(where) + ": argument outside [-2 pi, 2 pi]");
    }
}

// Composite Simpson on [a, b]; panels must be even.
template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        sum += f(a + i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

// Antiderivative of (a + b g) cos(g - theta):
//   (a + b g) sin(g - theta) + b cos(g - theta)
double piece_integral(double a, double b, double theta, double lo, double hi) {
    const auto antideriv = [&](double g) {
        return (a + b * g) * std::sin(g - theta) + b * std::cos(g - theta);
    };
    return antideriv(hi) - antideriv(lo);
}

}  // namespace

double phase_diff_cdf(double gamma) {
    check_support(gamma, "phase_diff_cdf");
    const double quad = gamma * gamma / (8.0 * kPi * kPi);
    return 0.5 + gamma / kTwoPi + (gamma >= 0.0 ? -quad : quad);
}

double phase_diff_pdf(double gamma) {
    check_support(gamma, "phase_diff_pdf");
    return 1.0 / kTwoPi - std::abs(gamma) / (4.0 * kPi * kPi);
}

double expected_cos_offset(double theta_f) {
    detail::check_finite(theta_f, "theta_f");
    const auto integrand = [theta_f](double g) {
        return std::cos(g - theta_f) * phase_diff_pdf(g);
    };
    // The density has a kink at 0; integrate each smooth half separately.
    return simpson(integrand, -kTwoPi, 0.0, 2048) + simpson(integrand, 0.0, kTwoPi, 2048);
}

double expected_cos_offset_closed_form(double theta_f) {
    detail::check_finite(theta_f, "theta_f");
    const double a = 1.0 / kTwoPi;
    const double b = 1.0 / (4.0 * kPi * kPi);
    return piece_integral(a, +b, theta_f, -kTwoPi, 0.0) +
           piece_integral(a, -b, theta_f, 0.0, kTwoPi);
}

double expected_inp_unknown_phase(const LinkMagnitudes& magnitudes, const PowerPair& powers,
                                  double noise_power, double h_magnitude) {
    detail::check_non_negative(magnitudes.uplink, "uplink magnitude");
    detail::check_non_negative(magnitudes.downlink, "downlink magnitude");
    detail::check_non_negative(magnitudes.interference, "interference magnitude");
    detail::check_non_negative(powers.uplink, "uplink power");
    detail::check_non_negative(powers.downlink, "downlink power");
    detail::check_positive(noise_power, "noise_power");
    detail::check_non_negative(h_magnitude, "h_magnitude");

    const double h2 = h_magnitude * h_magnitude;
    const double d2 = magnitudes.downlink * magnitudes.downlink;
    const double u2 = magnitudes.uplink * magnitudes.uplink;
    const double i2 = magnitudes.interference * magnitudes.interference;
    // E over uniform phases of |h hd hu + hi|^2 Pu + |hd h|^2 s2 + s2: the
    // cross term carries E[cos(...)] = 0, the squares survive.
    return h2 * d2 * u2 * powers.uplink + i2 * powers.uplink + d2 * h2 * noise_power +
           noise_power;
}

}  // namespace fdiui
