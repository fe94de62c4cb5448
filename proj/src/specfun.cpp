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

#include "fdiui/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fdiui/errors.hpp"

namespace fdiui {
namespace {

// E1(x) = -euler_gamma - ln(x) + sum_{k>=1} (-1)^{k+1} x^k / (k k!), x <= 1.
double e1_series(double x) {
    double term = 1.0;  // (-x)^k / k!
    double sum = 0.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        const double contrib = -term / k;  // (-1)^{k+1} x^k / (k k!)
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return -std::numbers::egamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction
//   E1(x) e^x = 1/(x+1 - 1/(x+3 - 4/(x+5 - 9/(x+7 - ...))))
// for x > 1; returns the exp-scaled value.
double e1_scaled_continued_fraction(double x) {
    double b = x + 1.0;
    double c = std::numeric_limits<double>::max();
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            return h;
        }
    }
    throw SolverError("exp_integral_e1: continued fraction did not converge");
}

void check_argument(double x, const char* where) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(where) + ": argument must be positive and finite");
    }
}

}  // namespace

double exp_integral_e1(double x) {
    check_argument(x, "exp_integral_e1");
    if (x <= 1.0) {
        return e1_series(x);
    }
    return std::exp(-x) * e1_scaled_continued_fraction(x);
}

double exp_integral_ei_neg(double x) {
    return -exp_integral_e1(x);
}

double exp_scaled_e1(double x) {
    check_argument(x, "exp_scaled_e1");
    if (x <= 1.0) {
        return std::exp(x) * e1_series(x);
    }
    return e1_scaled_continued_fraction(x);
}

}  // namespace fdiui
