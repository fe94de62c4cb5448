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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "fdiui/errors.hpp"
#include "fdiui/specfun.hpp"
#include "oracles.hpp"

using namespace fdiui;

TEST_CASE("E1 at frozen oracle points") {
    // Both literals were frozen from the quadrature oracle below.
    CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-12));
    CHECK(exp_integral_e1(10.0) == doctest::Approx(4.1569689296853243e-6).epsilon(1e-12));
    CHECK(testing::e1_quadrature(1.0) ==
          doctest::Approx(0.21938393439552027).epsilon(1e-11));
    CHECK(testing::e1_quadrature(10.0) ==
          doctest::Approx(4.1569689296853243e-6).epsilon(1e-11));
}

TEST_CASE("E1 agrees with the quadrature oracle on a log grid") {
    for (double x = 1e-4; x <= 1.0e2 * 1.0000001; x *= std::pow(10.0, 0.25)) {
        const double expected = testing::e1_quadrature(x);
        CHECK(exp_integral_e1(x) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("E1 asymptotic envelope at large argument") {
    const double v700 = exp_integral_e1(700.0);
    CHECK(v700 > 0.0);
    CHECK(v700 < std::exp(-700.0));
}

TEST_CASE("E1 is strictly decreasing") {
    double prev = exp_integral_e1(1e-8);
    for (double x = 1e-6; x <= 500.0; x *= 4.0) {
        const double cur = exp_integral_e1(x);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("E1 bracket inequality") {
    for (double x = 1e-6; x <= 600.0; x *= 3.0) {
        const double v = exp_integral_e1(x);
        CHECK(v > 0.5 * std::exp(-x) * std::log1p(2.0 / x));
        CHECK(v < std::exp(-x) * std::log1p(1.0 / x));
    }
}

TEST_CASE("Ei(-x) is the negation and stays negative") {
    for (double x : {1e-6, 0.5, 1.0, 3.0, 42.0}) {
        CHECK(exp_integral_ei_neg(x) < 0.0);
        CHECK(exp_integral_ei_neg(x) + exp_integral_e1(x) == 0.0);
    }
    CHECK(exp_integral_ei_neg(1.0) ==
          doctest::Approx(-0.21938393439552027).epsilon(1e-12));
}

TEST_CASE("exp-scaled E1 matches the plain product where that is finite") {
    for (double x : {1e-4, 0.3, 1.0, 5.0, 50.0, 500.0}) {
        CHECK(exp_scaled_e1(x) ==
              doctest::Approx(std::exp(x) * exp_integral_e1(x)).epsilon(1e-10));
    }
    // Far beyond the overflow point of exp(x): e^x E1(x) ~ 1/x.
    const double scaled = exp_scaled_e1(1e12);
    CHECK(scaled == doctest::Approx(1e-12).epsilon(1e-6));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(exp_integral_e1(0.0), DomainError);
    CHECK_THROWS_AS(exp_integral_e1(-1.0), DomainError);
    CHECK_THROWS_AS(exp_integral_e1(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(exp_integral_e1(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(exp_integral_ei_neg(-2.0), DomainError);
    CHECK_THROWS_AS(exp_scaled_e1(0.0), DomainError);
}
