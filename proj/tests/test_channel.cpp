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
#include <vector>

#include "doctest.h"
#include "fdiui/channel.hpp"
#include "fdiui/errors.hpp"
#include "oracles.hpp"

using namespace fdiui;

namespace {
constexpr std::size_t kBigDraw = 1000000;
}

TEST_CASE("deterministic_link wraps fixed values") {
    const auto link = deterministic_link({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, 1.0);
    CHECK(std::norm(link.uplink) == 1.0);
    CHECK(link.residual_si == ComplexGain{0.0, 0.0});

    const auto quiet = deterministic_link({1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, 2.0);
    CHECK(std::norm(quiet.interference) == 0.0);
    CHECK(quiet.noise_power == 2.0);
}

TEST_CASE("deterministic_link rejects bad input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(deterministic_link({nan, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, 1.0),
                    DomainError);
    CHECK_THROWS_AS(deterministic_link({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, 0.0),
                    DomainError);
    CHECK_THROWS_AS(deterministic_link({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, -1.0),
                    DomainError);
}

TEST_CASE("sample_rayleigh rejects an empty request") {
    CHECK_THROWS_AS(sample_rayleigh(FadingSpec{}, 1.0, ComplexGain{0.0}, 0),
                    EmptyRequestError);
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    FadingSpec spec;
    spec.seed = 1234;
    const auto a = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, 100);
    const auto b = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, 100);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].uplink == b[i].uplink);
        CHECK(a[i].downlink == b[i].downlink);
        CHECK(a[i].interference == b[i].interference);
    }
    // sample_link must agree with the bulk path at every trial index.
    CHECK(sample_link(spec, 57, 1.0, ComplexGain{0.0}).downlink == a[57].downlink);
}

TEST_CASE("unit-variance fading has unit mean channel power") {
    FadingSpec spec;
    spec.seed = 777;
    const auto draws = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, kBigDraw);
    double mean_u = 0.0;
    for (const auto& link : draws) {
        mean_u += std::norm(link.uplink);
    }
    mean_u /= static_cast<double>(draws.size());
    CHECK(mean_u > 0.995);
    CHECK(mean_u < 1.005);
}

TEST_CASE("channel power is exponential: KS against Exp(1)") {
    FadingSpec spec;
    spec.seed = 4242;
    const auto draws = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, kBigDraw);
    std::vector<double> powers;
    powers.reserve(draws.size());
    for (const auto& link : draws) {
        powers.push_back(std::norm(link.interference));
    }
    const double d = testing::ks_statistic(std::move(powers),
                                           [](double x) { return -std::expm1(-x); });
    CHECK(d < 0.002);
}

TEST_CASE("per-link variances are honored") {
    FadingSpec spec;
    spec.variance_uplink = 0.25;
    spec.variance_downlink = 4.0;
    spec.seed = 5;
    const auto draws = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, 200000);
    double mu = 0.0;
    double md = 0.0;
    for (const auto& link : draws) {
        mu += std::norm(link.uplink);
        md += std::norm(link.downlink);
    }
    CHECK(mu / 200000 == doctest::Approx(0.25).epsilon(0.02));
    CHECK(md / 200000 == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("links are drawn independently") {
    FadingSpec spec;
    spec.seed = 31;
    const auto draws = sample_rayleigh(spec, 1.0, ComplexGain{0.0}, kBigDraw);
    double su = 0.0;
    double si = 0.0;
    double suu = 0.0;
    double sii = 0.0;
    double sui = 0.0;
    for (const auto& link : draws) {
        const double u = std::norm(link.uplink);
        const double i = std::norm(link.interference);
        su += u;
        si += i;
        suu += u * u;
        sii += i * i;
        sui += u * i;
    }
    const double n = static_cast<double>(draws.size());
    const double cov = sui / n - (su / n) * (si / n);
    const double var_u = suu / n - (su / n) * (su / n);
    const double var_i = sii / n - (si / n) * (si / n);
    CHECK(std::abs(cov / std::sqrt(var_u * var_i)) < 0.01);
}
