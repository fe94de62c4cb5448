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
#include <numbers>

#include "doctest.h"
#include "fdiui/errors.hpp"
#include "fdiui/phase.hpp"
#include "fdiui/rng.hpp"
#include "oracles.hpp"

using namespace fdiui;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

TEST_CASE("phase-difference CDF point values") {
    CHECK(phase_diff_cdf(0.0) == 0.5);
    CHECK(phase_diff_cdf(kPi) == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
    CHECK(phase_diff_cdf(kTwoPi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phase_diff_cdf(-kTwoPi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(phase_diff_cdf(7.0), DomainError);
    CHECK_THROWS_AS(phase_diff_cdf(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("phase-difference PDF shape and normalization") {
    CHECK(phase_diff_pdf(0.0) == doctest::Approx(1.0 / kTwoPi));
    CHECK(phase_diff_pdf(kTwoPi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(phase_diff_pdf(-kTwoPi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    const double total =
        testing::adaptive_simpson([](double g) { return phase_diff_pdf(g); }, -kTwoPi, 0.0,
                                  1e-13) +
        testing::adaptive_simpson([](double g) { return phase_diff_pdf(g); }, 0.0, kTwoPi,
                                  1e-13);
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("CDF is the antiderivative of the PDF") {
    for (int i = -40; i <= 40; ++i) {
        const double g = i * kTwoPi / 41.0;
        const double step = 1e-7;
        const double fd = (phase_diff_cdf(g + step) - phase_diff_cdf(g - step)) / (2.0 * step);
        CHECK(std::abs(fd - phase_diff_pdf(g)) < 1e-8);
    }
}

TEST_CASE("sampled phase differences follow the closed-form CDF") {
    SplitRng rng(2718);
    const std::size_t n = 1000000;
    std::vector<double> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = -kPi + kTwoPi * rng.next_unit();
        const double beta = -kPi + kTwoPi * rng.next_unit();
        samples.push_back(alpha - beta);
    }
    const double d = testing::ks_statistic(std::move(samples), phase_diff_cdf);
    CHECK(d < 0.0025);
}

TEST_CASE("expected cosine offset vanishes for any constant offset") {
    CHECK(std::abs(expected_cos_offset(0.0)) < 1e-10);
    CHECK(std::abs(expected_cos_offset(kPi / 3.0)) < 1e-10);
    SplitRng rng(5);
    for (int i = 0; i < 25; ++i) {
        const double theta = -10.0 + 20.0 * rng.next_unit();
        CHECK(std::abs(expected_cos_offset(theta)) < 1e-10);
        // Quadrature and antiderivative routes must agree.
        CHECK(std::abs(expected_cos_offset(theta) - expected_cos_offset_closed_form(theta)) <
              1e-12);
    }
}

TEST_CASE("Monte Carlo cross-check of the cosine lemma") {
    SplitRng rng(1618);
    const double theta = 1.2345;
    const std::size_t n = 10000000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = -kPi + kTwoPi * rng.next_unit();
        const double beta = -kPi + kTwoPi * rng.next_unit();
        acc += std::cos(alpha - beta - theta);
    }
    CHECK(std::abs(acc / static_cast<double>(n)) < 1e-3);
}

TEST_CASE("unknown-phase INP: silence is optimal") {
    const LinkMagnitudes mags{1.0, 1.0, 1.0};
    const PowerPair p{1.0, 1.0};

    CHECK(expected_inp_unknown_phase(mags, p, 1.0, 0.0) == doctest::Approx(2.0));

    double best_h = -1.0;
    double best = std::numeric_limits<double>::infinity();
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double h = 2.0 * i / 200.0;
        const double inp = expected_inp_unknown_phase(mags, p, 1.0, h);
        if (inp < best) {
            best = inp;
            best_h = h;
        }
        CHECK(inp > prev);  // strictly increasing on the grid
        prev = inp;
    }
    CHECK(best_h == 0.0);

    CHECK_THROWS_AS(expected_inp_unknown_phase({-1.0, 1.0, 1.0}, p, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(expected_inp_unknown_phase(mags, p, 0.0, 0.5), DomainError);
}

TEST_CASE("unknown-phase INP equals the silent narrowband INP at h = 0") {
    const LinkMagnitudes mags{0.7, 1.3, 2.1};
    const PowerPair p{1.7, 0.4};
    const auto link = deterministic_link({0.7, 0.0}, {1.3, 0.0}, {2.1, 0.0}, {0.0, 0.0}, 0.9);
    CHECK(expected_inp_unknown_phase(mags, p, 0.9, 0.0) ==
          doctest::Approx(interference_plus_noise_power(link, p, {0.0, 0.0}))
              .epsilon(1e-15));
}

TEST_CASE("phase-averaged narrowband INP matches the expectation formula") {
    const LinkMagnitudes mags{0.9, 1.4, 1.1};
    const PowerPair p{1.2, 0.8};
    const double s2 = 0.6;
    const double h_mag = 0.45;

    SplitRng rng(95);
    const std::size_t n = 1000000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double theta_d = -kPi + kTwoPi * rng.next_unit();
        const double theta_i = -kPi + kTwoPi * rng.next_unit();
        const auto link = deterministic_link(
            ComplexGain{mags.uplink, 0.0}, std::polar(mags.downlink, theta_d),
            std::polar(mags.interference, theta_i), ComplexGain{0.0}, s2);
        acc += interference_plus_noise_power(link, p, ComplexGain{h_mag, 0.0});
    }
    const double expected = expected_inp_unknown_phase(mags, p, s2, h_mag);
    CHECK(acc / static_cast<double>(n) == doctest::Approx(expected).epsilon(0.005));
}
