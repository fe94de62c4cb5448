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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace fdiui {

/// Seedable, splittable counter-based generator (splitmix64 core).
///
/// split(i) derives a statistically independent stream from the parent
/// state and the stream index only, so one stream per Monte Carlo trial
/// yields the same draws no matter how trials are scheduled across
/// threads. Not cryptographic.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) noexcept : state_(seed) {}

    /// Child generator for logical stream `stream`; does not advance *this.
    [[nodiscard]] SplitRng split(std::uint64_t stream) const noexcept {
        return SplitRng(mix(state_ ^ mix(stream + kGamma)));
    }

    std::uint64_t next_u64() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Circularly symmetric complex Gaussian, CN(0, variance).
    /// Box-Muller on two uniforms; |result|^2 is Exp(mean = variance) exactly.
    std::complex<double> next_cgaussian(double variance) noexcept {
        const double u1 = 1.0 - next_unit();  // (0, 1]
        const double u2 = next_unit();
        const double radius = std::sqrt(-variance * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace fdiui
