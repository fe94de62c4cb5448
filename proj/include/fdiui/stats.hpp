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
#include <cstddef>
#include <span>

namespace fdiui {

/// Neumaier compensated sum in index order.
inline double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

struct MeanStdErr {
    double mean;
    double std_error;
};

/// Two-pass compensated mean and standard error of the mean.
inline MeanStdErr mean_std_error(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) {
        return {0.0, 0.0};
    }
    const double mean = compensated_sum(values) / static_cast<double>(n);
    if (n == 1) {
        return {mean, 0.0};
    }
    double sq = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double d = (v - mean) * (v - mean);
        const double t = sq + d;
        comp += (std::abs(sq) >= d) ? (sq - t) + d : (d - t) + sq;
        sq = t;
    }
    const double var = (sq + comp) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace fdiui
