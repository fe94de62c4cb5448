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
#include <stdexcept>
#include <string>

namespace fdiui {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Downlink channel vanished; suppression coefficients are undefined.
struct DegenerateChannelError : DomainError {
    using DomainError::DomainError;
};

/// The BS retransmission loop diverges (pole of 1/(1 - residual_si * h)).
struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finding failed to bracket or converge.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested zero samples / zero trials.
struct EmptyRequestError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Channel-plus-filter memory exceeds the cyclic prefix; the circular
/// convolution model no longer describes the frame.
struct CyclicPrefixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

inline void check_finite(std::complex<double> v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

inline void check_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

inline void check_non_negative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be non-negative and finite");
    }
}

}  // namespace detail
}  // namespace fdiui
