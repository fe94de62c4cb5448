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

/// Exponential integral E1(x) = integral_x^inf exp(-t)/t dt, x > 0.
///
/// Power series for x <= 1, modified-Lentz continued fraction above.
/// Relative error below 1e-10 on [1e-8, 700].
double exp_integral_e1(double x);

/// Ei(-x) = -E1(x) for x > 0; strictly negative.
double exp_integral_ei_neg(double x);

/// exp(x) * E1(x), stable for large x where the factors over/underflow.
double exp_scaled_e1(double x);

}  // namespace fdiui
