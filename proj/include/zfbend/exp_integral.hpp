// SPDX-License-Identifier: Apache-2.0
//
// zfbend - sum-rate bend-point analysis for zero-forcing multiuser MIMO
// Copyright (C) 2026 The zfbend authors
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
//
// Exponential integral E1(x) = int_x^inf e^(-t)/t dt for x > 0, split the
// classical way: alternating power series up to x = 1, modified Lentz
// continued fraction above. Relative error is below 1e-12 across
// [1e-8, 700] (see the test suite's quadrature oracle).

#pragma once

#include <cmath>
#include <stdexcept>

namespace zfbend {

/// Euler-Mascheroni constant (20 significant digits).
inline constexpr double kEulerGamma = 0.57721566490153286061;

namespace detail {

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!), for 0 < x <= 1.
inline double e1_series(double x) {
    double sum = -kEulerGamma - std::log(x) + x;
    double term = x;
    for (int k = 2; k <= 80; ++k) {
        term *= -x * double(k - 1) / (double(k) * double(k));
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// Modified Lentz evaluation of
//   e^x E1(x) = 1/(x+1-) 1^2/(x+3-) 2^2/(x+5-) ...
// for x > 1. Returns the scaled value e^x E1(x); ~90 iterations at the
// x = 1 boundary, a handful for large x.
inline double e1_continued_fraction_scaled(double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -double(i) * double(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace detail

/// E1(x) for x > 0. Underflows to zero beyond x ~ 745.
inline double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: x must be > 0");
    return x <= 1.0 ? detail::e1_series(x)
                    : detail::e1_continued_fraction_scaled(x) * std::exp(-x);
}

/// Scaled form e^x E1(x). Stays representable for large x where E1 itself
/// underflows; this is the quantity the ergodic rate needs.
inline double exp_integral_e1_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1_scaled: x must be > 0");
    return x <= 1.0 ? std::exp(x) * detail::e1_series(x)
                    : detail::e1_continued_fraction_scaled(x);
}

}  // namespace zfbend
