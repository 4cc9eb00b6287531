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
// Ergodic Rayleigh-fading sum-rate under zero-forcing,
//   R_E(rho) = n e^z E1(z)  with  z = n 10^(-rho/10),
// the closed form of int_0^inf n ln(1 + 10^(rho/10) g / n) e^(-g) dg over the
// exponential effective gain g. Includes its high-SNR asymptote, the
// asymptote's zero-rate intercept, the per-antenna rate constant at that
// intercept (~0.8618 nats), and the numerically located bend point.

#pragma once

#include <cmath>

#include "exp_integral.hpp"
#include "golden_section.hpp"
#include "types.hpp"

namespace zfbend {

namespace detail {

// z = n / 10^(rho/10): the E1 argument; depends on n and rho only through
// this ratio, which is what makes the bend-to-intercept gap n-independent.
inline double ergodic_e1_argument(SnrDb rho, int n) {
    return double(n) * std::exp(-rho.db * kLn10Over10);
}

}  // namespace detail

/// Ergodic sum-rate approximation R_E = n e^z E1(z), z = n 10^(-rho/10).
inline RateNats ergodic_rate(SnrDb rho, int n) {
    detail::require_antennas(n);
    return RateNats{double(n) * exp_integral_e1_scaled(detail::ergodic_e1_argument(rho, n))};
}

/// High-SNR asymptote n (rho ln(10)/10 - gamma - ln n): a line in rho.
inline double ergodic_asymptote(SnrDb rho, int n) {
    detail::require_antennas(n);
    return double(n) * (kLn10Over10 * rho.db - kEulerGamma - std::log(double(n)));
}

/// Intercept of the ergodic asymptote with R = 0: 10 (gamma + ln n) / ln 10.
inline SnrDb ergodic_intercept(int n) {
    detail::require_antennas(n);
    return SnrDb{10.0 * (kEulerGamma + std::log(double(n))) / std::numbers::ln10};
}

/// Ergodic rate at the asymptote intercept: exactly
/// n e^(e^(-gamma)) E1(e^(-gamma)) = 0.86177...n. Each added antenna adds
/// this constant to the rate at the respective intercept.
inline RateNats rate_at_ergodic_intercept(int n) {
    detail::require_antennas(n);
    return RateNats{double(n) * exp_integral_e1_scaled(std::exp(-kEulerGamma))};
}

/// Second derivative of the ergodic rate with respect to rho in dB:
///   R_E'' = n c^2 z ((1 + z) e^z E1(z) - 1),  c = ln(10)/10.
inline double ergodic_rate_deriv2(SnrDb rho, int n) {
    detail::require_antennas(n);
    const double z = detail::ergodic_e1_argument(rho, n);
    const double c = kLn10Over10;
    return double(n) * c * c * z * ((1.0 + z) * exp_integral_e1_scaled(z) - 1.0);
}

/// Bend point of the ergodic rate: golden-section argmax of R_E'' over
/// [rho_int - 20, rho_int + 20] dB. The peak sits at a fixed z, about
/// 1.07 dB below the intercept for every n, so the bracket always holds it.
inline SnrDb ergodic_bend_numeric(int n) {
    detail::require_antennas(n);
    const double center = ergodic_intercept(n).db;
    return SnrDb{golden_section_max(
        [n](double db) { return ergodic_rate_deriv2(SnrDb{db}, n); },
        center - 20.0, center + 20.0, 1e-5)};
}

}  // namespace zfbend
