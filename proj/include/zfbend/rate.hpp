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
// Deterministic zero-forcing sum-rate R(rho) = n ln(1 + 10^(rho/10)/eta) and
// its bend-point analysis. The second derivative of R with respect to rho in
// dB peaks exactly where the high-SNR asymptote n ln(10^(rho/10)/eta) crosses
// zero, at rho = 10 log10(eta); the bend point and the asymptote intercept
// are the same SNR.

#pragma once

#include <cmath>
#include <utility>

#include "golden_section.hpp"
#include "types.hpp"

namespace zfbend {

/// Bend point of the deterministic sum-rate with the matching asymptote
/// intercept (they coincide), the rate at the bend (n ln 2), and the peak
/// second-derivative value n (ln(10)/10)^2 / 4 in nats/dB^2.
struct BendResult {
    SnrDb rho_bend;
    SnrDb rho_int;
    RateNats rate_at_bend;
    double r2_max;
};

/// Sum-rate over n users, R = n ln(1 + 10^(rho/10)/eta), in nats.
inline RateNats sum_rate(SnrDb rho, double eta, int n) {
    detail::require_eta(eta);
    detail::require_antennas(n);
    return RateNats{double(n) * std::log1p(snr_linear(rho) / eta)};
}

/// Derivative of the sum-rate with respect to rho in dB, order 1, 2 or 3.
/// With c = ln(10)/10 and x = 10^(rho/10):
///   R'   = n c   x / (eta + x)
///   R''  = n c^2 eta x / (eta + x)^2
///   R''' = n c^3 eta x (eta - x) / (eta + x)^3
inline double rate_derivative(SnrDb rho, double eta, int n, int order) {
    detail::require_eta(eta);
    detail::require_antennas(n);
    const double c = kLn10Over10;
    const double x = snr_linear(rho);
    const double s = eta + x;
    switch (order) {
        case 1:
            return double(n) * c * x / s;
        case 2:
            return double(n) * c * c * eta * x / (s * s);
        case 3:
            return double(n) * c * c * c * eta * x * (eta - x) / (s * s * s);
        default:
            throw std::invalid_argument("rate_derivative: order must be 1, 2 or 3");
    }
}

/// High-SNR asymptote n ln(10^(rho/10)/eta): a line in rho, may be negative.
inline double high_snr_asymptote(SnrDb rho, double eta, int n) {
    detail::require_eta(eta);
    detail::require_antennas(n);
    return double(n) * (kLn10Over10 * rho.db - std::log(eta));
}

/// SNR where the high-SNR asymptote crosses R = 0: rho_int = 10 log10(eta).
inline SnrDb intercept(double eta) {
    detail::require_eta(eta);
    return SnrDb{10.0 * std::log10(eta)};
}

/// Closed-form bend point. At the bend x = eta, so the rate is n ln 2 and
/// the second derivative attains its peak n c^2 / 4.
inline BendResult bend_point_analytic(double eta, int n) {
    detail::require_antennas(n);
    const SnrDb rho = intercept(eta);
    return BendResult{rho, rho, sum_rate(rho, eta, n),
                      double(n) * kLn10Over10 * kLn10Over10 / 4.0};
}

/// Locate the argmax of a second-derivative function of SNR on a bracket by
/// golden-section search. The bracket must contain the peak.
template <class F>
SnrDb bend_point_numeric(F&& second_deriv, SnrDb lo, SnrDb hi, double tol_db = 1e-6) {
    auto fn = [&second_deriv](double db) { return second_deriv(SnrDb{db}); };
    return SnrDb{golden_section_max(fn, lo.db, hi.db, tol_db)};
}

/// Numeric bend of the closed-form R'' on the default bracket
/// [rho_int - 40, rho_int + 40] dB.
inline SnrDb bend_point_numeric(double eta, int n) {
    detail::require_eta(eta);
    detail::require_antennas(n);
    const double center = intercept(eta).db;
    return bend_point_numeric(
        [eta, n](SnrDb rho) { return rate_derivative(rho, eta, n, 2); },
        SnrDb{center - 40.0}, SnrDb{center + 40.0});
}

}  // namespace zfbend
