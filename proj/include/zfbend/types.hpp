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

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zfbend {

// d/d(rho) of ln(10^(rho/10)): one dB adds this many nats to ln(SNR).
inline constexpr double kLn10Over10 = std::numbers::ln10 / 10.0;

/// SNR in decibels, rho = 10*log10(P/sigma^2). All rate functions take the
/// dB value directly; derivatives are with respect to dB.
struct SnrDb {
    double db{};
    friend constexpr auto operator<=>(SnrDb, SnrDb) = default;
};

/// Rate in nats (natural-log units).
struct RateNats {
    double nats{};
    friend constexpr auto operator<=>(RateNats, RateNats) = default;
};

/// Linear-scale SNR 10^(rho/10).
inline double snr_linear(SnrDb rho) { return std::exp(rho.db * kLn10Over10); }

namespace detail {

inline void require_eta(double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
}

inline void require_antennas(int n) {
    if (n < 1) throw std::invalid_argument("antenna count n must be >= 1");
}

}  // namespace detail

}  // namespace zfbend
