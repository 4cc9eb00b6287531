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
#include <stdexcept>
#include <utility>

#include "complex_mat.hpp"
#include "rng.hpp"

namespace zfbend {

/// A channel matrix H with its cached inverse and the hardness scalar
/// eta = ||H^-1||_F^2, the power penalty of inverting the channel.
struct ChannelRealization {
    ComplexMat h;
    ComplexMat h_inv;
    double eta;
};

/// Zero-forcing precoder V = H^-1 / ||H^-1||_F, unit Frobenius norm.
struct Precoder {
    ComplexMat v;
};

/// N x N Rayleigh draw: i.i.d. CN(0,1) entries (real/imag components
/// N(0, 1/2)), filled row-major from a SplitMix64 stream seeded with `seed`.
/// Deterministic per (n, seed).
inline ComplexMat sample_rayleigh(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_rayleigh: n must be >= 1");
    constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
    SplitMix64 rng(seed);
    ComplexMat h(n);
    for (Complex& entry : h.entries()) {
        const auto [a, b] = normal_pair(rng);
        entry = Complex(a * kInvSqrt2, b * kInvSqrt2);
    }
    return h;
}

/// Invert H and attach eta = ||H^-1||_F^2. Propagates SingularMatrixError.
inline ChannelRealization realize_channel(const ComplexMat& h) {
    if (!all_finite(h)) throw std::invalid_argument("realize_channel: non-finite channel entry");
    ComplexMat h_inv = lu_invert(h);
    const double eta = frobenius_sq(h_inv);
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw std::invalid_argument("realize_channel: eta is not a positive finite number");
    return ChannelRealization{h, std::move(h_inv), eta};
}

/// Normalize the cached inverse to unit Frobenius norm.
inline Precoder zf_precoder(const ChannelRealization& c) {
    const double inv_norm = 1.0 / std::sqrt(c.eta);
    ComplexMat v = c.h_inv;
    for (Complex& e : v.entries()) e *= inv_norm;
    return Precoder{std::move(v)};
}

}  // namespace zfbend
