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
#include <cstdint>
#include <numbers>
#include <utility>

namespace zfbend {

/// SplitMix64 (Steele, Lea & Flood, OOPSLA 2014). Fixed published sequence;
/// every random draw in this library comes from it, so fixtures reproduce
/// bit-for-bit across implementations.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// The SplitMix64 output function as a standalone 64-bit mixer.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-derived stream seed mix64(seed ^ mix64(index)): gives item
/// `index` its own generator state, so results do not depend on evaluation
/// order or worker count.
inline constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index));
}

/// Uniform on (0, 1], 53-bit resolution; safe under log().
inline double uniform_open0(SplitMix64& rng) noexcept {
    return double((rng.next() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform on [0, 1), 53-bit resolution.
inline double uniform_halfopen(SplitMix64& rng) noexcept {
    return double(rng.next() >> 11) * 0x1.0p-53;
}

/// Exp(1) draw by inverse CDF: -ln(u), u uniform on (0, 1].
inline double exponential1(SplitMix64& rng) noexcept { return -std::log(uniform_open0(rng)); }

/// Two independent N(0,1) draws via the Box-Muller transform of one
/// (0,1] x [0,1) uniform pair, consumed in that order.
inline std::pair<double, double> normal_pair(SplitMix64& rng) noexcept {
    const double u1 = uniform_open0(rng);
    const double u2 = uniform_halfopen(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace zfbend
