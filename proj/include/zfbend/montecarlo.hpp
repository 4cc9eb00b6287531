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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "channel.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace zfbend {

/// Monte Carlo sample mean with its standard error. Bit-for-bit reproducible
/// from (inputs, seed, samples) for any worker count.
struct McEstimate {
    double mean;
    double std_error;
    std::uint64_t samples;
    std::uint64_t seed;
    std::uint64_t resampled;  // singular channel draws replaced; expected 0
};

/// Absolute difference and z-score of an estimate against an analytic value.
struct ComparisonReport {
    double abs_diff;
    double z_score;
};

namespace detail {

// Deterministic chunked reduction. Sample values accumulate into fixed
// 4096-sample chunks in index order; workers may claim chunks in any order;
// the final reduction walks chunks in index order. The reported sums are
// therefore independent of the worker count and of chunk completion order.
struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t resampled = 0;
};

template <class PerSample>
McEstimate mc_run(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                  PerSample per_sample) {
    if (samples < 2)
        throw std::invalid_argument("samples must be >= 2 (standard error undefined)");
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkSums> chunks(n_chunks);

    auto run_chunk = [&](std::uint64_t ci) {
        ChunkSums s;
        const std::uint64_t end = std::min(samples, (ci + 1) * kChunk);
        for (std::uint64_t i = ci * kChunk; i < end; ++i) {
            std::uint64_t attempts = 0;
            const double v = per_sample(i, attempts);
            s.sum += v;
            s.sum_sq += v * v;
            s.resampled += attempts;
        }
        chunks[ci] = s;
    };

    if (workers <= 1) {
        for (std::uint64_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t ci; (ci = next.fetch_add(1)) < n_chunks;) run_chunk(ci);
            });
        for (std::thread& t : pool) t.join();
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t resampled = 0;
    for (const ChunkSums& s : chunks) {
        sum += s.sum;
        sum_sq += s.sum_sq;
        resampled += s.resampled;
    }
    const double mean = sum / double(samples);
    double variance = (sum_sq - double(samples) * mean * mean) / double(samples - 1);
    if (variance < 0.0) variance = 0.0;  // round-off guard
    return McEstimate{mean, std::sqrt(variance / double(samples)), samples, seed, resampled};
}

}  // namespace detail

/// Sample mean of n ln(1 + 10^(rho/10) g / n) over g ~ Exp(1): the sampled
/// form of the ergodic-rate integral. Sample i draws from its own stream
/// seeded stream_seed(seed, i).
inline McEstimate mc_ergodic_exponential(SnrDb rho, int n, std::uint64_t samples,
                                         std::uint64_t seed, unsigned workers = 1) {
    detail::require_antennas(n);
    const double snr_over_n = snr_linear(rho) / double(n);
    return detail::mc_run(samples, seed, workers,
                          [snr_over_n, n, seed](std::uint64_t i, std::uint64_t&) {
                              SplitMix64 rng(stream_seed(seed, i));
                              return double(n) * std::log1p(snr_over_n * exponential1(rng));
                          });
}

/// Sample mean of the exact ZF sum-rate n ln(1 + 10^(rho/10)/eta) over
/// Rayleigh draws of H. A singular draw is replaced from a fresh
/// counter-derived stream and counted in `resampled`; any nonzero count
/// signals a numerics problem and is surfaced in the estimate.
inline McEstimate mc_ergodic_zf(SnrDb rho, int n, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 1) {
    detail::require_antennas(n);
    const double snr = snr_linear(rho);
    const auto dim = std::size_t(n);
    return detail::mc_run(samples, seed, workers,
                          [snr, n, dim, seed](std::uint64_t i, std::uint64_t& attempts) {
                              const std::uint64_t base = stream_seed(seed, i);
                              for (;;) {
                                  const std::uint64_t mat_seed =
                                      attempts == 0 ? base : stream_seed(base, attempts);
                                  try {
                                      const double eta =
                                          realize_channel(sample_rayleigh(dim, mat_seed)).eta;
                                      return double(n) * std::log1p(snr / eta);
                                  } catch (const SingularMatrixError&) {
                                      ++attempts;
                                  }
                              }
                          });
}

inline ComparisonReport compare(const McEstimate& est, double analytic) {
    if (!(est.std_error > 0.0))
        throw std::invalid_argument("compare: standard error must be > 0");
    const double abs_diff = std::fabs(est.mean - analytic);
    return ComparisonReport{abs_diff, abs_diff / est.std_error};
}

}  // namespace zfbend
