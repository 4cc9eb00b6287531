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

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <system_error>
#include <vector>

#include "ergodic.hpp"
#include "rate.hpp"
#include "series.hpp"

namespace zfbend {

namespace detail {

inline std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open output file: " + path.string());
    return os;
}

}  // namespace detail

/// Emit the data files behind the three analysis figures into out_dir.
///   2: deterministic R''(rho) for eta = 1 over [-30, 30] dB;
///   3: ergodic curves for n = 1, 2 plus their intercept markers;
///   4: ergodic curves and asymptotes for an antenna set (default {1,2,4})
///      plus intercept markers.
/// Curves go to fig<k>.csv, markers to fig<k>_markers.csv. Returns the
/// paths written.
inline std::vector<std::filesystem::path> emit_figure_data(
    int which, const std::filesystem::path& out_dir, std::span<const int> n_list = {}) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);  // open_csv reports failures

    std::vector<fs::path> written;
    auto emit_curves = [&](const std::string& name, std::span<const CurveSeries> curves) {
        const fs::path path = out_dir / name;
        std::ofstream os = detail::open_csv(path);
        write_csv(os, curves);
        written.push_back(path);
    };
    auto emit_markers = [&](const std::string& name, std::span<const MarkerRow> rows) {
        const fs::path path = out_dir / name;
        std::ofstream os = detail::open_csv(path);
        write_markers_csv(os, rows);
        written.push_back(path);
    };

    switch (which) {
        case 2: {
            const auto grid = snr_grid(SnrDb{-30.0}, SnrDb{30.0}, 0.25);
            const CurveSeries curve = sample_series(
                "r2_nats_per_db2", grid,
                [](SnrDb rho) { return rate_derivative(rho, 1.0, 1, 2); });
            emit_curves("fig2.csv", std::span<const CurveSeries>(&curve, 1));
            break;
        }
        case 3: {
            const auto grid = snr_grid(SnrDb{-10.0}, SnrDb{30.0}, 0.25);
            std::vector<CurveSeries> curves;
            std::vector<MarkerRow> markers;
            for (int n : {1, 2}) {
                curves.push_back(sample_series(
                    "ergodic_n" + std::to_string(n), grid,
                    [n](SnrDb rho) { return ergodic_rate(rho, n).nats; }));
                markers.push_back({n, ergodic_intercept(n), rate_at_ergodic_intercept(n).nats});
            }
            emit_curves("fig3.csv", curves);
            emit_markers("fig3_markers.csv", markers);
            break;
        }
        case 4: {
            std::vector<int> antennas(n_list.begin(), n_list.end());
            if (antennas.empty()) antennas = {1, 2, 4};
            const auto grid = snr_grid(SnrDb{-10.0}, SnrDb{30.0}, 0.25);
            std::vector<CurveSeries> curves;
            std::vector<MarkerRow> markers;
            for (int n : antennas) {
                detail::require_antennas(n);
                curves.push_back(sample_series(
                    "ergodic_n" + std::to_string(n), grid,
                    [n](SnrDb rho) { return ergodic_rate(rho, n).nats; }));
                curves.push_back(sample_series(
                    "asymptote_n" + std::to_string(n), grid,
                    [n](SnrDb rho) { return ergodic_asymptote(rho, n); }));
                markers.push_back({n, ergodic_intercept(n), rate_at_ergodic_intercept(n).nats});
            }
            emit_curves("fig4.csv", curves);
            emit_markers("fig4_markers.csv", markers);
            break;
        }
        default:
            throw std::invalid_argument("emit_figure_data: which must be 2, 3 or 4");
    }
    return written;
}

}  // namespace zfbend
