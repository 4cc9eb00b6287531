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
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "format.hpp"
#include "types.hpp"

namespace zfbend {

struct CurvePoint {
    SnrDb rho;
    double value;
};

/// One sampled curve: a label and points strictly increasing in rho.
struct CurveSeries {
    std::string label;
    std::vector<CurvePoint> points;
};

/// Marker point for the *_markers.csv sidecar files.
struct MarkerRow {
    int n;
    SnrDb rho;
    double rate_nats;
};

/// Inclusive dB grid rho_min, rho_min + step, ..., rho_max.
inline std::vector<SnrDb> snr_grid(SnrDb rho_min, SnrDb rho_max, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("snr_grid: step must be > 0");
    if (!(rho_min.db < rho_max.db))
        throw std::invalid_argument("snr_grid: rho-min must be < rho-max");
    const auto count = std::size_t(std::floor((rho_max.db - rho_min.db) / step + 1e-9));
    std::vector<SnrDb> grid(count + 1);
    for (std::size_t i = 0; i <= count; ++i) grid[i] = SnrDb{rho_min.db + double(i) * step};
    return grid;
}

/// Sample a scalar function of SNR over a grid into a labelled series.
template <class F>
CurveSeries sample_series(std::string label, std::span<const SnrDb> grid, F&& f) {
    CurveSeries series{std::move(label), {}};
    series.points.reserve(grid.size());
    for (SnrDb rho : grid) series.points.push_back({rho, f(rho)});
    return series;
}

/// Write series sharing one grid as CSV: header "rho_db,<label>[,<label>...]"
/// then one row per rho, 12 significant digits throughout. The CLI performs
/// no arithmetic here; cells are formatted library outputs.
inline void write_csv(std::ostream& os, std::span<const CurveSeries> series) {
    if (series.empty()) throw std::invalid_argument("write_csv: no series given");
    const std::vector<CurvePoint>& lead = series.front().points;
    for (const CurveSeries& s : series) {
        if (s.points.size() != lead.size())
            throw std::invalid_argument("write_csv: series lengths differ");
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (s.points[i].rho != lead[i].rho)
                throw std::invalid_argument("write_csv: series grids differ");
            if (i + 1 < s.points.size() && !(s.points[i].rho < s.points[i + 1].rho))
                throw std::invalid_argument("write_csv: points must be strictly increasing in rho");
        }
    }
    os << "rho_db";
    for (const CurveSeries& s : series) os << ',' << s.label;
    os << '\n';
    for (std::size_t i = 0; i < lead.size(); ++i) {
        os << format_value(lead[i].rho.db);
        for (const CurveSeries& s : series) os << ',' << format_value(s.points[i].value);
        os << '\n';
    }
    if (!os) throw IoError("write_csv: stream write failed");
}

inline void write_csv(std::ostream& os, const CurveSeries& series) {
    write_csv(os, std::span<const CurveSeries>(&series, 1));
}

inline void write_markers_csv(std::ostream& os, std::span<const MarkerRow> rows) {
    os << "n,rho_db,rate_nats\n";
    for (const MarkerRow& r : rows)
        os << r.n << ',' << format_value(r.rho.db) << ',' << format_value(r.rate_nats) << '\n';
    if (!os) throw IoError("write_markers_csv: stream write failed");
}

}  // namespace zfbend
