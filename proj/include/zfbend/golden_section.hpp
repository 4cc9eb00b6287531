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

#include <stdexcept>

namespace zfbend {

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Returns the bracket midpoint once the bracket width falls below tol.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
    if (!(hi > lo)) throw std::invalid_argument("golden_section_max: degenerate bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("golden_section_max: tol must be > 0");
    constexpr double kInvPhi = 0.61803398874989484820;  // (sqrt(5) - 1) / 2
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 500 && (b - a) > tol; ++iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace zfbend
