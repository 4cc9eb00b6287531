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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <zfbend/ergodic.hpp>

#include "oracles.hpp"

using namespace zfbend;

namespace {
// Rate per antenna at the ergodic intercept: e^(e^-gamma) E1(e^-gamma).
constexpr double kInterceptRateConst = 0.86177237646355856273;
// n-independent intercept-minus-bend gap, 10 (gamma + ln z*) / ln 10 with
// z* the argmax of z((1+z)e^z E1(z) - 1); pre-computed by grid search.
constexpr double kBendGapDb = 1.0749891665384388;
}  // namespace

TEST_CASE("ergodic_rate pinned values") {
    // Value at the (rounded) n=1 intercept SNR.
    CHECK(ergodic_rate(SnrDb{2.5068}, 1).nats ==
          Catch::Approx(0.86177050088523559184).epsilon(1e-12));
    CHECK(ergodic_rate(SnrDb{-200.0}, 1).nats < 1e-6);
    // n=2 at 10 dB: exactly 2 e^0.2 E1(0.2).
    CHECK(ergodic_rate(SnrDb{10.0}, 2).nats ==
          Catch::Approx(2.9866974938644792237).epsilon(1e-12));
    CHECK_THROWS_AS(ergodic_rate(SnrDb{0.0}, 0), std::invalid_argument);
}

TEST_CASE("ergodic_rate matches quadrature of its defining integral") {
    for (int n : {1, 2, 4, 8}) {
        for (double rho : {-10.0, 0.0, 5.0, 10.0, 25.0}) {
            const double closed = ergodic_rate(SnrDb{rho}, n).nats;
            const double integral = double(n) * oracle::ergodic_gain_integral(rho, n);
            INFO("n = " << n << ", rho = " << rho);
            CHECK(oracle::rel_err(closed, integral) < 1e-9);
        }
    }
}

TEST_CASE("ergodic_asymptote pinned values and slope") {
    CHECK(std::fabs(ergodic_asymptote(SnrDb{2.5068157813485223}, 1)) < 1e-14);
    CHECK(ergodic_asymptote(SnrDb{0.0}, 2) ==
          Catch::Approx(-2.5407256909229563400).epsilon(1e-14));
    for (int n : {1, 2, 5, 11}) {
        const double slope = ergodic_asymptote(SnrDb{13.0}, n) - ergodic_asymptote(SnrDb{12.0}, n);
        CHECK(slope == Catch::Approx(double(n) * kLn10Over10).epsilon(1e-12));
    }
}

TEST_CASE("ergodic_intercept pinned values and monotonicity") {
    CHECK(ergodic_intercept(1).db == Catch::Approx(2.5068157813485223407).epsilon(1e-14));
    CHECK(ergodic_intercept(2).db == Catch::Approx(5.5171157379883342929).epsilon(1e-14));
    for (int n = 1; n < 16; ++n) CHECK(ergodic_intercept(n + 1).db > ergodic_intercept(n).db);
}

TEST_CASE("rate at the ergodic intercept is 0.86177...n") {
    CHECK(rate_at_ergodic_intercept(1).nats ==
          Catch::Approx(kInterceptRateConst).epsilon(1e-13));
    CHECK(rate_at_ergodic_intercept(2).nats - rate_at_ergodic_intercept(1).nats ==
          Catch::Approx(kInterceptRateConst).epsilon(1e-12));
    for (int n = 1; n <= 16; ++n) {
        CHECK(oracle::rel_err(rate_at_ergodic_intercept(n).nats / double(n),
                              kInterceptRateConst) < 1e-14);
        // Consistency with evaluating the curve at the intercept.
        CHECK(oracle::rel_err(ergodic_rate(ergodic_intercept(n), n).nats,
                              rate_at_ergodic_intercept(n).nats) < 1e-12);
    }
}

TEST_CASE("ergodic curve approaches its asymptote at high SNR") {
    CHECK(std::fabs(ergodic_rate(SnrDb{40.0}, 1).nats - ergodic_asymptote(SnrDb{40.0}, 1)) < 0.01);
    const double diff_30 = std::fabs(ergodic_rate(SnrDb{30.0}, 1).nats -
                                     ergodic_asymptote(SnrDb{30.0}, 1));
    const double diff_40 = std::fabs(ergodic_rate(SnrDb{40.0}, 1).nats -
                                     ergodic_asymptote(SnrDb{40.0}, 1));
    CHECK(diff_40 < diff_30);
}

TEST_CASE("per-antenna rate depends only on rho - 10 log10(n)") {
    for (int n : {2, 4, 9}) {
        for (double rho : {-5.0, 0.0, 7.5, 22.0}) {
            const double shifted =
                double(n) * ergodic_rate(SnrDb{rho - 10.0 * std::log10(double(n))}, 1).nats;
            CHECK(oracle::rel_err(ergodic_rate(SnrDb{rho}, n).nats, shifted) < 1e-12);
        }
    }
}

TEST_CASE("closed-form ergodic second derivative matches finite differences") {
    const double h = 1e-3;
    for (int n : {1, 2, 8}) {
        const double bend = ergodic_bend_numeric(n).db;
        for (double delta : {-8.0, -4.0, -1.0, 0.0, 1.5, 4.0, 8.0}) {
            const double rho = bend + delta;
            const double fd = oracle::central_diff_2(
                [n](double r) { return ergodic_rate(SnrDb{r}, n).nats; }, rho, h);
            CHECK(oracle::rel_err(ergodic_rate_deriv2(SnrDb{rho}, n), fd) < 1e-6);
        }
    }
}

TEST_CASE("ergodic bend: golden section agrees with a dense grid search") {
    // Exhaustive 1 mdB grid over [-20, 20] as the argmax oracle for n = 1.
    double best_rho = -20.0;
    double best_val = ergodic_rate_deriv2(SnrDb{-20.0}, 1);
    for (int i = 1; i <= 40000; ++i) {
        const double rho = -20.0 + double(i) * 1e-3;
        const double v = ergodic_rate_deriv2(SnrDb{rho}, 1);
        if (v > best_val) {
            best_val = v;
            best_rho = rho;
        }
    }
    const double numeric = ergodic_bend_numeric(1).db;
    CHECK(std::fabs(numeric - best_rho) < 1e-3);
    // The bend sits below the intercept, within ~1.5 dB.
    const double gap = ergodic_intercept(1).db - numeric;
    CHECK(gap > 0.0);
    CHECK(gap < 1.5);
}

TEST_CASE("intercept-to-bend gap is the same constant for every n") {
    for (int n : {1, 2, 4, 8}) {
        const double gap = ergodic_intercept(n).db - ergodic_bend_numeric(n).db;
        CHECK(gap == Catch::Approx(kBendGapDb).margin(1e-3));
    }
}
