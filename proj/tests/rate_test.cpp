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

#include <zfbend/rate.hpp>

#include "oracles.hpp"

using namespace zfbend;

namespace {
constexpr double kC = kLn10Over10;
const double kEtaSet[] = {0.1, 1.0, 2.5, 10.0, 37.2};
}  // namespace

TEST_CASE("sum_rate pinned values") {
    CHECK(sum_rate(SnrDb{0.0}, 1.0, 1).nats == Catch::Approx(std::numbers::ln2).epsilon(1e-15));
    // 2 ln(11), high-precision direct evaluation
    CHECK(sum_rate(SnrDb{10.0}, 1.0, 2).nats ==
          Catch::Approx(4.7957905455967410881).epsilon(1e-14));
    CHECK(sum_rate(SnrDb{-200.0}, 1.0, 1).nats < 1e-18);
    CHECK(sum_rate(SnrDb{-200.0}, 3.7, 4).nats < 1e-18);
}

TEST_CASE("sum_rate validates inputs") {
    CHECK_THROWS_AS(sum_rate(SnrDb{0.0}, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sum_rate(SnrDb{0.0}, -2.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sum_rate(SnrDb{0.0}, 1.0, 0), std::invalid_argument);
}

TEST_CASE("rate_derivative pinned values") {
    // Third derivative vanishes where x = eta, i.e. at rho = 10 log10(eta).
    for (double eta : kEtaSet) {
        const double rho = 10.0 * std::log10(eta);
        CHECK(std::fabs(rate_derivative(SnrDb{rho}, eta, 1, 3)) < 1e-12);
    }
    // R'' at x = eta is c^2/4 per antenna.
    CHECK(rate_derivative(SnrDb{0.0}, 1.0, 1, 2) ==
          Catch::Approx(0.013254745276195995).epsilon(1e-14));
    // Asymptotic slope in nats/dB.
    for (int n : {1, 3}) {
        CHECK(std::fabs(rate_derivative(SnrDb{200.0}, 1.0, n, 1) - double(n) * kC) < 1e-12);
    }
}

TEST_CASE("rate_derivative rejects bad order") {
    CHECK_THROWS_AS(rate_derivative(SnrDb{0.0}, 1.0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(rate_derivative(SnrDb{0.0}, 1.0, 1, 4), std::invalid_argument);
}

TEST_CASE("derivatives match central finite differences of the lower order") {
    const double h = 1e-3;
    for (double eta : {1.0, 2.5, 10.0}) {
        const double center = 10.0 * std::log10(eta);
        for (double delta : {-25.0, -15.0, -8.0, -4.0, -2.0, 2.0, 4.0, 8.0, 15.0, 25.0}) {
            const double rho = center + delta;
            const int n = 2;
            const auto rate_fn = [&](double r) { return sum_rate(SnrDb{r}, eta, n).nats; };
            const auto d1_fn = [&](double r) { return rate_derivative(SnrDb{r}, eta, n, 1); };
            const auto d2_fn = [&](double r) { return rate_derivative(SnrDb{r}, eta, n, 2); };

            CHECK(oracle::rel_err(rate_derivative(SnrDb{rho}, eta, n, 1),
                                  oracle::central_diff_1(rate_fn, rho, h)) < 1e-6);
            CHECK(oracle::rel_err(rate_derivative(SnrDb{rho}, eta, n, 2),
                                  oracle::central_diff_1(d1_fn, rho, h)) < 1e-6);
            CHECK(oracle::rel_err(rate_derivative(SnrDb{rho}, eta, n, 3),
                                  oracle::central_diff_1(d2_fn, rho, h)) < 1e-6);
        }
    }
}

TEST_CASE("high_snr_asymptote pinned values") {
    CHECK(high_snr_asymptote(SnrDb{0.0}, 1.0, 1) == 0.0);
    CHECK(std::fabs(high_snr_asymptote(SnrDb{10.0}, 10.0, 3)) < 1e-14);
    CHECK(high_snr_asymptote(SnrDb{20.0}, 1.0, 1) ==
          Catch::Approx(4.6051701859880913680).epsilon(1e-14));
}

TEST_CASE("intercept pinned values") {
    CHECK(intercept(1.0).db == 0.0);
    CHECK(intercept(10.0).db == Catch::Approx(10.0).epsilon(1e-15));
    CHECK(intercept(2.5).db == Catch::Approx(3.9794000867203760957).epsilon(1e-14));
    CHECK_THROWS_AS(intercept(0.0), std::invalid_argument);
    CHECK_THROWS_AS(intercept(-1.0), std::invalid_argument);
}

TEST_CASE("bend_point_analytic: bend = intercept, rate = n ln 2, peak = n c^2/4") {
    const BendResult unit = bend_point_analytic(1.0, 1);
    CHECK(unit.rho_bend.db == 0.0);
    CHECK(unit.rho_int.db == 0.0);
    CHECK(unit.rate_at_bend.nats == Catch::Approx(std::numbers::ln2).epsilon(1e-15));

    for (double eta : kEtaSet) {
        for (int n : {1, 2, 7, 16}) {
            const BendResult r = bend_point_analytic(eta, n);
            CHECK(r.rho_bend.db == r.rho_int.db);
            CHECK(r.rate_at_bend.nats ==
                  Catch::Approx(double(n) * std::numbers::ln2).epsilon(1e-14));
            CHECK(r.r2_max == Catch::Approx(double(n) * kC * kC / 4.0).epsilon(1e-15));
        }
    }
    // eta = 2.5, n = 4: peak is exactly c^2.
    CHECK(bend_point_analytic(2.5, 4).r2_max == Catch::Approx(kC * kC).epsilon(1e-15));
}

TEST_CASE("bend_point_numeric agrees with the closed form") {
    const auto d2_eta1 = [](SnrDb rho) { return rate_derivative(rho, 1.0, 1, 2); };
    CHECK(std::fabs(bend_point_numeric(d2_eta1, SnrDb{-40.0}, SnrDb{40.0}).db) < 1e-3);

    const auto d2_eta25 = [](SnrDb rho) { return rate_derivative(rho, 2.5, 1, 2); };
    const double numeric = bend_point_numeric(d2_eta25, SnrDb{-40.0}, SnrDb{40.0}).db;
    CHECK(numeric == Catch::Approx(3.9794000867203761).margin(1e-3));
    CHECK(std::fabs(numeric - bend_point_analytic(2.5, 1).rho_bend.db) < 1e-3);
}

TEST_CASE("bend_point_numeric on a finite-difference second derivative") {
    const double h = 1e-3;
    const auto fd_second = [&](SnrDb rho) {
        return oracle::central_diff_2([](double r) { return sum_rate(SnrDb{r}, 2.5, 1).nats; },
                                      rho.db, h);
    };
    const double via_fd = bend_point_numeric(fd_second, SnrDb{-40.0}, SnrDb{40.0}).db;
    CHECK(std::fabs(via_fd - bend_point_numeric(2.5, 1).db) < 1e-2);
}

TEST_CASE("bend_point_numeric rejects a degenerate bracket") {
    const auto f = [](SnrDb) { return 0.0; };
    CHECK_THROWS_AS(bend_point_numeric(f, SnrDb{1.0}, SnrDb{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bend_point_numeric(f, SnrDb{2.0}, SnrDb{1.0}), std::invalid_argument);
}

TEST_CASE("numeric bend equals intercept across the eta set") {
    for (double eta : kEtaSet)
        CHECK(std::fabs(bend_point_numeric(eta, 1).db - intercept(eta).db) < 1e-3);
}

TEST_CASE("second derivative is symmetric around the bend and matches sech^2 form") {
    for (double eta : {1.0, 2.5, 37.2}) {
        for (int n : {1, 4}) {
            const double bend = intercept(eta).db;
            const double peak = double(n) * kC * kC / 4.0;
            for (double delta = 0.0; delta <= 30.0; delta += 0.5) {
                const double above = rate_derivative(SnrDb{bend + delta}, eta, n, 2);
                const double below = rate_derivative(SnrDb{bend - delta}, eta, n, 2);
                CHECK(oracle::rel_err(above, below) < 1e-12);
                const double sech_form =
                    peak / std::pow(std::cosh(kC * delta / 2.0), 2.0);
                CHECK(oracle::rel_err(above, sech_form) < 1e-12);
            }
        }
    }
}

TEST_CASE("second derivative decreases away from the bend on both sides") {
    const double bend = intercept(2.5).db;
    double prev_up = rate_derivative(SnrDb{bend}, 2.5, 1, 2);
    double prev_down = prev_up;
    for (double delta = 0.5; delta <= 25.0; delta += 0.5) {
        const double up = rate_derivative(SnrDb{bend + delta}, 2.5, 1, 2);
        const double down = rate_derivative(SnrDb{bend - delta}, 2.5, 1, 2);
        CHECK(up < prev_up);
        CHECK(down < prev_down);
        prev_up = up;
        prev_down = down;
    }
}

TEST_CASE("third derivative is stationary at the intercept") {
    for (double eta : kEtaSet)
        CHECK(std::fabs(rate_derivative(intercept(eta), eta, 2, 3)) < 1e-12);
}

TEST_CASE("bend shifts by 10 log10(alpha) when eta is scaled") {
    for (double eta : {0.4, 1.0, 5.0}) {
        for (double alpha : {10.0, 100.0, 2.0}) {
            const double shifted = bend_point_analytic(alpha * eta, 1).rho_bend.db;
            const double base = bend_point_analytic(eta, 1).rho_bend.db;
            CHECK(std::fabs(shifted - (base + 10.0 * std::log10(alpha))) < 1e-12);
        }
    }
}
