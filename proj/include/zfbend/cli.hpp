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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ergodic.hpp"
#include "figures.hpp"
#include "matrix_io.hpp"
#include "montecarlo.hpp"
#include "rate.hpp"
#include "series.hpp"

namespace zfbend::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

namespace detail {

inline void print_kv(std::ostream& out, std::string_view key, double value) {
    out << key << '=' << format_value(value) << '\n';
}

/// Route CSV output to --out or to the fallback stream.
inline void with_output(const std::string& out_path, std::ostream& fallback,
                        const std::function<void(std::ostream&)>& body) {
    if (out_path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw IoError("cannot open output file: " + out_path);
    body(os);
    if (!os) throw IoError("write failed: " + out_path);
}

struct CurveArgs {
    std::string mode;
    double eta = 1.0;
    int n = 1;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double step = 0.0;
    std::string out_path;
    bool bits = false;
    bool eta_given = false;
};

}  // namespace detail

/// Parse and execute one command line (without the program name).
/// Data goes to `out`, diagnostics to `err`. Returns an exit code per the
/// contract above.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    constexpr double kNatsPerBit = std::numbers::ln2;

    CLI::App app{"Sum-rate bend-point analysis for zero-forcing multiuser MIMO"};
    app.name("zfbend");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // bend: closed-form bend point / intercept report.
    auto* bend = app.add_subcommand(
        "bend", "Deterministic bend point, asymptote intercept and rate at the bend");
    double bend_eta = 1.0;
    std::string bend_matrix;
    int bend_n = 1;
    bool bend_bits = false;
    auto* bend_eta_opt =
        bend->add_option("--eta", bend_eta, "channel hardness ||H^-1||_F^2 (> 0)");
    auto* bend_matrix_opt =
        bend->add_option("--matrix", bend_matrix, "channel matrix file; eta is derived from it");
    bend->add_option("--n", bend_n, "antennas = users")->check(CLI::PositiveNumber);
    bend->add_flag("--bits", bend_bits, "report rates in bits instead of nats");
    bend_eta_opt->excludes(bend_matrix_opt);
    bend_matrix_opt->excludes(bend_eta_opt);

    // curve: CSV of a rate function over an SNR grid.
    auto* curve = app.add_subcommand("curve", "Rate curve over an SNR grid as CSV");
    detail::CurveArgs ca;
    curve->add_option("--mode", ca.mode, "deterministic | ergodic | asymptote")
        ->required()
        ->check(CLI::IsMember({"deterministic", "ergodic", "asymptote"}));
    auto* curve_eta_opt = curve->add_option(
        "--eta", ca.eta, "channel hardness (deterministic/asymptote modes; default 1)");
    curve->add_option("--n", ca.n, "antennas = users")->required()->check(CLI::PositiveNumber);
    curve->add_option("--rho-min", ca.rho_min, "grid start, dB")->required();
    curve->add_option("--rho-max", ca.rho_max, "grid end, dB")->required();
    curve->add_option("--step", ca.step, "grid step, dB")->required();
    curve->add_option("--out", ca.out_path, "output CSV path (default stdout)");
    curve->add_flag("--bits", ca.bits, "emit rates in bits instead of nats");

    // deriv: CSV of a sum-rate derivative over an SNR grid.
    auto* deriv = app.add_subcommand("deriv", "Sum-rate derivative over an SNR grid as CSV");
    int deriv_order = 0;
    double deriv_eta = 1.0;
    int deriv_n = 1;
    double deriv_rho_min = 0.0;
    double deriv_rho_max = 0.0;
    double deriv_step = 0.0;
    std::string deriv_out;
    bool deriv_bits = false;
    deriv->add_option("--order", deriv_order, "derivative order")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    deriv->add_option("--eta", deriv_eta, "channel hardness (> 0)")->required();
    deriv->add_option("--n", deriv_n, "antennas = users")->required()->check(CLI::PositiveNumber);
    deriv->add_option("--rho-min", deriv_rho_min, "grid start, dB")->required();
    deriv->add_option("--rho-max", deriv_rho_max, "grid end, dB")->required();
    deriv->add_option("--step", deriv_step, "grid step, dB")->required();
    deriv->add_option("--out", deriv_out, "output CSV path (default stdout)");
    deriv->add_flag("--bits", deriv_bits, "emit in bits/dB^k instead of nats/dB^k");

    // ergodic-bend: numeric ergodic bend vs. intercept.
    auto* ebend = app.add_subcommand("ergodic-bend",
                                     "Numeric ergodic bend point, intercept and their gap");
    int ebend_n = 1;
    ebend->add_option("--n", ebend_n, "antennas = users")->required()->check(CLI::PositiveNumber);

    // mc: Monte Carlo estimate vs. the closed form.
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate against the closed form");
    std::string mc_model;
    int mc_n = 1;
    double mc_rho = 0.0;
    std::uint64_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    bool mc_bits = false;
    mc->add_option("--model", mc_model, "exponential | rayleigh-zf")
        ->required()
        ->check(CLI::IsMember({"exponential", "rayleigh-zf"}));
    mc->add_option("--n", mc_n, "antennas = users")->required()->check(CLI::PositiveNumber);
    mc->add_option("--rho", mc_rho, "SNR, dB")->required();
    mc->add_option("--samples", mc_samples, "sample count (>= 2)")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    mc->add_option("--seed", mc_seed, "64-bit seed")->required();
    mc->add_flag("--bits", mc_bits, "report rates in bits instead of nats");

    // figures: emit figure data CSVs.
    auto* figures = app.add_subcommand("figures", "Emit figure data CSVs into a directory");
    int fig_which = 0;
    std::string fig_out;
    std::vector<int> fig_n_list;
    figures->add_option("--which", fig_which, "figure number")
        ->required()
        ->check(CLI::IsMember({2, 3, 4}));
    figures->add_option("--out", fig_out, "output directory")->required();
    figures->add_option("--n-list", fig_n_list, "antenna counts, comma separated (figure 4)")
        ->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bend->parsed()) {
            if (!*bend_eta_opt && !*bend_matrix_opt) {
                err << "bend: exactly one of --eta or --matrix is required\n";
                return kExitUsage;
            }
            double eta = bend_eta;
            if (*bend_matrix_opt) eta = realize_channel(load_matrix(bend_matrix)).eta;
            const BendResult r = bend_point_analytic(eta, bend_n);
            const double unit = bend_bits ? kNatsPerBit : 1.0;
            detail::print_kv(out, "eta", eta);
            detail::print_kv(out, "rho_bend", r.rho_bend.db);
            detail::print_kv(out, "rho_int", r.rho_int.db);
            detail::print_kv(out, "rate_at_bend", r.rate_at_bend.nats / unit);
            detail::print_kv(out, "r2_max", r.r2_max / unit);
            return kExitOk;
        }

        if (curve->parsed()) {
            if (!(ca.step > 0.0) || !(ca.rho_min < ca.rho_max)) {
                err << "curve: require --step > 0 and --rho-min < --rho-max\n";
                return kExitUsage;
            }
            ca.eta_given = static_cast<bool>(*curve_eta_opt);
            const auto grid = snr_grid(SnrDb{ca.rho_min}, SnrDb{ca.rho_max}, ca.step);
            const double unit = ca.bits ? kNatsPerBit : 1.0;
            const std::string suffix = ca.bits ? "bits" : "nats";
            CurveSeries series;
            if (ca.mode == "deterministic") {
                series = sample_series("rate_" + suffix, grid, [&](SnrDb rho) {
                    return sum_rate(rho, ca.eta, ca.n).nats / unit;
                });
            } else if (ca.mode == "ergodic") {
                series = sample_series("ergodic_rate_" + suffix, grid, [&](SnrDb rho) {
                    return ergodic_rate(rho, ca.n).nats / unit;
                });
            } else {
                // asymptote: deterministic when --eta is given, ergodic otherwise.
                if (ca.eta_given) {
                    series = sample_series("asymptote_" + suffix, grid, [&](SnrDb rho) {
                        return high_snr_asymptote(rho, ca.eta, ca.n) / unit;
                    });
                } else {
                    series = sample_series("ergodic_asymptote_" + suffix, grid, [&](SnrDb rho) {
                        return ergodic_asymptote(rho, ca.n) / unit;
                    });
                }
            }
            detail::with_output(ca.out_path, out,
                                [&series](std::ostream& os) { write_csv(os, series); });
            return kExitOk;
        }

        if (deriv->parsed()) {
            if (!(deriv_step > 0.0) || !(deriv_rho_min < deriv_rho_max)) {
                err << "deriv: require --step > 0 and --rho-min < --rho-max\n";
                return kExitUsage;
            }
            const auto grid = snr_grid(SnrDb{deriv_rho_min}, SnrDb{deriv_rho_max}, deriv_step);
            const double unit = deriv_bits ? kNatsPerBit : 1.0;
            const std::string label = "d" + std::to_string(deriv_order) +
                                      (deriv_bits ? "_bits_per_db" : "_nats_per_db") +
                                      (deriv_order > 1 ? std::to_string(deriv_order) : "");
            const CurveSeries series = sample_series(label, grid, [&](SnrDb rho) {
                return rate_derivative(rho, deriv_eta, deriv_n, deriv_order) / unit;
            });
            detail::with_output(deriv_out, out,
                                [&series](std::ostream& os) { write_csv(os, series); });
            return kExitOk;
        }

        if (ebend->parsed()) {
            const SnrDb bend_db = ergodic_bend_numeric(ebend_n);
            const SnrDb int_db = ergodic_intercept(ebend_n);
            detail::print_kv(out, "rho_bend", bend_db.db);
            detail::print_kv(out, "rho_int", int_db.db);
            detail::print_kv(out, "gap", int_db.db - bend_db.db);
            return kExitOk;
        }

        if (mc->parsed()) {
            const SnrDb rho{mc_rho};
            const McEstimate est = mc_model == "exponential"
                                       ? mc_ergodic_exponential(rho, mc_n, mc_samples, mc_seed)
                                       : mc_ergodic_zf(rho, mc_n, mc_samples, mc_seed);
            const double analytic = ergodic_rate(rho, mc_n).nats;
            const ComparisonReport report = compare(est, analytic);
            const double unit = mc_bits ? kNatsPerBit : 1.0;
            detail::print_kv(out, "mean", est.mean / unit);
            detail::print_kv(out, "stderr", est.std_error / unit);
            out << "samples=" << est.samples << '\n';
            out << "seed=" << est.seed << '\n';
            detail::print_kv(out, "analytic", analytic / unit);
            detail::print_kv(out, "abs_diff", report.abs_diff / unit);
            detail::print_kv(out, "z_score", report.z_score);
            if (mc_model == "rayleigh-zf") out << "resampled=" << est.resampled << '\n';
            return kExitOk;
        }

        if (figures->parsed()) {
            for (int n : fig_n_list)
                if (n < 1) {
                    err << "figures: --n-list entries must be >= 1\n";
                    return kExitUsage;
                }
            const auto written = emit_figure_data(fig_which, fig_out, fig_n_list);
            for (const auto& path : written) out << path.string() << '\n';
            return kExitOk;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace zfbend::cli
