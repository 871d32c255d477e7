// SPDX-License-Identifier: Apache-2.0
//
// risim -- indoor RIS placement and hybrid beamforming simulator
// Copyright (C) 2026 risim contributors
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

#include "risim/protocol.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risim {

ScanReport bs_beam_scan(const ChannelRealization& r, const BsCodebook& cb,
                        double power, double noise_power) {
    ScanReport report;
    report.direct.set_size(r.num_users, cb.size());
    const std::vector<arma::cx_vec> no_reflections;  // every RIS off
    // Only the block layout matters for the pilot; recover it from the
    // realization and codebook dimensions.
    BsArray layout;
    const int lm = static_cast<int>(r.direct.n_cols);
    const int m = static_cast<int>(cb.beams.front().n_elem);
    layout.sub_count_a = lm / m;
    layout.sub_count_b = 1;
    layout.elem_count_a = m;
    layout.elem_count_b = 1;
    for (int i = 0; i < cb.size(); ++i) {
        const arma::cx_vec x = subarray_pilot(layout, cb.beams[i], 0);
        for (int k = 0; k < r.num_users; ++k) {
            report.direct(k, i) =
                received_snr(r, x, no_reflections, power, noise_power, k);
        }
    }
    return report;
}

void ris_beam_scan(const ChannelRealization& r, const BsArray& bs_array,
                   std::span<const RisCodebook> codebooks, double power,
                   double noise_power, ScanReport& report) {
    report.via_ris.resize(r.num_ris);
    const ArrayGeometry sub = bs_array.subarray_geometry();
    for (int j = 0; j < r.num_ris; ++j) {
        const RisCodebook& cb = codebooks[j];
        arma::mat& out = report.via_ris[j];
        out.set_size(r.num_users, cb.size());

        // Steer the first sub-array at the known BS->RIS LoS angles.
        const LosAngles to_ris = r.ris_links[j].bs_departure;
        const arma::cx_vec x = subarray_pilot(
            bs_array, steering_beam(sub, to_ris.elevation, to_ris.azimuth), 0);

        // The pilot is fixed during the sweep: fold the BS side once and
        // scan only the reflection diagonals.
        const arma::cx_vec illum = r.bs_ris[j] * x;  // N x 1
        for (int k = 0; k < r.num_users; ++k) {
            const arma::cx_double direct_part =
                arma::as_scalar(r.direct.row(k) * x);
            const arma::cx_rowvec cascade =
                r.ris_user[j].row(k) % arma::strans(illum);
            for (int i = 0; i < cb.size(); ++i) {
                const arma::cx_double amp =
                    direct_part + arma::as_scalar(cascade * cb.reflections[i]);
                out(k, i) = power * std::norm(amp) / noise_power;
            }
        }
    }
}

Assignment assign_users(const ScanReport& report, int num_ris) {
    const int users = static_cast<int>(report.direct.n_rows);
    Assignment assignment;
    assignment.user_ris.assign(users, 0);
    std::vector<bool> user_left(users, true);
    std::vector<bool> ris_left(num_ris, true);

    for (int round = 0; round < users; ++round) {
        double best_direct = -1.0;
        int best_direct_user = -1;
        for (int k = 0; k < users; ++k) {
            if (!user_left[k]) continue;
            for (arma::uword i = 0; i < report.direct.n_cols; ++i) {
                if (report.direct(k, i) > best_direct) {
                    best_direct = report.direct(k, i);
                    best_direct_user = k;
                }
            }
        }

        double best_ris = -1.0;
        int best_ris_user = -1, best_ris_index = -1;
        for (int k = 0; k < users; ++k) {
            if (!user_left[k]) continue;
            for (int j = 0; j < num_ris; ++j) {
                if (!ris_left[j]) continue;
                const arma::mat& snr = report.via_ris[j];
                for (arma::uword i = 0; i < snr.n_cols; ++i) {
                    if (snr(k, i) > best_ris) {
                        best_ris = snr(k, i);
                        best_ris_user = k;
                        best_ris_index = j;
                    }
                }
            }
        }

        // Ties favor the direct link.
        if (best_direct >= best_ris) {
            assignment.user_ris[best_direct_user] = 0;
            assignment.round_user.push_back(best_direct_user);
            user_left[best_direct_user] = false;
        } else {
            assignment.user_ris[best_ris_user] = best_ris_index + 1;
            assignment.round_user.push_back(best_ris_user);
            user_left[best_ris_user] = false;
            ris_left[best_ris_index] = false;
        }
    }
    return assignment;
}

namespace {

int argmax_row(const arma::mat& m, int row) {
    int best = 0;
    for (arma::uword i = 1; i < m.n_cols; ++i) {
        if (m(row, i) > m(row, best)) best = static_cast<int>(i);
    }
    return best;
}

AnalogConfig empty_analog(const BsArray& bs_array) {
    AnalogConfig analog;
    analog.num_subarrays = bs_array.num_subarrays();
    analog.elems_per_subarray = bs_array.elems_per_subarray();
    analog.beams.resize(analog.num_subarrays);
    return analog;
}

// Shared scheme tail: effective channel -> zero-forcing -> rates. A
// singular channel marks the drop degenerate with zero rate instead of
// aborting the sweep.
SchemeResult finish_scheme(std::string scheme, const DropContext& ctx,
                           Assignment assignment, LinkConfig config) {
    SchemeResult result;
    result.scheme = std::move(scheme);
    result.assignment = std::move(assignment);
    result.beam_choice = std::move(config.beam_choice);
    result.reflection_choice = std::move(config.reflection_choice);
    result.effective =
        effective_channel(ctx.realization, config.analog, config.reflections);
    try {
        result.precoder = zero_forcing(result.effective);
        result.sinr = user_sinrs(result.effective, result.precoder, ctx.power,
                                 ctx.noise_power);
        result.sum_rate_bps_hz = sum_rate(result.effective, result.precoder,
                                          ctx.power, ctx.noise_power);
    } catch (const SingularChannelError&) {
        result.degenerate = true;
        result.precoder.reset();
        result.sinr.zeros(ctx.realization.num_users);
        result.sum_rate_bps_hz = 0.0;
    }
    return result;
}

}  // namespace

LinkConfig configure_links(const Assignment& assignment,
                           const ScanReport& report, const BsCodebook& cb,
                           std::span<const RisCodebook> ris_codebooks,
                           const ChannelRealization& r,
                           const BsArray& bs_array) {
    const int users = static_cast<int>(assignment.user_ris.size());
    if (users > bs_array.num_subarrays())
        throw std::invalid_argument("configure_links: more users than sub-arrays");

    LinkConfig config;
    config.analog = empty_analog(bs_array);
    config.reflections.resize(r.num_ris);
    config.beam_choice.assign(users, -1);
    config.reflection_choice.assign(users, -1);

    const ArrayGeometry sub = bs_array.subarray_geometry();
    for (int round = 0; round < users; ++round) {
        const int k = assignment.round_user[round];
        const int target = assignment.user_ris[k];
        if (target == 0) {
            const int i = argmax_row(report.direct, k);
            config.analog.beams[round] = cb.beams[i];
            config.beam_choice[k] = i;
        } else {
            const int j = target - 1;
            const LosAngles to_ris = r.ris_links[j].bs_departure;
            config.analog.beams[round] =
                steering_beam(sub, to_ris.elevation, to_ris.azimuth);
            const int i = argmax_row(report.via_ris[j], k);
            config.reflections[j] = ris_codebooks[j].reflections[i];
            config.reflection_choice[k] = i;
        }
    }
    return config;
}

DropContext make_drop(const Scene& scene, const BsArray& bs_array,
                      std::vector<RisMount> mounts, std::vector<Point3> users,
                      const ChannelParams& params, const BsCodebook& bs_cb,
                      int w1, int w2, double power, double noise_power,
                      std::mt19937_64& channel_rng) {
    DropContext ctx;
    ctx.scene = &scene;
    ctx.bs_array = &bs_array;
    ctx.mounts = std::move(mounts);
    ctx.users = std::move(users);
    ctx.channel = params;
    ctx.bs_codebook = &bs_cb;
    ctx.power = power;
    ctx.noise_power = noise_power;
    ctx.realization = synthesize_drop(scene, bs_array, ctx.mounts, ctx.users,
                                      params, channel_rng);
    ctx.ris_codebooks.reserve(ctx.mounts.size());
    for (std::size_t j = 0; j < ctx.mounts.size(); ++j) {
        ctx.ris_codebooks.push_back(
            build_ris_codebook(ctx.mounts[j].geometry, ctx.mounts[j].wall,
                               ctx.realization.ris_links[j].arrival_at_ris, w1,
                               w2));
    }
    return ctx;
}

SchemeResult run_proposed(const DropContext& ctx) {
    ScanReport report = bs_beam_scan(ctx.realization, *ctx.bs_codebook,
                                     ctx.power, ctx.noise_power);
    ris_beam_scan(ctx.realization, *ctx.bs_array, ctx.ris_codebooks, ctx.power,
                  ctx.noise_power, report);
    Assignment assignment = assign_users(report, ctx.realization.num_ris);
    LinkConfig config =
        configure_links(assignment, report, *ctx.bs_codebook,
                        ctx.ris_codebooks, ctx.realization, *ctx.bs_array);
    return finish_scheme("proposed", ctx, std::move(assignment),
                         std::move(config));
}

namespace {

// Phase-only matched filter: the coherent analog beam for a known channel
// block under the constant-modulus hardware constraint. For a pure LoS
// block this reduces to steering at the exact LoS angles.
arma::cx_vec matched_phase_beam(const arma::cx_rowvec& block) {
    const arma::uword m = block.n_elem;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    arma::cx_vec f(m);
    for (arma::uword i = 0; i < m; ++i) {
        const double mag = std::abs(block(i));
        f(i) = mag > 0.0 ? scale * std::conj(block(i)) / mag
                         : arma::cx_double(scale, 0.0);
    }
    return f;
}

// Reflection diagonal that phase-aligns every cascade term with the direct
// leakage, the SNR maximizer over all phase-only diagonals for this pilot.
arma::cx_vec aligned_reflection(arma::cx_double direct_amp,
                                const arma::cx_rowvec& cascade_terms) {
    const double base = std::abs(direct_amp) > 0.0 ? std::arg(direct_amp) : 0.0;
    arma::cx_vec sigma(cascade_terms.n_elem);
    for (arma::uword n = 0; n < cascade_terms.n_elem; ++n) {
        const double term = std::abs(cascade_terms(n)) > 0.0
                                ? std::arg(cascade_terms(n))
                                : 0.0;
        sigma(n) = std::polar(1.0, base - term);
    }
    return sigma;
}

}  // namespace

namespace {

// All assignment vectors satisfying the one-RIS-per-user limits.
void enumerate_assignments(int users, int num_ris, std::vector<int>& current,
                           std::vector<bool>& ris_used,
                           std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == users) {
        out.push_back(current);
        return;
    }
    for (int target = 0; target <= num_ris; ++target) {
        if (target > 0 && ris_used[target - 1]) continue;
        if (target > 0) ris_used[target - 1] = true;
        current.push_back(target);
        enumerate_assignments(users, num_ris, current, ris_used, out);
        current.pop_back();
        if (target > 0) ris_used[target - 1] = false;
    }
}

}  // namespace

SchemeResult run_upper_bound(const DropContext& ctx) {
    const ChannelRealization& r = ctx.realization;
    const ArrayGeometry sub = ctx.bs_array->subarray_geometry();
    const int users = r.num_users;
    const int m = ctx.bs_array->elems_per_subarray();

    // Coherent hypotheses built from exact CSI, one per link: matched
    // analog beams for the direct links and term-aligned reflections for
    // the RIS links. Each dominates every codebook entry for its link.
    std::vector<arma::cx_vec> direct_beams(users);
    std::vector<std::vector<arma::cx_vec>> ris_choices(
        r.num_ris, std::vector<arma::cx_vec>(users));

    for (int k = 0; k < users; ++k)
        direct_beams[k] = matched_phase_beam(r.direct.row(k).head(m));

    for (int j = 0; j < r.num_ris; ++j) {
        // The BS->RIS angles are known side information, exactly as in the
        // scanning scheme; the CSI enters through the reflection.
        const LosAngles to_ris = r.ris_links[j].bs_departure;
        const arma::cx_vec x = subarray_pilot(
            *ctx.bs_array,
            steering_beam(sub, to_ris.elevation, to_ris.azimuth), 0);
        const arma::cx_vec illum = r.bs_ris[j] * x;
        for (int k = 0; k < users; ++k) {
            const arma::cx_double direct_amp =
                arma::as_scalar(r.direct.row(k) * x);
            const arma::cx_rowvec cascade =
                r.ris_user[j].row(k) % arma::strans(illum);
            ris_choices[j][k] = aligned_reflection(direct_amp, cascade);
        }
    }

    // Genie selection: with full CSI every candidate configuration can be
    // evaluated at its true sum rate. The candidates are the coherent
    // configuration of every feasible assignment, plus the configuration
    // the scanning scheme itself reaches (its decisions are functions of
    // the same CSI), so the bound can never fall below the proposed
    // scheme.
    std::vector<std::vector<int>> assignments;
    std::vector<int> scratch;
    std::vector<bool> ris_used(r.num_ris, false);
    enumerate_assignments(users, r.num_ris, scratch, ris_used, assignments);

    SchemeResult best = run_proposed(ctx);
    best.scheme = "upper-bound";
    best.beam_choice.assign(users, -1);
    best.reflection_choice.assign(users, -1);

    for (const std::vector<int>& u : assignments) {
        Assignment assignment;
        assignment.user_ris = u;
        for (int k = 0; k < users; ++k) assignment.round_user.push_back(k);

        LinkConfig config;
        config.analog = empty_analog(*ctx.bs_array);
        config.reflections.resize(r.num_ris);
        config.beam_choice.assign(users, -1);
        config.reflection_choice.assign(users, -1);
        for (int k = 0; k < users; ++k) {
            if (u[k] == 0) {
                config.analog.beams[k] = direct_beams[k];
            } else {
                const int j = u[k] - 1;
                const LosAngles to_ris = r.ris_links[j].bs_departure;
                config.analog.beams[k] =
                    steering_beam(sub, to_ris.elevation, to_ris.azimuth);
                config.reflections[j] = ris_choices[j][k];
            }
        }
        SchemeResult result = finish_scheme("upper-bound", ctx,
                                            std::move(assignment),
                                            std::move(config));
        if (!result.degenerate &&
            result.sum_rate_bps_hz > best.sum_rate_bps_hz)
            best = std::move(result);
    }
    return best;
}

SchemeResult run_rnd_coefficient(const DropContext& ctx,
                                 std::mt19937_64& phase_rng) {
    const ChannelRealization& r = ctx.realization;

    // Passive surfaces with fixed random phases; they stay active through
    // scanning and data transmission alike.
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<arma::cx_vec> reflections(r.num_ris);
    for (int j = 0; j < r.num_ris; ++j) {
        arma::cx_vec sigma(ctx.mounts[j].geometry.size());
        for (arma::uword n = 0; n < sigma.n_elem; ++n)
            sigma(n) = std::polar(1.0, phase(phase_rng));
        reflections[j] = std::move(sigma);
    }

    const BsCodebook& cb = *ctx.bs_codebook;
    ScanReport report;
    report.direct.set_size(r.num_users, cb.size());
    for (int i = 0; i < cb.size(); ++i) {
        const arma::cx_vec x = subarray_pilot(*ctx.bs_array, cb.beams[i], 0);
        for (int k = 0; k < r.num_users; ++k) {
            report.direct(k, i) =
                received_snr(r, x, reflections, ctx.power, ctx.noise_power, k);
        }
    }
    const ArrayGeometry sub = ctx.bs_array->subarray_geometry();
    report.via_ris.resize(r.num_ris);
    for (int j = 0; j < r.num_ris; ++j) {
        report.via_ris[j].set_size(r.num_users, 1);
        const LosAngles to_ris = r.ris_links[j].bs_departure;
        const arma::cx_vec x = subarray_pilot(
            *ctx.bs_array,
            steering_beam(sub, to_ris.elevation, to_ris.azimuth), 0);
        for (int k = 0; k < r.num_users; ++k) {
            report.via_ris[j](k, 0) =
                received_snr(r, x, reflections, ctx.power, ctx.noise_power, k);
        }
    }

    Assignment assignment = assign_users(report, r.num_ris);

    LinkConfig config;
    config.analog = empty_analog(*ctx.bs_array);
    config.reflections = reflections;
    config.beam_choice.assign(r.num_users, -1);
    config.reflection_choice.assign(r.num_users, -1);
    for (int round = 0; round < r.num_users; ++round) {
        const int k = assignment.round_user[round];
        const int target = assignment.user_ris[k];
        if (target == 0) {
            const int i = argmax_row(report.direct, k);
            config.analog.beams[round] = cb.beams[i];
            config.beam_choice[k] = i;
        } else {
            const LosAngles to_ris = r.ris_links[target - 1].bs_departure;
            config.analog.beams[round] =
                steering_beam(sub, to_ris.elevation, to_ris.azimuth);
        }
    }
    return finish_scheme("rnd-coefficient", ctx, std::move(assignment),
                         std::move(config));
}

SchemeResult run_no_ris(const DropContext& ctx) {
    const ChannelRealization& r = ctx.realization;
    ScanReport report =
        bs_beam_scan(r, *ctx.bs_codebook, ctx.power, ctx.noise_power);
    report.via_ris.clear();
    Assignment assignment = assign_users(report, 0);

    LinkConfig config;
    config.analog = empty_analog(*ctx.bs_array);
    config.reflections.assign(r.num_ris, arma::cx_vec());
    config.beam_choice.assign(r.num_users, -1);
    config.reflection_choice.assign(r.num_users, -1);
    for (int round = 0; round < r.num_users; ++round) {
        const int k = assignment.round_user[round];
        const int i = argmax_row(report.direct, k);
        config.analog.beams[round] = ctx.bs_codebook->beams[i];
        config.beam_choice[k] = i;
    }
    return finish_scheme("no-ris", ctx, std::move(assignment),
                         std::move(config));
}

void rate_at(const SchemeResult& result, double power, double noise_power,
             arma::vec& sinr_out, double& rate_out) {
    if (result.degenerate) {
        sinr_out.zeros(result.effective.n_rows);
        rate_out = 0.0;
        return;
    }
    sinr_out = user_sinrs(result.effective, result.precoder, power, noise_power);
    rate_out = sum_rate(result.effective, result.precoder, power, noise_power);
}

std::string scheme_result_csv_row(const SchemeResult& result,
                                  std::uint64_t seed,
                                  const std::string& method, int num_ris,
                                  int num_obstacles, double snr_db) {
    char buf[160];
    std::string sinr_db;
    for (arma::uword k = 0; k < result.sinr.n_elem; ++k) {
        if (k) sinr_db += '|';
        const double v = result.sinr(k) > 0.0 ? linear_to_db(result.sinr(k))
                                              : -std::numeric_limits<double>::infinity();
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        sinr_db += buf;
    }
    std::snprintf(buf, sizeof(buf), "%llu,%s,%s,%d,%d,%.10g,",
                  static_cast<unsigned long long>(seed), result.scheme.c_str(),
                  method.c_str(), num_ris, num_obstacles, snr_db);
    std::string row(buf);
    row += sinr_db;
    std::snprintf(buf, sizeof(buf), ",%.10g", result.sum_rate_bps_hz);
    row += buf;
    return row;
}

}  // namespace risim
