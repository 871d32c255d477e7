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

#pragma once

#include <string>

#include "risim/codebooks.hpp"
#include "risim/precoding.hpp"

namespace risim {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// SNRs reported by every user for every scanned BS beam and RIS reflection.
struct ScanReport {
    arma::mat direct;                // K x (BS beam count)
    std::vector<arma::mat> via_ris;  // J entries of K x (reflection count)
};

// Outcome of the assignment rounds: user_ris[k] = 0 serves user k directly,
// j >= 1 serves it via RIS j. round_user records the assignment order; the
// user of round r transmits on sub-array r.
struct Assignment {
    std::vector<int> user_ris;
    std::vector<int> round_user;
};

/// Sweep the BS codebook on the first sub-array with every RIS off and
/// record each user's SNR per beam.
ScanReport bs_beam_scan(const ChannelRealization& r, const BsCodebook& cb,
                        double power, double noise_power);

/// Per-RIS reflection sweep: the BS steers the first sub-array at the RIS's
/// known LoS angles, only that RIS is active, and each user reports the SNR
/// per reflection index. Appends to `report`.
void ris_beam_scan(const ChannelRealization& r, const BsArray& bs_array,
                   std::span<const RisCodebook> codebooks, double power,
                   double noise_power, ScanReport& report);

/// Greedy SNR assignment: each round compares the best remaining direct SNR
/// against the best remaining (user, RIS) SNR and assigns the winner,
/// favoring the direct link on ties. Consumed users (and RISs) leave the
/// pool. Lowest user, then RIS, then beam index wins argmax ties.
Assignment assign_users(const ScanReport& report, int num_ris);

struct LinkConfig {
    AnalogConfig analog;
    std::vector<arma::cx_vec> reflections;  // per RIS, empty = off
    std::vector<int> beam_choice;           // per user, codebook index or -1
    std::vector<int> reflection_choice;     // per user, codebook index or -1
};

/// Materialize the scanned winners: direct users get their argmax codebook
/// beam, RIS-served users get a sub-array steered exactly at the RIS and
/// the RIS set to its argmax reflection. Unused sub-arrays and RISs stay
/// zero. Throws when there are more users than sub-arrays.
LinkConfig configure_links(const Assignment& assignment,
                           const ScanReport& report, const BsCodebook& cb,
                           std::span<const RisCodebook> ris_codebooks,
                           const ChannelRealization& r,
                           const BsArray& bs_array);

struct SchemeResult {
    std::string scheme;
    Assignment assignment;
    std::vector<int> beam_choice;
    std::vector<int> reflection_choice;
    arma::cx_mat effective;  // K x L
    arma::cx_mat precoder;   // L x K, empty on degenerate drops
    arma::vec sinr;          // per-user linear SINR at the context's power
    double sum_rate_bps_hz = 0.0;
    bool degenerate = false;  // zero-forcing hit a singular channel
};

// Everything shared by the schemes for one drop: geometry, channels, and
// the codebooks (RIS codebooks differ per drop through the arrival angles).
struct DropContext {
    const Scene* scene = nullptr;
    const BsArray* bs_array = nullptr;
    std::vector<RisMount> mounts;
    std::vector<Point3> users;
    ChannelParams channel;
    const BsCodebook* bs_codebook = nullptr;
    std::vector<RisCodebook> ris_codebooks;
    double power = 1.0;
    double noise_power = 1.0;
    ChannelRealization realization;
};

DropContext make_drop(const Scene& scene, const BsArray& bs_array,
                      std::vector<RisMount> mounts, std::vector<Point3> users,
                      const ChannelParams& params, const BsCodebook& bs_cb,
                      int w1, int w2, double power, double noise_power,
                      std::mt19937_64& channel_rng);

/// Codebook beam scanning, SNR-greedy assignment, zero-forcing.
SchemeResult run_proposed(const DropContext& ctx);

/// Full-CSI benchmark: coherent per-link beamforming (phase-only matched
/// filters at the BS, term-aligned reflection phases at the RISs; exact
/// angle steering when a link is pure LoS) evaluated for every feasible
/// assignment, with the scanning scheme's own configuration in the
/// candidate set. The reported result is the best true sum rate, so it
/// never falls below the proposed scheme on the same drop.
SchemeResult run_upper_bound(const DropContext& ctx);

/// Every RIS holds i.i.d. uniform phases fixed for the drop; the BS still
/// scans its own codebook and assigns as in the proposed scheme.
SchemeResult run_rnd_coefficient(const DropContext& ctx,
                                 std::mt19937_64& phase_rng);

SchemeResult run_no_ris(const DropContext& ctx);

/// Sum rate and SINRs of a configured scheme at a different operating
/// point; selections are scale-invariant so the precoder is reused.
void rate_at(const SchemeResult& result, double power, double noise_power,
             arma::vec& sinr_out, double& rate_out);

/// One CSV row: seed, scheme, placement method, J, I, P/N0 dB, per-user
/// SINR dB joined by '|', sum rate.
std::string scheme_result_csv_row(const SchemeResult& result,
                                  std::uint64_t seed,
                                  const std::string& method, int num_ris,
                                  int num_obstacles, double snr_db);

}  // namespace risim
