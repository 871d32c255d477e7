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

#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "risim/arrays.hpp"
#include "risim/geometry.hpp"

namespace risim {

struct ChannelParams {
    double path_loss_exponent = 2.0;  // LoS gain is distance^(-exponent/2)
    double nlos_variance = 1e-3;      // per-component complex gain variance
    int num_nlos_paths = 3;
};

// Physical mounting of one RIS: boundary position, its wall, the element
// panel, and the panel center height. LoS flags are witnessed by the
// panel footprint (same sampling as the coverage predicates), distances
// and angles by the panel center.
struct RisMount {
    Point2 wall_point;
    int wall = -1;
    double z_center = 1.5;
    ArrayGeometry geometry;
    int footprint_samples = 5;

    Point3 center() const { return {wall_point.x, wall_point.y, z_center}; }
};

RisMount make_ris_mount(const Scene& scene, Point2 q, int wall_hint,
                        int elem_count_a, int elem_count_b, double spacing,
                        double wavelength, double z_center,
                        int footprint_samples = 5);

struct DirectChannel {
    arma::cx_rowvec h;  // 1 x LM
    bool los_present = false;
    LosAngles bs_departure;  // BS -> user
};

struct RisUserChannel {
    arma::cx_rowvec h;  // 1 x N
    bool los_present = false;
    LosAngles ris_departure;  // RIS -> user
};

struct BsRisChannel {
    arma::cx_mat g;  // N x LM
    bool los_present = false;
    LosAngles arrival_at_ris;  // RIS -> BS direction (arrival side)
    LosAngles bs_departure;    // BS -> RIS direction
};

// All channels of one drop. Channel rows keep the departure phases
// unconjugated; beams carry the matching negative phases, so a beam steered
// at the channel's own angles sums coherently.
struct ChannelRealization {
    int num_users = 0;
    int num_ris = 0;
    arma::cx_mat direct;                    // K x LM, row per user
    std::vector<arma::cx_mat> ris_user;     // J entries of K x N
    std::vector<arma::cx_mat> bs_ris;       // J entries of N x LM
    std::vector<BsRisChannel> ris_links;    // angles + LoS flag per RIS
    std::vector<std::uint8_t> direct_los;   // K
    std::vector<std::vector<std::uint8_t>> ris_user_los;  // J x K
    std::vector<LosAngles> user_departure_at_bs;          // K
    std::vector<std::vector<LosAngles>> user_departure_at_ris;  // J x K
};

/// Saleh-Valenzuela BS->user channel: geometry-consistent LoS term (zeroed
/// when the 2D sight line is blocked) plus num_nlos_paths random components.
/// Throws when the user lies inside an obstacle.
DirectChannel synth_bs_user(const Scene& scene, const BsArray& bs_array,
                            const Point3& user, const ChannelParams& params,
                            std::mt19937_64& rng);

RisUserChannel synth_ris_user(const Scene& scene, const RisMount& mount,
                              const Point3& user, const ChannelParams& params,
                              std::mt19937_64& rng);

BsRisChannel synth_bs_ris(const Scene& scene, const BsArray& bs_array,
                          const RisMount& mount, const ChannelParams& params,
                          std::mt19937_64& rng);

ChannelRealization synthesize_drop(const Scene& scene, const BsArray& bs_array,
                                   std::span<const RisMount> mounts,
                                   std::span<const Point3> users,
                                   const ChannelParams& params,
                                   std::mt19937_64& rng);

/// Flattened re/im dump of every channel in the realization.
void realization_to_csv(const ChannelRealization& r, std::ostream& os);

}  // namespace risim
