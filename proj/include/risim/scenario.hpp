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

#include <cstdint>
#include <string>
#include <vector>

#include "risim/channel.hpp"
#include "risim/rng.hpp"

namespace risim {

enum class ObstacleKind { kCircle, kWall };

// Full description of one simulation campaign. Every field has a default;
// a config file only needs to name what it overrides.
struct ScenarioConfig {
    // Room and BS.
    double room_x = 10.0, room_y = 10.0, room_z = 3.0;
    Point3 bs_position{5.0, 5.0, 3.0};
    Plane bs_plane = Plane::kXY;
    int bs_sub_a = 2, bs_sub_b = 1;    // sub-array grid
    int bs_elem_a = 4, bs_elem_b = 4;  // elements per sub-array

    // RIS hardware.
    int ris_elem_a = 8, ris_elem_b = 8;
    double ris_length = 0.5;
    double ris_z = 1.5;
    int ris_count = 2;  // deployed RISs for the rate sweep

    // Obstacle model.
    ObstacleKind obstacle_type = ObstacleKind::kCircle;
    int obstacle_count = 5;
    double circle_radius_min = 0.5, circle_radius_max = 1.5;
    double wall_length_min = 1.0, wall_length_max = 7.3;

    // Users.
    int num_users = 2;
    double user_height = 1.0;

    // Channel.
    ChannelParams channel;  // exponent 2, variance -30 dB, 3 paths
    double wavelength = 1.0;  // element spacing is wavelength/2 throughout

    // Codebooks.
    int v1 = 16, v2 = 16;  // BS beam grid
    int w1 = 64, w2 = 64;  // RIS reflection grid

    // Coverage evaluation.
    double grid_resolution = 0.05;
    double uniform_spacing = 0.1;
    int footprint_samples = 5;
    std::vector<int> ris_counts{0, 1, 2, 3, 4};  // coverage sweep axis

    // Rate evaluation.
    std::vector<double> snr_db{0, 5, 10, 15, 20, 25, 30};

    // Execution.
    int trials = 200;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware default
    std::vector<std::string> placement_methods{"full-tangent", "full-uniform",
                                               "greedy-tangent", "random"};
    std::vector<std::string> schemes{"proposed", "upper-bound",
                                     "rnd-coefficient", "no-ris"};

    BsArray bs_array() const;
    ArrayGeometry ris_geometry_for_wall(int wall) const;

    /// Throws std::invalid_argument with a diagnostic on bad settings.
    void validate() const;
};

/// Parse a JSON config; omitted fields keep their defaults.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

/// Random scene for one trial: obstacle parameters are redrawn until the
/// footprint stays inside the room and clear of the BS.
Scene generate_scene(const ScenarioConfig& config, std::uint64_t trial);

/// User drops uniform over the obstacle-free floor area.
std::vector<Point3> generate_users(const Scene& scene,
                                   const ScenarioConfig& config,
                                   std::uint64_t trial);

std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);
Scene load_scene(const std::string& path);

RisMount mount_from_position(const Scene& scene, const ScenarioConfig& config,
                             Point2 position, int wall_hint = -1);

}  // namespace risim
