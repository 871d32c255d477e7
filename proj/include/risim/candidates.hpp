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

#include <vector>

#include "risim/geometry.hpp"

namespace risim {

enum class CandidateOrigin { kTangent, kUniform };

// Ordered set of feasible RIS wall positions. Positions are kept in
// clockwise perimeter order starting from (0,0) and are pairwise distinct.
struct CandidateSet {
    std::vector<Point2> positions;
    std::vector<int> wall_index;  // boundary wall per position
    CandidateOrigin origin = CandidateOrigin::kTangent;

    int size() const { return static_cast<int>(positions.size()); }
};

// Shadow-edge candidate construction: for every obstacle, cast the two rays
// from the BS tangent to it (through the endpoints for wall obstacles),
// extend them to the room boundary, and keep the hits that still have an
// unobstructed line back to the BS. At most two candidates per obstacle.
CandidateSet build_candidate_set_tangent(const Scene& scene);

/// Boundary positions spaced `spacing` apart clockwise from (0,0).
CandidateSet build_candidate_set_uniform(const Scene& scene, double spacing);

/// Exit point of the ray origin + t*dir (t > 0) through the room boundary.
/// The origin must lie strictly inside the room.
Point2 ray_boundary_exit(const Scene& scene, Point2 origin, Point2 dir);

}  // namespace risim
