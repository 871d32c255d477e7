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

#include <random>
#include <string>
#include <vector>

#include "risim/coverage.hpp"

namespace risim {

struct PlacementResult {
    std::vector<Point2> positions;
    std::vector<int> candidate_indices;  // empty for random placement
    double coverage_area = 0.0;          // m^2
    double normalized_coverage = 0.0;
    std::string method;
};

struct SearchOptions {
    double grid_resolution = 0.05;
    int footprint_samples = 5;
    bool parallel = true;
    // Reuse a prebuilt table (must match scene and candidate set); the
    // searches build their own when null.
    const VisibilityTable* table = nullptr;
};

/// Exact maximizer of covered area over all size-`ris_count` subsets of the
/// candidate set. Ties resolve to the first subset in lexicographic
/// candidate-index order. Throws when the set has fewer than `ris_count`
/// positions.
PlacementResult full_search(const Scene& scene, const CandidateSet& candidates,
                            int ris_count, const SearchOptions& opts = {});

/// One candidate per round, picking the largest marginal coverage gain
/// (lowest index on ties).
PlacementResult greedy_search(const Scene& scene, const CandidateSet& candidates,
                              int ris_count, const SearchOptions& opts = {});

/// `ris_count` distinct positions drawn uniformly over the boundary
/// perimeter; duplicates within kDupTol are redrawn.
PlacementResult random_placement(const Scene& scene, int ris_count,
                                 std::mt19937_64& rng,
                                 const SearchOptions& opts = {});

}  // namespace risim
