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
#include <iosfwd>
#include <span>
#include <vector>

#include "risim/candidates.hpp"
#include "risim/geometry.hpp"

namespace risim {

enum class CellState : std::uint8_t {
    kObstacle = 0,
    kBsCovered = 1,
    kRisCovered = 2,
    kUncovered = 3,
};

// Rasterized coverage of the floor plan: cell centers are tested against
// the LoS predicates, cell (ix,iy) has center ((ix+0.5)r, (iy+0.5)r).
struct CoverageMap {
    int nx = 0, ny = 0;
    double resolution = 0.0;
    std::vector<CellState> state;      // nx*ny, index iy*nx + ix
    std::vector<std::int16_t> serving_ris;  // serving RIS id or -1

    int cell_count(CellState s) const;
    double area(CellState s) const;
    /// Cells not occupied by an obstacle, in m^2.
    double free_area() const;
    /// BS-covered plus RIS-covered area, in m^2.
    double covered_area() const;
    /// covered / free, in [0,1]; 1.0 for a fully obstructed-free room.
    double normalized_coverage() const;
};

CoverageMap compute_coverage_map(const Scene& scene,
                                 std::span<const Point2> ris_positions,
                                 double resolution,
                                 int footprint_samples = 5,
                                 std::span<const int> wall_hints = {});

/// Reference implementation without threading; kept for equivalence tests.
CoverageMap compute_coverage_map_serial(const Scene& scene,
                                        std::span<const Point2> ris_positions,
                                        double resolution,
                                        int footprint_samples = 5,
                                        std::span<const int> wall_hints = {});

void coverage_map_to_csv(const CoverageMap& map, std::ostream& os);

// Precomputed per-candidate visibility over the cells the BS cannot reach.
// Placement search reduces to unions of the per-candidate bitmasks: the
// coverage of a subset is bs_cells plus the popcount of the OR of its masks.
struct VisibilityTable {
    int nx = 0, ny = 0;
    double resolution = 0.0;
    int free_cells = 0;  // non-obstacle cells
    int bs_cells = 0;    // cells with direct BS LoS
    std::vector<std::uint32_t> shadow_cells;  // flat ids of free, unreached cells
    std::vector<std::uint64_t> masks;         // candidates x words, row-major
    std::vector<int> mask_popcount;           // per candidate

    int num_candidates() const { return static_cast<int>(mask_popcount.size()); }
    int words() const {
        return static_cast<int>((shadow_cells.size() + 63) / 64);
    }
    const std::uint64_t* mask(int candidate) const {
        return masks.data() + static_cast<std::size_t>(candidate) * words();
    }

    double normalized(int covered_shadow_cells) const {
        if (free_cells == 0) return 1.0;
        return static_cast<double>(bs_cells + covered_shadow_cells) / free_cells;
    }
};

VisibilityTable build_visibility_table(const Scene& scene,
                                       const CandidateSet& candidates,
                                       double resolution,
                                       int footprint_samples = 5);

VisibilityTable build_visibility_table_serial(const Scene& scene,
                                              const CandidateSet& candidates,
                                              double resolution,
                                              int footprint_samples = 5);

}  // namespace risim
