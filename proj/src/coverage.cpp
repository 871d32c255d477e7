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

#include "risim/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace risim {

namespace {

struct GridDims {
    int nx, ny;
};

GridDims grid_dims(const Scene& scene, double resolution) {
    if (!(resolution > 0.0))
        throw std::invalid_argument("coverage: resolution must be positive");
    return {static_cast<int>(std::ceil(scene.size_x / resolution - kGeomTol)),
            static_cast<int>(std::ceil(scene.size_y / resolution - kGeomTol))};
}

inline Point2 cell_center(int ix, int iy, double res) {
    return {(ix + 0.5) * res, (iy + 0.5) * res};
}

// Footprint sample points of one RIS with their BS visibility resolved
// up front; cell tests then only probe the second hop.
struct RisSamples {
    std::vector<Point2> visible;  // samples with clear BS->sample path
};

RisSamples precompute_ris_samples(const Scene& scene, Point2 q, int wall_hint,
                                  int footprint_samples) {
    const Segment fp = ris_footprint(scene, q, wall_hint);
    const Point2 bs = scene.bs_2d();
    const int n = std::max(2, footprint_samples);
    RisSamples out;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        const Point2 r = fp.a + t * (fp.b - fp.a);
        if (!segment_blocked(scene, bs, r)) out.visible.push_back(r);
    }
    return out;
}

}  // namespace

int CoverageMap::cell_count(CellState s) const {
    return static_cast<int>(std::count(state.begin(), state.end(), s));
}

double CoverageMap::area(CellState s) const {
    return cell_count(s) * resolution * resolution;
}

double CoverageMap::free_area() const {
    return (static_cast<int>(state.size()) - cell_count(CellState::kObstacle)) *
           resolution * resolution;
}

double CoverageMap::covered_area() const {
    return area(CellState::kBsCovered) + area(CellState::kRisCovered);
}

double CoverageMap::normalized_coverage() const {
    const double free = free_area();
    if (free <= 0.0) return 1.0;
    return covered_area() / free;
}

CoverageMap compute_coverage_map(const Scene& scene,
                                 std::span<const Point2> ris_positions,
                                 double resolution, int footprint_samples,
                                 std::span<const int> wall_hints) {
    const auto [nx, ny] = grid_dims(scene, resolution);
    CoverageMap map;
    map.nx = nx;
    map.ny = ny;
    map.resolution = resolution;
    map.state.resize(static_cast<std::size_t>(nx) * ny);
    map.serving_ris.assign(static_cast<std::size_t>(nx) * ny, -1);

    std::vector<RisSamples> samples(ris_positions.size());
    for (std::size_t j = 0; j < ris_positions.size(); ++j) {
        const int hint = j < wall_hints.size() ? wall_hints[j] : -1;
        samples[j] = precompute_ris_samples(scene, ris_positions[j], hint,
                                            footprint_samples);
    }

    const Point2 bs = scene.bs_2d();
    const std::int64_t total = static_cast<std::int64_t>(nx) * ny;
#pragma omp parallel for schedule(static)
    for (std::int64_t cell = 0; cell < total; ++cell) {
        const int ix = static_cast<int>(cell % nx);
        const int iy = static_cast<int>(cell / nx);
        const Point2 p = cell_center(ix, iy, resolution);
        if (point_in_obstacle(scene, p)) {
            map.state[cell] = CellState::kObstacle;
            continue;
        }
        if (!segment_blocked(scene, bs, p)) {
            map.state[cell] = CellState::kBsCovered;
            continue;
        }
        map.state[cell] = CellState::kUncovered;
        for (std::size_t j = 0; j < samples.size(); ++j) {
            bool reached = false;
            for (const Point2& r : samples[j].visible) {
                if (!segment_blocked(scene, r, p)) {
                    reached = true;
                    break;
                }
            }
            if (reached) {
                map.state[cell] = CellState::kRisCovered;
                map.serving_ris[cell] = static_cast<std::int16_t>(j);
                break;
            }
        }
    }
    return map;
}

CoverageMap compute_coverage_map_serial(const Scene& scene,
                                        std::span<const Point2> ris_positions,
                                        double resolution,
                                        int footprint_samples,
                                        std::span<const int> wall_hints) {
    const auto [nx, ny] = grid_dims(scene, resolution);
    CoverageMap map;
    map.nx = nx;
    map.ny = ny;
    map.resolution = resolution;
    map.state.resize(static_cast<std::size_t>(nx) * ny);
    map.serving_ris.assign(static_cast<std::size_t>(nx) * ny, -1);

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t cell = static_cast<std::size_t>(iy) * nx + ix;
            const Point2 p = cell_center(ix, iy, resolution);
            if (point_in_obstacle(scene, p)) {
                map.state[cell] = CellState::kObstacle;
                continue;
            }
            if (has_direct_los(scene, p)) {
                map.state[cell] = CellState::kBsCovered;
                continue;
            }
            map.state[cell] = CellState::kUncovered;
            for (std::size_t j = 0; j < ris_positions.size(); ++j) {
                const int hint = j < wall_hints.size() ? wall_hints[j] : -1;
                if (has_ris_los(scene, ris_positions[j], p, footprint_samples,
                                hint)) {
                    map.state[cell] = CellState::kRisCovered;
                    map.serving_ris[cell] = static_cast<std::int16_t>(j);
                    break;
                }
            }
        }
    }
    return map;
}

void coverage_map_to_csv(const CoverageMap& map, std::ostream& os) {
    os << "ix,iy,x,y,state,serving_ris\n";
    char buf[128];
    for (int iy = 0; iy < map.ny; ++iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            const std::size_t cell = static_cast<std::size_t>(iy) * map.nx + ix;
            const Point2 p = cell_center(ix, iy, map.resolution);
            std::snprintf(buf, sizeof(buf), "%d,%d,%.10g,%.10g,%d,%d\n", ix, iy,
                          p.x, p.y, static_cast<int>(map.state[cell]),
                          static_cast<int>(map.serving_ris[cell]));
            os << buf;
        }
    }
}

namespace {

// Shared scaffolding for the visibility table builders.
VisibilityTable init_table(const Scene& scene, double resolution) {
    const auto [nx, ny] = grid_dims(scene, resolution);
    VisibilityTable table;
    table.nx = nx;
    table.ny = ny;
    table.resolution = resolution;
    return table;
}

void fill_candidate_mask(const Scene& scene, const RisSamples& samples,
                         const std::vector<std::uint32_t>& shadow_cells,
                         int nx, double resolution, std::uint64_t* words,
                         int& popcount) {
    popcount = 0;
    for (std::size_t s = 0; s < shadow_cells.size(); ++s) {
        const std::uint32_t cell = shadow_cells[s];
        const Point2 p =
            cell_center(static_cast<int>(cell % nx),
                        static_cast<int>(cell / nx), resolution);
        for (const Point2& r : samples.visible) {
            if (!segment_blocked(scene, r, p)) {
                words[s >> 6] |= std::uint64_t{1} << (s & 63);
                ++popcount;
                break;
            }
        }
    }
}

}  // namespace

VisibilityTable build_visibility_table(const Scene& scene,
                                       const CandidateSet& candidates,
                                       double resolution,
                                       int footprint_samples) {
    VisibilityTable table = init_table(scene, resolution);
    const int nx = table.nx, ny = table.ny;
    const Point2 bs = scene.bs_2d();

    std::vector<std::uint8_t> base(static_cast<std::size_t>(nx) * ny);
    const std::int64_t total = static_cast<std::int64_t>(nx) * ny;
#pragma omp parallel for schedule(static)
    for (std::int64_t cell = 0; cell < total; ++cell) {
        const Point2 p = cell_center(static_cast<int>(cell % nx),
                                     static_cast<int>(cell / nx), resolution);
        if (point_in_obstacle(scene, p))
            base[cell] = 0;  // obstacle
        else if (!segment_blocked(scene, bs, p))
            base[cell] = 1;  // direct LoS
        else
            base[cell] = 2;  // shadow
    }
    for (std::int64_t cell = 0; cell < total; ++cell) {
        if (base[cell] != 0) ++table.free_cells;
        if (base[cell] == 1) ++table.bs_cells;
        if (base[cell] == 2)
            table.shadow_cells.push_back(static_cast<std::uint32_t>(cell));
    }

    const int n_cand = candidates.size();
    const int words = table.words();
    table.masks.assign(static_cast<std::size_t>(n_cand) * words, 0);
    table.mask_popcount.assign(n_cand, 0);

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < n_cand; ++t) {
        const RisSamples samples = precompute_ris_samples(
            scene, candidates.positions[t], candidates.wall_index[t],
            footprint_samples);
        fill_candidate_mask(scene, samples, table.shadow_cells, nx, resolution,
                            table.masks.data() + static_cast<std::size_t>(t) * words,
                            table.mask_popcount[t]);
    }
    return table;
}

VisibilityTable build_visibility_table_serial(const Scene& scene,
                                              const CandidateSet& candidates,
                                              double resolution,
                                              int footprint_samples) {
    VisibilityTable table = init_table(scene, resolution);
    const int nx = table.nx, ny = table.ny;

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const std::uint32_t cell = static_cast<std::uint32_t>(iy) * nx + ix;
            const Point2 p = cell_center(ix, iy, resolution);
            if (point_in_obstacle(scene, p)) continue;
            ++table.free_cells;
            if (has_direct_los(scene, p))
                ++table.bs_cells;
            else
                table.shadow_cells.push_back(cell);
        }
    }

    const int n_cand = candidates.size();
    const int words = table.words();
    table.masks.assign(static_cast<std::size_t>(n_cand) * words, 0);
    table.mask_popcount.assign(n_cand, 0);

    for (int t = 0; t < n_cand; ++t) {
        std::uint64_t* mask =
            table.masks.data() + static_cast<std::size_t>(t) * words;
        for (std::size_t s = 0; s < table.shadow_cells.size(); ++s) {
            const std::uint32_t cell = table.shadow_cells[s];
            const Point2 p = cell_center(static_cast<int>(cell % nx),
                                         static_cast<int>(cell / nx), resolution);
            if (has_ris_los(scene, candidates.positions[t], p, footprint_samples,
                            candidates.wall_index[t])) {
                mask[s >> 6] |= std::uint64_t{1} << (s & 63);
                ++table.mask_popcount[t];
            }
        }
    }
    return table;
}

}  // namespace risim
