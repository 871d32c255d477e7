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

#include "risim/placement.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace risim {

namespace {

int union_popcount(const std::uint64_t* a, const std::uint64_t* b,
                   std::uint64_t* out, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) {
        out[i] = a[i] | b[i];
        c += std::popcount(out[i]);
    }
    return c;
}

PlacementResult make_result(const Scene& /*scene*/, const CandidateSet& cands,
                            const VisibilityTable& table,
                            const std::vector<int>& chosen, int shadow_covered,
                            std::string method) {
    PlacementResult res;
    res.method = std::move(method);
    res.candidate_indices = chosen;
    for (int idx : chosen) res.positions.push_back(cands.positions[idx]);
    res.normalized_coverage = table.normalized(shadow_covered);
    res.coverage_area = (table.bs_cells + shadow_covered) * table.resolution *
                        table.resolution;
    return res;
}

// Best subset found in one first-index subtree. Enumeration is in
// lexicographic order and acceptance is strictly-greater, so `subset` is the
// lexicographically first maximizer within the subtree.
struct SubtreeBest {
    int count = -1;
    std::vector<int> subset;
};

struct SearchContext {
    const VisibilityTable* table;
    int ris_count;
    int words;
    std::vector<int> suffix_max;  // suffix max of single-mask popcounts
};

// Depth-first lexicographic enumeration with an optimistic bound: a branch
// is dropped only when even `remaining` copies of the best remaining mask
// cannot reach the globally best count, which never discards a potential
// maximizer (ties included).
void search_subtree(const SearchContext& ctx, int depth, int start,
                    int current_count, std::vector<std::uint64_t>& unions,
                    std::vector<int>& chosen, SubtreeBest& best,
                    std::atomic<int>& global_lb) {
    const int n = ctx.table->num_candidates();
    const int remaining = ctx.ris_count - depth;
    if (remaining == 0) {
        if (current_count > best.count) {
            best.count = current_count;
            best.subset = chosen;
            int prev = global_lb.load(std::memory_order_relaxed);
            while (prev < current_count &&
                   !global_lb.compare_exchange_weak(prev, current_count)) {
            }
        }
        return;
    }
    for (int t = start; t <= n - remaining; ++t) {
        const int bound = current_count + remaining * ctx.suffix_max[t];
        if (bound < global_lb.load(std::memory_order_relaxed)) return;
        std::uint64_t* parent = unions.data() +
                                static_cast<std::size_t>(depth) * ctx.words;
        std::uint64_t* child = parent + ctx.words;
        const int count =
            union_popcount(parent, ctx.table->mask(t), child, ctx.words);
        chosen.push_back(t);
        search_subtree(ctx, depth + 1, t + 1, count, unions, chosen, best,
                       global_lb);
        chosen.pop_back();
    }
}

}  // namespace

PlacementResult full_search(const Scene& scene, const CandidateSet& candidates,
                            int ris_count, const SearchOptions& opts) {
    if (ris_count < 0)
        throw std::invalid_argument("full_search: negative RIS count");
    if (candidates.size() < ris_count)
        throw std::invalid_argument("full_search: fewer candidates than RISs");

    VisibilityTable local;
    const VisibilityTable* table = opts.table;
    if (table == nullptr) {
        local = opts.parallel
                    ? build_visibility_table(scene, candidates,
                                             opts.grid_resolution,
                                             opts.footprint_samples)
                    : build_visibility_table_serial(scene, candidates,
                                                    opts.grid_resolution,
                                                    opts.footprint_samples);
        table = &local;
    }

    if (ris_count == 0)
        return make_result(scene, candidates, *table, {}, 0, "full-search");

    SearchContext ctx;
    ctx.table = table;
    ctx.ris_count = ris_count;
    ctx.words = table->words();
    const int n = candidates.size();
    ctx.suffix_max.assign(n + 1, 0);
    for (int t = n - 1; t >= 0; --t)
        ctx.suffix_max[t] = std::max(ctx.suffix_max[t + 1],
                                     table->mask_popcount[t]);

    std::vector<SubtreeBest> roots(n);
    std::atomic<int> global_lb{-1};

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int t1 = 0; t1 <= n - ris_count; ++t1) {
        std::vector<std::uint64_t> unions(
            static_cast<std::size_t>(ris_count + 1) * ctx.words, 0);
        const int count = union_popcount(unions.data(), table->mask(t1),
                                         unions.data() + ctx.words, ctx.words);
        std::vector<int> chosen{t1};
        search_subtree(ctx, 1, t1 + 1, count, unions, chosen, roots[t1],
                       global_lb);
    }

    // Ascending merge keeps the lexicographically first maximizer
    // independent of thread scheduling.
    int best_count = -1;
    const std::vector<int>* best_subset = nullptr;
    for (int t1 = 0; t1 < n; ++t1) {
        if (roots[t1].count > best_count) {
            best_count = roots[t1].count;
            best_subset = &roots[t1].subset;
        }
    }
    return make_result(scene, candidates, *table, *best_subset, best_count,
                       "full-search");
}

PlacementResult greedy_search(const Scene& scene,
                              const CandidateSet& candidates, int ris_count,
                              const SearchOptions& opts) {
    if (ris_count < 0)
        throw std::invalid_argument("greedy_search: negative RIS count");
    if (candidates.size() < ris_count)
        throw std::invalid_argument("greedy_search: fewer candidates than RISs");

    VisibilityTable local;
    const VisibilityTable* table = opts.table;
    if (table == nullptr) {
        local = build_visibility_table(scene, candidates, opts.grid_resolution,
                                       opts.footprint_samples);
        table = &local;
    }

    const int words = table->words();
    const int n = candidates.size();
    std::vector<std::uint64_t> current(words, 0), trial(words, 0);
    std::vector<bool> used(n, false);
    std::vector<int> chosen;
    int current_count = 0;

    for (int round = 0; round < ris_count; ++round) {
        int best_t = -1, best_count = -1;
        for (int t = 0; t < n; ++t) {
            if (used[t]) continue;
            const int count =
                union_popcount(current.data(), table->mask(t), trial.data(),
                               words);
            if (count > best_count) {
                best_count = count;
                best_t = t;
            }
        }
        used[best_t] = true;
        chosen.push_back(best_t);
        current_count = union_popcount(current.data(), table->mask(best_t),
                                       current.data(), words);
    }
    return make_result(scene, candidates, *table, chosen, current_count,
                       "greedy");
}

PlacementResult random_placement(const Scene& scene, int ris_count,
                                 std::mt19937_64& rng,
                                 const SearchOptions& opts) {
    if (ris_count < 0)
        throw std::invalid_argument("random_placement: negative RIS count");

    std::uniform_real_distribution<double> dist(0.0, scene.perimeter());
    std::vector<Point2> positions;
    std::vector<int> hints;
    while (static_cast<int>(positions.size()) < ris_count) {
        const double s = dist(rng);
        const Point2 q = perimeter_point(scene, s);
        const bool dup =
            std::any_of(positions.begin(), positions.end(),
                        [&](Point2 p) { return distance(p, q) < kDupTol; });
        if (dup) continue;
        positions.push_back(q);
        hints.push_back(wall_at_perimeter(scene, s));
    }

    PlacementResult res;
    res.method = "random";
    res.positions = positions;

    if (opts.table != nullptr) {
        // Reuse the table's raster: cover the shadow cells directly.
        const VisibilityTable& table = *opts.table;
        std::vector<bool> covered(table.shadow_cells.size(), false);
        for (int j = 0; j < ris_count; ++j) {
            for (std::size_t s = 0; s < table.shadow_cells.size(); ++s) {
                if (covered[s]) continue;
                const std::uint32_t cell = table.shadow_cells[s];
                const Point2 p{(static_cast<int>(cell % table.nx) + 0.5) *
                                   table.resolution,
                               (static_cast<int>(cell / table.nx) + 0.5) *
                                   table.resolution};
                if (has_ris_los(scene, positions[j], p, opts.footprint_samples,
                                hints[j]))
                    covered[s] = true;
            }
        }
        const int shadow_covered =
            static_cast<int>(std::count(covered.begin(), covered.end(), true));
        res.normalized_coverage = table.normalized(shadow_covered);
        res.coverage_area = (table.bs_cells + shadow_covered) *
                            table.resolution * table.resolution;
    } else {
        const CoverageMap map =
            compute_coverage_map(scene, positions, opts.grid_resolution,
                                 opts.footprint_samples, hints);
        res.normalized_coverage = map.normalized_coverage();
        res.coverage_area = map.covered_area();
    }
    return res;
}

}  // namespace risim
