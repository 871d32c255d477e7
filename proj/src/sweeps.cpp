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

#include "risim/sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "risim/candidates.hpp"
#include "risim/placement.hpp"
#include "risim/protocol.hpp"

namespace risim {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

const char* obstacle_tag(ObstacleKind kind) {
    return kind == ObstacleKind::kCircle ? "circle" : "wall";
}

struct RowWriter {
    std::string text;
    const ScenarioConfig* config;
    std::uint64_t trial;

    void coverage_row(const std::string& method, int num_ris,
                      double coverage) {
        char buf[192];
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%s,,%d,%d,%s,,%s,\n",
                      static_cast<unsigned long long>(trial),
                      static_cast<unsigned long long>(config->seed),
                      method.c_str(), num_ris, config->obstacle_count,
                      obstacle_tag(config->obstacle_type),
                      fmt(coverage).c_str());
        text += buf;
    }

    void rate_row(const std::string& method, const std::string& scheme,
                  int num_ris, double snr_db, double coverage, double rate) {
        char buf[224];
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%s,%s,%d,%d,%s,%s,%s,%s\n",
                      static_cast<unsigned long long>(trial),
                      static_cast<unsigned long long>(config->seed),
                      method.c_str(), scheme.c_str(), num_ris,
                      config->obstacle_count,
                      obstacle_tag(config->obstacle_type), fmt(snr_db).c_str(),
                      fmt(coverage).c_str(), fmt(rate).c_str());
        text += buf;
    }
};

int resolve_workers(const ScenarioConfig& config) {
    return config.workers > 0 ? config.workers : omp_get_max_threads();
}

bool uses_method(const ScenarioConfig& config, const char* name) {
    return std::find(config.placement_methods.begin(),
                     config.placement_methods.end(),
                     name) != config.placement_methods.end();
}

PlacementResult place_by_method(const std::string& method, const Scene& scene,
                                const CandidateSet& tangent,
                                const CandidateSet& uniform,
                                const VisibilityTable& tangent_table,
                                const VisibilityTable& uniform_table,
                                int num_ris, const ScenarioConfig& config,
                                std::mt19937_64& placement_rng) {
    SearchOptions opts;
    opts.grid_resolution = config.grid_resolution;
    opts.footprint_samples = config.footprint_samples;
    if (method == "full-tangent") {
        opts.table = &tangent_table;
        return full_search(scene, tangent, std::min(num_ris, tangent.size()),
                           opts);
    }
    if (method == "full-uniform") {
        opts.table = &uniform_table;
        return full_search(scene, uniform, std::min(num_ris, uniform.size()),
                           opts);
    }
    if (method == "greedy-tangent") {
        opts.table = &tangent_table;
        return greedy_search(scene, tangent, std::min(num_ris, tangent.size()),
                             opts);
    }
    opts.table = &tangent_table;  // reuse its raster for the coverage value
    return random_placement(scene, num_ris, placement_rng, opts);
}

}  // namespace

void coverage_sweep(const ScenarioConfig& config, std::ostream& out) {
    config.validate();
    const int workers = resolve_workers(config);
    std::vector<std::string> blocks(config.trials);

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int trial = 0; trial < config.trials; ++trial) {
        const Scene scene = generate_scene(config, trial);
        const CandidateSet tangent = build_candidate_set_tangent(scene);
        const CandidateSet uniform =
            build_candidate_set_uniform(scene, config.uniform_spacing);
        const VisibilityTable tangent_table = build_visibility_table(
            scene, tangent, config.grid_resolution, config.footprint_samples);
        const VisibilityTable uniform_table = build_visibility_table(
            scene, uniform, config.grid_resolution, config.footprint_samples);
        std::mt19937_64 placement_rng =
            substream(config.seed, trial, RngPurpose::kPlacement);

        RowWriter rows{{}, &config, static_cast<std::uint64_t>(trial)};
        for (int num_ris : config.ris_counts) {
            for (const std::string& method : config.placement_methods) {
                const PlacementResult res = place_by_method(
                    method, scene, tangent, uniform, tangent_table,
                    uniform_table, num_ris, config, placement_rng);
                rows.coverage_row(method, num_ris, res.normalized_coverage);
            }
        }
        blocks[trial] = std::move(rows.text);
    }

    out << kTrialCsvHeader << '\n';
    for (const std::string& block : blocks) out << block;
}

void rate_sweep(const ScenarioConfig& config, std::ostream& out) {
    config.validate();
    const int workers = resolve_workers(config);
    const BsArray bs_array = config.bs_array();
    const BsCodebook bs_cb = build_bs_codebook(bs_array, config.v1, config.v2);
    std::vector<std::string> blocks(config.trials);

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int trial = 0; trial < config.trials; ++trial) {
        const Scene scene = generate_scene(config, trial);
        const std::vector<Point3> users = generate_users(scene, config, trial);

        const bool needs_tangent = uses_method(config, "full-tangent") ||
                                   uses_method(config, "greedy-tangent") ||
                                   uses_method(config, "random");
        const bool needs_uniform = uses_method(config, "full-uniform");
        CandidateSet tangent, uniform;
        VisibilityTable tangent_table, uniform_table;
        if (needs_tangent || uses_method(config, "random")) {
            tangent = build_candidate_set_tangent(scene);
            tangent_table =
                build_visibility_table(scene, tangent, config.grid_resolution,
                                       config.footprint_samples);
        }
        if (needs_uniform) {
            uniform =
                build_candidate_set_uniform(scene, config.uniform_spacing);
            uniform_table =
                build_visibility_table(scene, uniform, config.grid_resolution,
                                       config.footprint_samples);
        }
        std::mt19937_64 placement_rng =
            substream(config.seed, trial, RngPurpose::kPlacement);

        RowWriter rows{{}, &config, static_cast<std::uint64_t>(trial)};
        for (const std::string& method : config.placement_methods) {
            const PlacementResult placement = place_by_method(
                method, scene, tangent, uniform, tangent_table, uniform_table,
                config.ris_count, config, placement_rng);

            std::vector<RisMount> mounts;
            mounts.reserve(placement.positions.size());
            for (std::size_t p = 0; p < placement.positions.size(); ++p)
                mounts.push_back(
                    mount_from_position(scene, config, placement.positions[p]));

            // One channel stream per trial, restarted per method so every
            // placement sees the same NLoS randomness.
            std::mt19937_64 channel_rng =
                substream(config.seed, trial, RngPurpose::kChannel);
            const DropContext drop =
                make_drop(scene, bs_array, std::move(mounts), users,
                          config.channel, bs_cb, config.w1, config.w2,
                          /*power=*/1.0, /*noise_power=*/1.0, channel_rng);

            for (const std::string& scheme : config.schemes) {
                SchemeResult result;
                if (scheme == "proposed") {
                    result = run_proposed(drop);
                } else if (scheme == "upper-bound") {
                    result = run_upper_bound(drop);
                } else if (scheme == "rnd-coefficient") {
                    std::mt19937_64 phase_rng =
                        substream(config.seed, trial, RngPurpose::kRisPhases);
                    result = run_rnd_coefficient(drop, phase_rng);
                } else {
                    result = run_no_ris(drop);
                }
                for (double snr_db : config.snr_db) {
                    arma::vec sinr;
                    double rate = 0.0;
                    rate_at(result, db_to_linear(snr_db), 1.0, sinr, rate);
                    rows.rate_row(method, scheme, config.ris_count, snr_db,
                                  placement.normalized_coverage, rate);
                }
            }
        }
        blocks[trial] = std::move(rows.text);
    }

    out << kTrialCsvHeader << '\n';
    for (const std::string& block : blocks) out << block;
}

}  // namespace risim
