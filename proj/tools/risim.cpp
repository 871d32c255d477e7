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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "risim/candidates.hpp"
#include "risim/placement.hpp"
#include "risim/protocol.hpp"
#include "risim/scenario.hpp"
#include "risim/sweeps.hpp"

namespace {

using namespace risim;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int trials = -1;
    int workers = -1;
    bool seed_set = false;
};

ScenarioConfig resolve_config(const CommonOpts& opts) {
    ScenarioConfig config;
    if (!opts.config_path.empty()) config = load_scenario(opts.config_path);
    if (opts.seed_set) config.seed = opts.seed;
    if (opts.trials >= 0) config.trials = opts.trials;
    if (opts.workers >= 0) config.workers = opts.workers;
    config.validate();
    return config;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_trials = true) {
    cmd->add_option("--config", opts.config_path, "scenario config (JSON)");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--seed", opts.seed, "master seed override")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
    if (with_trials)
        cmd->add_option("--trials", opts.trials, "trial count override");
    cmd->add_option("--workers", opts.workers, "worker thread override");
}

int run_coverage_sweep(const CommonOpts& opts) {
    const ScenarioConfig config = resolve_config(opts);
    std::ostringstream os;
    coverage_sweep(config, os);
    write_output(opts.out_path, os.str());
    return 0;
}

int run_rate_sweep(const CommonOpts& opts) {
    const ScenarioConfig config = resolve_config(opts);
    std::ostringstream os;
    rate_sweep(config, os);
    write_output(opts.out_path, os.str());
    return 0;
}

int run_scene_gen(const CommonOpts& opts, std::uint64_t trial,
                  const std::string& coverage_out, const std::string& method,
                  int num_ris) {
    const ScenarioConfig config = resolve_config(opts);
    const Scene scene = generate_scene(config, trial);
    write_output(opts.out_path, scene_to_json(scene) + "\n");

    if (!coverage_out.empty()) {
        std::mt19937_64 placement_rng =
            substream(config.seed, trial, RngPurpose::kPlacement);
        SearchOptions search;
        search.grid_resolution = config.grid_resolution;
        search.footprint_samples = config.footprint_samples;
        PlacementResult placement;
        if (method == "random") {
            placement = random_placement(scene, num_ris, placement_rng, search);
        } else {
            const CandidateSet cands =
                method == "full-uniform"
                    ? build_candidate_set_uniform(scene, config.uniform_spacing)
                    : build_candidate_set_tangent(scene);
            const int j = std::min(num_ris, cands.size());
            placement = method == "greedy-tangent"
                            ? greedy_search(scene, cands, j, search)
                            : full_search(scene, cands, j, search);
        }
        const CoverageMap map = compute_coverage_map(
            scene, placement.positions, config.grid_resolution,
            config.footprint_samples);
        std::ostringstream os;
        coverage_map_to_csv(map, os);
        std::ofstream out(coverage_out, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file '" +
                                     coverage_out + "'");
        out << os.str();
    }
    return 0;
}

int run_candidate_dump(const CommonOpts& opts, std::uint64_t trial,
                       const std::string& scene_path,
                       const std::string& method, double spacing) {
    const ScenarioConfig config = resolve_config(opts);
    const Scene scene = scene_path.empty() ? generate_scene(config, trial)
                                           : load_scene(scene_path);
    const double delta = spacing > 0.0 ? spacing : config.uniform_spacing;
    const CandidateSet cands =
        method == "uniform" ? build_candidate_set_uniform(scene, delta)
                            : build_candidate_set_tangent(scene);
    std::ostringstream os;
    os << "wall,x,y\n";
    char buf[96];
    for (int t = 0; t < cands.size(); ++t) {
        std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10g\n",
                      cands.wall_index[t], cands.positions[t].x,
                      cands.positions[t].y);
        os << buf;
    }
    write_output(opts.out_path, os.str());
    return 0;
}

// Quick end-to-end invariant suite; prints one line per check.
int run_selfcheck(const CommonOpts& opts) {
    ScenarioConfig config;
    if (!opts.config_path.empty()) config = load_scenario(opts.config_path);
    if (opts.seed_set) config.seed = opts.seed;
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    std::mt19937_64 rng(config.seed + 17);
    std::uniform_real_distribution<double> coord(0.0, 10.0);

    // Blockage symmetry and monotonicity over random scenes.
    {
        bool symmetric = true;
        bool monotone = true;
        for (int rep = 0; rep < 200; ++rep) {
            ScenarioConfig gen = config;
            gen.obstacle_count = 4;
            Scene scene = generate_scene(gen, rep);
            const Point2 a{coord(rng), coord(rng)};
            const Point2 b{coord(rng), coord(rng)};
            const bool ab = segment_blocked(scene, a, b);
            if (ab != segment_blocked(scene, b, a)) symmetric = false;
            Scene more = scene;
            more.obstacles.push_back(CircleObstacle{{5.0, 2.5}, 1.0});
            if (ab && !segment_blocked(more, a, b)) monotone = false;
        }
        report("segment blockage symmetric", symmetric);
        report("blockage monotone under added obstacles", monotone);
    }

    // Every tangent candidate keeps direct BS LoS.
    {
        bool ok = true;
        for (int rep = 0; rep < 50; ++rep) {
            const Scene scene = generate_scene(config, rep);
            const CandidateSet cands = build_candidate_set_tangent(scene);
            for (const Point2& q : cands.positions)
                if (segment_blocked(scene, scene.bs_2d(), q)) ok = false;
        }
        report("tangent candidates see the BS", ok);
    }

    // Beam self-alignment hits the full array gain.
    {
        const BsArray bs = config.bs_array();
        const ArrayGeometry sub = bs.subarray_geometry();
        bool ok = true;
        std::uniform_real_distribution<double> el(0.6, 2.5), az(-3.0, 3.0);
        for (int rep = 0; rep < 100; ++rep) {
            const double theta = el(rng), phi = az(rng);
            const arma::cx_vec a = array_response(sub, theta, phi);
            const arma::cx_vec f = steering_beam(sub, theta, phi);
            const double gain = std::norm(arma::as_scalar(arma::strans(a) * f));
            if (std::abs(gain - sub.size()) > 1e-9 * sub.size()) ok = false;
        }
        report("steering beams reach the coherent gain", ok);
    }

    // Zero-forcing suppresses cross-user leakage.
    {
        bool ok = true;
        arma::arma_rng::set_seed(config.seed + 3);
        for (int rep = 0; rep < 100; ++rep) {
            const arma::cx_mat w(2, 2, arma::fill::randn);
            if (arma::cond(w) > 1e6) continue;
            const arma::cx_mat f = zero_forcing(w);
            const arma::cx_mat link = w * f;
            const double leak = std::abs(link(0, 1)) / std::abs(link(0, 0));
            if (leak > 1e-9) ok = false;
        }
        report("zero-forcing cancels interference", ok);
    }

    // Assignment constraints on random scan reports.
    {
        bool ok = true;
        std::uniform_real_distribution<double> snr(0.0, 10.0);
        for (int rep = 0; rep < 200; ++rep) {
            const int users = 3, num_ris = 2;
            ScanReport rep_data;
            rep_data.direct.set_size(users, 4);
            rep_data.direct.imbue([&]() { return snr(rng); });
            rep_data.via_ris.resize(num_ris);
            for (auto& m : rep_data.via_ris) {
                m.set_size(users, 5);
                m.imbue([&]() { return snr(rng); });
            }
            const Assignment a = assign_users(rep_data, num_ris);
            std::vector<int> ris_uses(num_ris + 1, 0);
            for (int u : a.user_ris)
                if (u > 0) ++ris_uses[u];
            for (int j = 1; j <= num_ris; ++j)
                if (ris_uses[j] > 1) ok = false;
        }
        report("assignment honors one-RIS-per-user limits", ok);
    }

    // Byte-identical sweep output across worker counts.
    {
        ScenarioConfig small = config;
        small.trials = 2;
        small.obstacle_count = 3;
        small.v1 = small.v2 = 4;
        small.w1 = small.w2 = 4;
        small.grid_resolution = 0.2;
        small.snr_db = {10.0, 20.0};
        std::ostringstream a, b;
        small.workers = 1;
        rate_sweep(small, a);
        small.workers = 2;
        rate_sweep(small, b);
        report("rate sweep deterministic across workers", a.str() == b.str());
    }

    std::cout << (failures == 0 ? "selfcheck passed\n" : "selfcheck FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indoor RIS placement and hybrid beamforming simulator"};
    app.require_subcommand(1);

    CommonOpts cov_opts, rate_opts, scene_opts, cand_opts, check_opts;
    std::uint64_t scene_trial = 0, cand_trial = 0;
    std::string scene_coverage_out, scene_method = "full-tangent";
    int scene_ris = 2;
    std::string cand_scene_path, cand_method = "tangent";
    double cand_spacing = 0.0;

    CLI::App* cov = app.add_subcommand("coverage-sweep",
                                       "coverage vs number of RISs");
    add_common(cov, cov_opts);

    CLI::App* rate = app.add_subcommand("rate-sweep", "sum rate vs SNR");
    add_common(rate, rate_opts);

    CLI::App* scene = app.add_subcommand("scene-gen",
                                         "generate one scene as JSON");
    add_common(scene, scene_opts, /*with_trials=*/false);
    scene->add_option("--trial", scene_trial, "trial index (default 0)");
    scene->add_option("--coverage-out", scene_coverage_out,
                      "also write a coverage map CSV here");
    scene->add_option("--method", scene_method,
                      "placement for the coverage map")
        ->check(CLI::IsMember({"full-tangent", "full-uniform", "greedy-tangent",
                               "random"}));
    scene->add_option("--ris", scene_ris, "RIS count for the coverage map");

    CLI::App* cand = app.add_subcommand("candidate-dump",
                                        "dump RIS candidate positions as CSV");
    add_common(cand, cand_opts, /*with_trials=*/false);
    cand->add_option("--trial", cand_trial, "trial index (default 0)");
    cand->add_option("--scene", cand_scene_path, "scene JSON instead of a trial");
    cand->add_option("--method", cand_method, "candidate construction")
        ->check(CLI::IsMember({"tangent", "uniform"}));
    cand->add_option("--spacing", cand_spacing,
                     "uniform spacing override [m]");

    CLI::App* check = app.add_subcommand("selfcheck",
                                         "run the invariant suite");
    add_common(check, check_opts, /*with_trials=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cov->parsed()) return run_coverage_sweep(cov_opts);
        if (rate->parsed()) return run_rate_sweep(rate_opts);
        if (scene->parsed())
            return run_scene_gen(scene_opts, scene_trial, scene_coverage_out,
                                 scene_method, scene_ris);
        if (cand->parsed())
            return run_candidate_dump(cand_opts, cand_trial, cand_scene_path,
                                      cand_method, cand_spacing);
        if (check->parsed()) return run_selfcheck(check_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
