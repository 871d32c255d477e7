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

#include "risim/scenario.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace risim {

using nlohmann::json;

BsArray ScenarioConfig::bs_array() const {
    BsArray bs;
    bs.plane = bs_plane;
    bs.sub_count_a = bs_sub_a;
    bs.sub_count_b = bs_sub_b;
    bs.elem_count_a = bs_elem_a;
    bs.elem_count_b = bs_elem_b;
    bs.spacing_a = wavelength / 2.0;
    bs.spacing_b = wavelength / 2.0;
    bs.wavelength = wavelength;
    return bs;
}

ArrayGeometry ScenarioConfig::ris_geometry_for_wall(int wall) const {
    return {ris_plane_for_wall(wall), ris_elem_a, ris_elem_b, wavelength / 2.0,
            wavelength / 2.0, wavelength};
}

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("config: " + msg);
    };
    if (!(room_x > 0) || !(room_y > 0) || !(room_z > 0))
        fail("room dimensions must be positive");
    if (bs_position.x < 0 || bs_position.x > room_x || bs_position.y < 0 ||
        bs_position.y > room_y)
        fail("BS position outside the room");
    if (std::abs(bs_position.z - room_z) > kGeomTol)
        fail("BS must sit on the ceiling plane");
    if (bs_sub_a < 1 || bs_sub_b < 1 || bs_elem_a < 1 || bs_elem_b < 1)
        fail("BS antenna counts must be >= 1");
    if (ris_elem_a < 1 || ris_elem_b < 1) fail("RIS element counts must be >= 1");
    if (!(ris_length > 0)) fail("ris length must be positive");
    if (ris_z < 0 || ris_z > room_z) fail("ris z-center outside the room");
    if (ris_count < 0) fail("ris count must be >= 0");
    if (obstacle_count < 0) fail("obstacle count must be >= 0");
    if (!(circle_radius_min > 0) || circle_radius_max < circle_radius_min)
        fail("bad circle radius range");
    if (!(wall_length_min > 0) || wall_length_max < wall_length_min)
        fail("bad wall length range");
    if (num_users < 1) fail("at least one user required");
    if (num_users > bs_sub_a * bs_sub_b)
        fail("more users than RF chains (need K <= L)");
    if (!(user_height >= 0) || user_height > room_z)
        fail("user height outside the room");
    if (!(channel.path_loss_exponent >= 2.0)) fail("path loss exponent must be >= 2");
    if (channel.nlos_variance < 0) fail("NLoS variance must be >= 0");
    if (channel.num_nlos_paths < 0) fail("multipath count must be >= 0");
    if (!(wavelength > 0)) fail("wavelength must be positive");
    if (v1 < 1 || v2 < 1 || w1 < 1 || w2 < 1) fail("codebook sizes must be >= 1");
    if (!(grid_resolution > 0)) fail("grid resolution must be positive");
    if (!(uniform_spacing > 0)) fail("uniform spacing must be positive");
    if (footprint_samples < 2) fail("need at least 2 footprint samples");
    if (trials < 0) fail("trials must be >= 0");
    if (workers < 0) fail("workers must be >= 0");
    for (int j : ris_counts)
        if (j < 0) fail("ris_counts entries must be >= 0");
    static const std::set<std::string> kMethods{"full-tangent", "full-uniform",
                                                "greedy-tangent", "random"};
    for (const auto& m : placement_methods)
        if (!kMethods.count(m)) fail("unknown placement method '" + m + "'");
    static const std::set<std::string> kSchemes{"proposed", "upper-bound",
                                                "rnd-coefficient", "no-ris"};
    for (const auto& s : schemes)
        if (!kSchemes.count(s)) fail("unknown scheme '" + s + "'");
}

namespace {

Plane plane_from_string(const std::string& s) {
    if (s == "xy") return Plane::kXY;
    if (s == "yz") return Plane::kYZ;
    if (s == "xz") return Plane::kXZ;
    throw std::invalid_argument("config: unknown plane '" + s + "'");
}

std::string plane_to_string(Plane p) {
    switch (p) {
        case Plane::kXY:
            return "xy";
        case Plane::kYZ:
            return "yz";
        default:
            return "xz";
    }
}

template <typename T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") +
                                    e.what());
    }

    ScenarioConfig c;
    if (j.contains("room")) {
        const json& r = j["room"];
        read_if(r, "size_x", c.room_x);
        read_if(r, "size_y", c.room_y);
        read_if(r, "size_z", c.room_z);
    }
    if (j.contains("bs")) {
        const json& b = j["bs"];
        if (b.contains("position")) {
            const auto p = b["position"].get<std::vector<double>>();
            if (p.size() != 3)
                throw std::invalid_argument("config: bs.position needs 3 entries");
            c.bs_position = {p[0], p[1], p[2]};
        }
        if (b.contains("plane"))
            c.bs_plane = plane_from_string(b["plane"].get<std::string>());
        if (b.contains("subarrays")) {
            const auto v = b["subarrays"].get<std::vector<int>>();
            if (v.size() != 2)
                throw std::invalid_argument("config: bs.subarrays needs 2 entries");
            c.bs_sub_a = v[0];
            c.bs_sub_b = v[1];
        }
        if (b.contains("elements")) {
            const auto v = b["elements"].get<std::vector<int>>();
            if (v.size() != 2)
                throw std::invalid_argument("config: bs.elements needs 2 entries");
            c.bs_elem_a = v[0];
            c.bs_elem_b = v[1];
        }
    }
    if (j.contains("ris")) {
        const json& r = j["ris"];
        if (r.contains("elements")) {
            const auto v = r["elements"].get<std::vector<int>>();
            if (v.size() != 2)
                throw std::invalid_argument("config: ris.elements needs 2 entries");
            c.ris_elem_a = v[0];
            c.ris_elem_b = v[1];
        }
        read_if(r, "length", c.ris_length);
        read_if(r, "z_center", c.ris_z);
        read_if(r, "count", c.ris_count);
    }
    if (j.contains("obstacles")) {
        const json& o = j["obstacles"];
        if (o.contains("type")) {
            const auto t = o["type"].get<std::string>();
            if (t == "circle")
                c.obstacle_type = ObstacleKind::kCircle;
            else if (t == "wall")
                c.obstacle_type = ObstacleKind::kWall;
            else
                throw std::invalid_argument("config: unknown obstacle type '" +
                                            t + "'");
        }
        read_if(o, "count", c.obstacle_count);
        if (o.contains("radius_range")) {
            const auto v = o["radius_range"].get<std::vector<double>>();
            if (v.size() != 2)
                throw std::invalid_argument(
                    "config: obstacles.radius_range needs 2 entries");
            c.circle_radius_min = v[0];
            c.circle_radius_max = v[1];
        }
        if (o.contains("length_range")) {
            const auto v = o["length_range"].get<std::vector<double>>();
            if (v.size() != 2)
                throw std::invalid_argument(
                    "config: obstacles.length_range needs 2 entries");
            c.wall_length_min = v[0];
            c.wall_length_max = v[1];
        }
    }
    if (j.contains("users")) {
        read_if(j["users"], "count", c.num_users);
        read_if(j["users"], "height", c.user_height);
    }
    if (j.contains("channel")) {
        const json& ch = j["channel"];
        read_if(ch, "path_loss_exponent", c.channel.path_loss_exponent);
        if (ch.contains("nlos_variance_db"))
            c.channel.nlos_variance =
                std::pow(10.0, ch["nlos_variance_db"].get<double>() / 10.0);
        read_if(ch, "multipath_count", c.channel.num_nlos_paths);
        read_if(ch, "wavelength", c.wavelength);
    }
    if (j.contains("codebooks")) {
        const json& cb = j["codebooks"];
        if (cb.contains("bs")) {
            const auto v = cb["bs"].get<std::vector<int>>();
            if (v.size() != 2)
                throw std::invalid_argument("config: codebooks.bs needs 2 entries");
            c.v1 = v[0];
            c.v2 = v[1];
        }
        if (cb.contains("ris")) {
            const auto v = cb["ris"].get<std::vector<int>>();
            if (v.size() != 2)
                throw std::invalid_argument("config: codebooks.ris needs 2 entries");
            c.w1 = v[0];
            c.w2 = v[1];
        }
    }
    if (j.contains("coverage")) {
        const json& cv = j["coverage"];
        read_if(cv, "grid_resolution", c.grid_resolution);
        read_if(cv, "uniform_spacing", c.uniform_spacing);
        read_if(cv, "footprint_samples", c.footprint_samples);
        read_if(cv, "ris_counts", c.ris_counts);
    }
    if (j.contains("rate")) read_if(j["rate"], "snr_db", c.snr_db);
    if (j.contains("run")) {
        const json& r = j["run"];
        read_if(r, "trials", c.trials);
        read_if(r, "seed", c.seed);
        read_if(r, "workers", c.workers);
        read_if(r, "placement_methods", c.placement_methods);
        read_if(r, "schemes", c.schemes);
    }
    c.validate();
    return c;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

Scene generate_scene(const ScenarioConfig& config, std::uint64_t trial) {
    std::mt19937_64 rng = substream(config.seed, trial, RngPurpose::kScene);
    std::uniform_real_distribution<double> ux(0.0, config.room_x);
    std::uniform_real_distribution<double> uy(0.0, config.room_y);

    Scene scene;
    scene.size_x = config.room_x;
    scene.size_y = config.room_y;
    scene.size_z = config.room_z;
    scene.bs_position = config.bs_position;
    scene.bs_plane = config.bs_plane;
    scene.ris_length = config.ris_length;
    const Point2 bs = scene.bs_2d();

    // Shape parameters are drawn once per obstacle; only the center is
    // redrawn until the footprint fits inside the room and clears the BS,
    // so the radius/length/angle marginals stay uniform.
    scene.obstacles.reserve(config.obstacle_count);
    for (int i = 0; i < config.obstacle_count; ++i) {
        if (config.obstacle_type == ObstacleKind::kCircle) {
            std::uniform_real_distribution<double> ur(config.circle_radius_min,
                                                      config.circle_radius_max);
            CircleObstacle c;
            c.radius = ur(rng);
            for (;;) {
                c.center = {ux(rng), uy(rng)};
                const bool inside = c.center.x - c.radius >= 0.0 &&
                                    c.center.x + c.radius <= config.room_x &&
                                    c.center.y - c.radius >= 0.0 &&
                                    c.center.y + c.radius <= config.room_y;
                const bool clear_of_bs =
                    distance(bs, c.center) > c.radius + kDupTol;
                if (inside && clear_of_bs) {
                    scene.obstacles.emplace_back(c);
                    break;
                }
            }
        } else {
            std::uniform_real_distribution<double> ul(config.wall_length_min,
                                                      config.wall_length_max);
            std::uniform_real_distribution<double> ua(0.0, std::numbers::pi);
            WallObstacle w;
            w.length = ul(rng);
            do {
                w.angle = ua(rng);
            } while (!(w.angle > 0.0));
            for (;;) {
                w.center = {ux(rng), uy(rng)};
                const bool inside =
                    scene.contains(w.end_a()) && scene.contains(w.end_b());
                const bool clear_of_bs =
                    segment_point_distance(w.end_a(), w.end_b(), bs) > kDupTol;
                if (inside && clear_of_bs) {
                    scene.obstacles.emplace_back(w);
                    break;
                }
            }
        }
    }
    return scene;
}

std::vector<Point3> generate_users(const Scene& scene,
                                   const ScenarioConfig& config,
                                   std::uint64_t trial) {
    std::mt19937_64 rng = substream(config.seed, trial, RngPurpose::kUsers);
    std::uniform_real_distribution<double> ux(0.0, scene.size_x);
    std::uniform_real_distribution<double> uy(0.0, scene.size_y);
    std::vector<Point3> users;
    users.reserve(config.num_users);
    while (static_cast<int>(users.size()) < config.num_users) {
        const Point2 p{ux(rng), uy(rng)};
        if (point_in_obstacle(scene, p)) continue;
        users.push_back({p.x, p.y, config.user_height});
    }
    return users;
}

std::string scene_to_json(const Scene& scene) {
    json j;
    j["size"] = {scene.size_x, scene.size_y, scene.size_z};
    j["bs_position"] = {scene.bs_position.x, scene.bs_position.y,
                        scene.bs_position.z};
    j["bs_plane"] = plane_to_string(scene.bs_plane);
    j["ris_length"] = scene.ris_length;
    j["obstacles"] = json::array();
    for (const Obstacle& ob : scene.obstacles) {
        json o;
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            o["type"] = "circle";
            o["center"] = {c->center.x, c->center.y};
            o["radius"] = c->radius;
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            o["type"] = "wall";
            o["center"] = {w.center.x, w.center.y};
            o["length"] = w.length;
            o["angle"] = w.angle;
        }
        j["obstacles"].push_back(o);
    }
    return j.dump(2);
}

Scene scene_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scene: JSON parse error: ") +
                                    e.what());
    }
    Scene scene;
    if (j.contains("size")) {
        const auto v = j["size"].get<std::vector<double>>();
        if (v.size() != 3)
            throw std::invalid_argument("scene: size needs 3 entries");
        scene.size_x = v[0];
        scene.size_y = v[1];
        scene.size_z = v[2];
    }
    if (j.contains("bs_position")) {
        const auto v = j["bs_position"].get<std::vector<double>>();
        if (v.size() != 3)
            throw std::invalid_argument("scene: bs_position needs 3 entries");
        scene.bs_position = {v[0], v[1], v[2]};
    }
    if (j.contains("bs_plane"))
        scene.bs_plane = plane_from_string(j["bs_plane"].get<std::string>());
    read_if(j, "ris_length", scene.ris_length);
    if (j.contains("obstacles")) {
        for (const json& o : j["obstacles"]) {
            const auto type = o.at("type").get<std::string>();
            const auto center = o.at("center").get<std::vector<double>>();
            if (center.size() != 2)
                throw std::invalid_argument("scene: obstacle center needs 2 entries");
            if (type == "circle") {
                scene.obstacles.emplace_back(CircleObstacle{
                    {center[0], center[1]}, o.at("radius").get<double>()});
            } else if (type == "wall") {
                scene.obstacles.emplace_back(
                    WallObstacle{{center[0], center[1]},
                                 o.at("length").get<double>(),
                                 o.at("angle").get<double>()});
            } else {
                throw std::invalid_argument("scene: unknown obstacle type '" +
                                            type + "'");
            }
        }
    }
    scene.validate();
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("scene: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return scene_from_json(ss.str());
}

RisMount mount_from_position(const Scene& scene, const ScenarioConfig& config,
                             Point2 position, int wall_hint) {
    return make_ris_mount(scene, position, wall_hint, config.ris_elem_a,
                          config.ris_elem_b, config.wavelength / 2.0,
                          config.wavelength, config.ris_z,
                          config.footprint_samples);
}

}  // namespace risim
