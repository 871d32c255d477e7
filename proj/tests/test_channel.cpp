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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "risim/channel.hpp"

using namespace risim;

namespace {

Scene empty_room() {
    Scene scene;
    scene.size_x = scene.size_y = 10.0;
    scene.size_z = 3.0;
    scene.bs_position = {5.0, 5.0, 3.0};
    return scene;
}

Scene room_with_circle() {
    Scene scene = empty_room();
    scene.obstacles.emplace_back(CircleObstacle{{5.0, 2.5}, 1.0});
    return scene;
}

BsArray table_bs() {
    BsArray bs;
    bs.plane = Plane::kXY;
    bs.sub_count_a = 2;
    bs.sub_count_b = 1;
    bs.elem_count_a = 4;
    bs.elem_count_b = 4;
    return bs;
}

ChannelParams los_only() {
    ChannelParams p;
    p.nlos_variance = 0.0;
    return p;
}

RisMount left_wall_mount(const Scene& scene) {
    return make_ris_mount(scene, {0.0, 5.0}, -1, 8, 8, 0.5, 1.0, 1.5);
}

}  // namespace

TEST_CASE("blocked LoS with zero scattering gives a zero channel") {
    const Scene scene = room_with_circle();
    std::mt19937_64 rng(1);
    const DirectChannel dc =
        synth_bs_user(scene, table_bs(), {5.0, 0.5, 1.0}, los_only(), rng);
    CHECK_FALSE(dc.los_present);
    CHECK(arma::norm(dc.h) == 0.0);
}

TEST_CASE("LoS gain follows the distance power law entrywise") {
    const Scene scene = empty_room();
    std::mt19937_64 rng(1);
    // User straight below the BS at distance 3.
    const DirectChannel dc =
        synth_bs_user(scene, table_bs(), {5.0, 5.0, 0.0}, los_only(), rng);
    REQUIRE(dc.los_present);
    REQUIRE(dc.h.n_elem == 32);
    for (arma::uword m = 0; m < dc.h.n_elem; ++m)
        CHECK(std::abs(dc.h(m)) == Catch::Approx(1.0 / 3.0));
    CHECK(dc.bs_departure.elevation == Catch::Approx(M_PI));
}

TEST_CASE("fixed seed reproduces the channel bitwise") {
    const Scene scene = empty_room();
    const ChannelParams params;  // Table defaults with scattering on
    std::mt19937_64 rng_a(77), rng_b(77);
    const DirectChannel a =
        synth_bs_user(scene, table_bs(), {2.0, 3.0, 1.0}, params, rng_a);
    const DirectChannel b =
        synth_bs_user(scene, table_bs(), {2.0, 3.0, 1.0}, params, rng_b);
    REQUIRE(a.h.n_elem == b.h.n_elem);
    for (arma::uword m = 0; m < a.h.n_elem; ++m) {
        CHECK(a.h(m).real() == b.h(m).real());
        CHECK(a.h(m).imag() == b.h(m).imag());
    }
}

TEST_CASE("scattered power matches the configured variance") {
    const Scene scene = room_with_circle();
    ChannelParams params;
    params.nlos_variance = 1e-3;
    std::mt19937_64 rng(3);
    // Blocked user: the channel is NLoS-only, so every entry has variance
    // equal to the per-component variance.
    double acc = 0.0;
    int count = 0;
    for (int rep = 0; rep < 3000; ++rep) {
        const DirectChannel dc =
            synth_bs_user(scene, table_bs(), {5.0, 0.5, 1.0}, params, rng);
        for (arma::uword m = 0; m < dc.h.n_elem; ++m) {
            acc += std::norm(dc.h(m));
            ++count;
        }
    }
    const double mean_power = acc / count;
    CHECK(mean_power == Catch::Approx(params.nlos_variance).epsilon(0.1));
}

TEST_CASE("user inside an obstacle is rejected") {
    const Scene scene = room_with_circle();
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(
        synth_bs_user(scene, table_bs(), {5.0, 2.5, 1.0}, los_only(), rng),
        std::invalid_argument);
}

TEST_CASE("RIS-user channel mirrors the direct one") {
    const Scene scene = room_with_circle();
    const RisMount mount = left_wall_mount(scene);
    std::mt19937_64 rng(9);

    // Open path from the left wall to a point the BS cannot see.
    const Point3 user{5.0, 0.5, 1.0};
    const RisUserChannel rc =
        synth_ris_user(scene, mount, user, los_only(), rng);
    REQUIRE(rc.los_present);
    REQUIRE(rc.h.n_elem == 64);
    const double d = distance(mount.center(), user);
    for (arma::uword n = 0; n < rc.h.n_elem; ++n)
        CHECK(std::abs(rc.h(n)) == Catch::Approx(1.0 / d));

    // A point shadowed from the RIS by the circle.
    const RisUserChannel blocked =
        synth_ris_user(scene, mount, {9.0, 0.6, 1.0}, los_only(), rng);
    if (!blocked.los_present) CHECK(arma::norm(blocked.h) == 0.0);

    std::mt19937_64 rng_a(4), rng_b(4);
    const ChannelParams params;
    const RisUserChannel ra = synth_ris_user(scene, mount, user, params, rng_a);
    const RisUserChannel rb = synth_ris_user(scene, mount, user, params, rng_b);
    CHECK(arma::approx_equal(ra.h, rb.h, "absdiff", 0.0));
}

TEST_CASE("BS-RIS channel is rank one without scattering") {
    const Scene scene = empty_room();
    const RisMount mount = left_wall_mount(scene);
    std::mt19937_64 rng(11);
    const BsRisChannel link =
        synth_bs_ris(scene, table_bs(), mount, los_only(), rng);
    REQUIRE(link.los_present);
    REQUIRE(link.g.n_rows == 64);
    REQUIRE(link.g.n_cols == 32);
    CHECK(arma::rank(link.g) == 1);

    const double c0 = 1.0 / distance(scene.bs_position, mount.center());
    // Both steering vectors start at phase zero.
    CHECK(std::abs(link.g(0, 0) - arma::cx_double(c0, 0.0)) < 1e-12);
    CHECK(arma::norm(link.g, "fro") ==
          Catch::Approx(c0 * std::sqrt(64.0 * 32.0)));

    // Arrival at the RIS points back toward the BS.
    const LosAngles expected = los_angles(mount.center(), scene.bs_position);
    CHECK(link.arrival_at_ris.elevation == Catch::Approx(expected.elevation));
    CHECK(link.arrival_at_ris.azimuth == Catch::Approx(expected.azimuth));
}

TEST_CASE("LoS flags agree with the scene predicates over random drops") {
    std::mt19937_64 scene_rng(21);
    std::uniform_real_distribution<double> coord(0.5, 9.5);
    const BsArray bs = table_bs();
    const ChannelParams params;
    int checked = 0;
    for (int rep = 0; rep < 400; ++rep) {
        Scene scene = room_with_circle();
        const Point2 p{coord(scene_rng), coord(scene_rng)};
        if (point_in_obstacle(scene, p)) continue;
        std::mt19937_64 rng(rep);
        const Point3 user{p.x, p.y, 1.0};
        const DirectChannel dc = synth_bs_user(scene, bs, user, params, rng);
        CHECK(dc.los_present == !segment_blocked(scene, scene.bs_2d(), p));

        const RisMount mount = left_wall_mount(scene);
        const RisUserChannel rc =
            synth_ris_user(scene, mount, user, params, rng);
        CHECK(rc.los_present == footprint_sees_point(scene, mount.wall_point, p,
                                                     mount.footprint_samples,
                                                     mount.wall));
        const BsRisChannel link = synth_bs_ris(scene, bs, mount, params, rng);
        CHECK(link.los_present ==
              footprint_sees_point(scene, mount.wall_point, scene.bs_2d(),
                                   mount.footprint_samples, mount.wall));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("drop synthesis wires dimensions and flags together") {
    const Scene scene = room_with_circle();
    const BsArray bs = table_bs();
    const ChannelParams params;
    std::vector<RisMount> mounts{left_wall_mount(scene),
                                 make_ris_mount(scene, {10.0, 2.0}, -1, 8, 8,
                                                0.5, 1.0, 1.5)};
    std::vector<Point3> users{{2.0, 8.0, 1.0}, {5.0, 0.5, 1.0}};
    std::mt19937_64 rng(31);
    const ChannelRealization r =
        synthesize_drop(scene, bs, mounts, users, params, rng);
    CHECK(r.num_users == 2);
    CHECK(r.num_ris == 2);
    CHECK(r.direct.n_rows == 2);
    CHECK(r.direct.n_cols == 32);
    REQUIRE(r.ris_user.size() == 2);
    CHECK(r.ris_user[0].n_rows == 2);
    CHECK(r.ris_user[0].n_cols == 64);
    CHECK(r.bs_ris[0].n_rows == 64);
    CHECK(r.bs_ris[0].n_cols == 32);
    CHECK(r.direct_los[1] == 0);  // user 2 sits in the shadow

    std::ostringstream os;
    realization_to_csv(r, os);
    CHECK(os.str().rfind("channel,row,col,re,im\n", 0) == 0);
}
