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

#include "oracles.hpp"
#include "risim/geometry.hpp"

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

}  // namespace

TEST_CASE("segment_blocked basics") {
    const Scene empty = empty_room();
    CHECK_FALSE(segment_blocked(empty, {5, 5}, {1, 1}));
    CHECK_FALSE(segment_blocked(empty, {3, 3}, {3, 3}));  // degenerate

    const Scene circle = room_with_circle();
    CHECK(segment_blocked(circle, {5, 5}, {5, 0}));  // through the center

    Scene wall = empty_room();
    wall.obstacles.emplace_back(WallObstacle{{3.0, 5.0}, 2.0, M_PI / 2});
    CHECK(segment_blocked(wall, {5, 5}, {0, 5}));  // crosses at (3,5)
    CHECK_FALSE(segment_blocked(wall, {5, 5}, {4, 5}));  // stops short
}

TEST_CASE("tangency and endpoint contact do not block") {
    const Scene circle = room_with_circle();
    // The line y = 1.5 touches the disk at exactly one point.
    CHECK_FALSE(segment_blocked(circle, {0, 1.5}, {10, 1.5}));
    // Just inside the band blocks.
    CHECK(segment_blocked(circle, {0, 1.6}, {10, 1.6}));

    Scene wall = empty_room();
    wall.obstacles.emplace_back(WallObstacle{{5.0, 2.0}, 2.0, M_PI});
    const auto& w = std::get<WallObstacle>(wall.obstacles[0]);
    // Segment ending exactly on a wall endpoint does not cross.
    CHECK_FALSE(segment_blocked(wall, {5, 5}, w.end_a()));
    CHECK_FALSE(segment_blocked(wall, {5, 5}, w.end_b()));
    // Collinear grazing along the wall line does not cross.
    CHECK_FALSE(segment_blocked(wall, {0, 2}, {10, 2}));
}

TEST_CASE("segment_blocked ignore index") {
    const Scene circle = room_with_circle();
    CHECK_FALSE(segment_blocked(circle, {5, 5}, {5, 0}, 0));
}

TEST_CASE("point_in_obstacle open interiors") {
    const Scene circle = room_with_circle();
    CHECK(point_in_obstacle(circle, {5.0, 2.5}));
    CHECK(point_in_obstacle(circle, {5.0, 3.2}));
    CHECK_FALSE(point_in_obstacle(circle, {5.0, 3.5}));  // on the boundary
    CHECK_FALSE(point_in_obstacle(circle, {8.0, 8.0}));
}

TEST_CASE("has_direct_los") {
    const Scene empty = empty_room();
    CHECK(has_direct_los(empty, {9, 9}));

    const Scene circle = room_with_circle();
    CHECK_FALSE(has_direct_los(circle, {5, 0.5}));  // in the shadow cone
    CHECK(has_direct_los(circle, {0.5, 9.5}) ==
          testing::oracle_has_direct_los(circle, {0.5, 9.5}));
    CHECK(has_direct_los(circle, {0.5, 9.5}));

    CHECK_THROWS_AS(has_direct_los(circle, {5.0, 2.5}), std::invalid_argument);
}

TEST_CASE("blockage agrees with the sampling oracle on random segments") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::uniform_real_distribution<double> radius(0.5, 1.5);

    int agreements = 0;
    const int total = 300;
    for (int rep = 0; rep < total; ++rep) {
        Scene scene = empty_room();
        for (int i = 0; i < 3; ++i) {
            const double r = radius(rng);
            scene.obstacles.emplace_back(CircleObstacle{
                {std::clamp(coord(rng), r, 10.0 - r),
                 std::clamp(coord(rng), r, 10.0 - r)},
                r});
        }
        scene.obstacles.emplace_back(WallObstacle{{coord(rng) * 0.5 + 2.5,
                                                   coord(rng) * 0.5 + 2.5},
                                                  2.0,
                                                  M_PI / 3});
        const Point2 a{coord(rng), coord(rng)};
        const Point2 b{coord(rng), coord(rng)};
        if (segment_blocked(scene, a, b) ==
            testing::oracle_segment_blocked(scene, a, b, 4000))
            ++agreements;
    }
    CHECK(agreements >= total - 1);
}

TEST_CASE("blockage symmetry and monotonicity") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    for (int rep = 0; rep < 200; ++rep) {
        Scene scene = room_with_circle();
        scene.obstacles.emplace_back(WallObstacle{{6.0, 6.0}, 3.0, 1.0});
        const Point2 a{coord(rng), coord(rng)};
        const Point2 b{coord(rng), coord(rng)};
        const bool ab = segment_blocked(scene, a, b);
        REQUIRE(ab == segment_blocked(scene, b, a));

        Scene more = scene;
        more.obstacles.emplace_back(CircleObstacle{{2.0, 8.0}, 1.0});
        if (ab) REQUIRE(segment_blocked(more, a, b));
    }
}

TEST_CASE("ris_footprint") {
    const Scene scene = empty_room();

    const Segment center = ris_footprint(scene, {0, 5});
    CHECK(center.a.x == 0.0);
    CHECK(center.a.y == Catch::Approx(4.75));
    CHECK(center.b.y == Catch::Approx(5.25));

    const Segment corner = ris_footprint(scene, {0, 0.1});
    CHECK(corner.a.y == Catch::Approx(0.0));
    CHECK(corner.b.y == Catch::Approx(0.5));

    Scene wide = scene;
    wide.ris_length = 1.0;
    const Segment right = ris_footprint(wide, {10, 3});
    CHECK(right.a.x == 10.0);
    CHECK(right.a.y == Catch::Approx(2.5));
    CHECK(right.b.y == Catch::Approx(3.5));

    CHECK_THROWS_AS(ris_footprint(scene, {5, 5}), std::invalid_argument);
}

TEST_CASE("has_ris_los") {
    const Scene empty = empty_room();
    CHECK(has_ris_los(empty, {0, 5}, {7, 7}));
    CHECK(has_ris_los(empty, {10, 0.05}, {1, 9}));

    // Wall from (4,2) to (6,2) shadows both the boundary point below it and
    // the target: no two-hop path exists.
    Scene wall = empty_room();
    wall.obstacles.emplace_back(WallObstacle{{5.0, 2.0}, 2.0, M_PI});
    CHECK_FALSE(has_ris_los(wall, {5, 0}, {5, 1}));
    CHECK(testing::oracle_segment_blocked(wall, wall.bs_2d(), {5, 0}));

    // RIS on the left wall sees around the circle's shadow.
    const Scene circle = room_with_circle();
    CHECK(has_ris_los(circle, {0, 5}, {5, 0.5}));
    CHECK_FALSE(testing::oracle_segment_blocked(circle, {0, 5}, {5, 0.5}));
    CHECK_FALSE(testing::oracle_segment_blocked(circle, circle.bs_2d(), {0, 5}));
}

TEST_CASE("perimeter parameterization") {
    const Scene scene = empty_room();
    CHECK(perimeter_coord(scene, {0, 0}) == 0.0);
    CHECK(perimeter_coord(scene, {0, 10}) == Catch::Approx(10.0));
    CHECK(perimeter_coord(scene, {10, 10}) == Catch::Approx(20.0));
    CHECK(perimeter_coord(scene, {10, 0}) == Catch::Approx(30.0));
    CHECK(perimeter_coord(scene, {0, 4.5}) == Catch::Approx(4.5));

    for (double s : {0.0, 3.7, 12.2, 25.0, 33.3, 39.999}) {
        const Point2 p = perimeter_point(scene, s);
        CHECK(perimeter_coord(scene, p) == Catch::Approx(s).margin(1e-9));
        CHECK(boundary_wall(scene, p) == wall_at_perimeter(scene, s));
    }

    CHECK(boundary_wall(scene, {0, 0}) == kWallLeft);
    CHECK(boundary_wall(scene, {0, 10}) == kWallTop);
    CHECK(boundary_wall(scene, {10, 10}) == kWallRight);
    CHECK(boundary_wall(scene, {10, 0}) == kWallBottom);
    CHECK(boundary_wall(scene, {5, 5}) == -1);
}

TEST_CASE("scene validation") {
    Scene scene = empty_room();
    scene.obstacles.emplace_back(CircleObstacle{{5.0, 2.5}, 1.0});
    CHECK_NOTHROW(scene.validate());

    Scene off_ceiling = scene;
    off_ceiling.bs_position.z = 2.0;
    CHECK_THROWS_AS(off_ceiling.validate(), std::invalid_argument);

    Scene outside = scene;
    outside.obstacles.emplace_back(CircleObstacle{{0.5, 0.5}, 1.0});
    CHECK_THROWS_AS(outside.validate(), std::invalid_argument);

    Scene bad_angle = scene;
    bad_angle.obstacles.emplace_back(WallObstacle{{5.0, 7.0}, 2.0, 0.0});
    CHECK_THROWS_AS(bad_angle.validate(), std::invalid_argument);
}
