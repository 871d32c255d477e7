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

#include <cmath>
#include <variant>
#include <vector>

namespace risim {

// Tolerance band for all intersection predicates [m]. Contacts closer than
// this to exact tangency count as non-blocking.
inline constexpr double kGeomTol = 1e-9;

// Positions closer than this are treated as duplicates [m].
inline constexpr double kDupTol = 1e-6;

struct Point2 {
    double x = 0.0, y = 0.0;
};

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline double distance(const Point3& a, const Point3& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}
inline Point2 to_2d(const Point3& p) { return {p.x, p.y}; }

/// Shortest distance from point p to the segment [a, b].
double segment_point_distance(Point2 a, Point2 b, Point2 p);

/// Antenna array mounting plane.
enum class Plane { kXY, kYZ, kXZ };

struct CircleObstacle {
    Point2 center;
    double radius = 0.0;
};

// Zero-thickness wall segment; angle is counter-clockwise from the x-axis,
// in (0, pi].
struct WallObstacle {
    Point2 center;
    double length = 0.0;
    double angle = 0.0;

    Point2 end_a() const;
    Point2 end_b() const;
};

using Obstacle = std::variant<CircleObstacle, WallObstacle>;

// Boundary walls in clockwise perimeter order starting at (0,0):
// left wall x=0 first, then top y=Sy, right x=Sx, bottom y=0.
enum WallSide : int {
    kWallLeft = 0,
    kWallTop = 1,
    kWallRight = 2,
    kWallBottom = 3,
};

// Immutable geometric model of the room. The BS sits on the ceiling plane
// z = size_z; obstacles are z-invariant prisms, so every blockage test
// reduces to 2D on the floor plan.
struct Scene {
    double size_x = 10.0, size_y = 10.0, size_z = 3.0;
    Point3 bs_position{5.0, 5.0, 3.0};
    Plane bs_plane = Plane::kXY;
    std::vector<Obstacle> obstacles;
    double ris_length = 0.5;  // physical RIS extent along its wall [m]

    Point2 bs_2d() const { return {bs_position.x, bs_position.y}; }
    double perimeter() const { return 2.0 * (size_x + size_y); }
    bool contains(Point2 p) const;
    bool contains(const Point3& p) const;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

struct Segment {
    Point2 a, b;
};

/// True when p lies strictly inside an obstacle interior (open sets; walls
/// have zero thickness and only trap points within kGeomTol).
bool point_in_obstacle(const Scene& scene, Point2 p);

/// True iff the open segment (a,b) intersects an obstacle interior.
/// Tangency and shared-endpoint contact do not block. `ignore_index`
/// excludes one obstacle from the test. Degenerate a == b returns false.
bool segment_blocked(const Scene& scene, Point2 a, Point2 b,
                     int ignore_index = -1);

/// True iff the straight line from the BS floor-plan position to p is
/// unobstructed. Throws std::invalid_argument when p is inside an obstacle.
bool has_direct_los(const Scene& scene, Point2 p);

/// Wall index of a boundary point, or -1 when q is not on the boundary.
/// Corners belong to the wall whose clockwise run starts there.
int boundary_wall(const Scene& scene, Point2 q);

/// Clockwise perimeter coordinate of a boundary point, measured from (0,0).
/// Throws when q is not on the boundary.
double perimeter_coord(const Scene& scene, Point2 q);

/// Inverse of perimeter_coord; s is wrapped into [0, perimeter).
Point2 perimeter_point(const Scene& scene, double s);

int wall_at_perimeter(const Scene& scene, double s);

/// Physical extent of a RIS mounted at boundary point q: a segment of
/// length ris_length centered at q along its wall, shifted to stay on the
/// wall when q is near a corner. Throws when q is not on the boundary.
Segment ris_footprint(const Scene& scene, Point2 q, int wall_hint = -1);

/// True iff some sample point r on the RIS footprint at q satisfies both
/// BS->r and r->p unobstructed. The footprint is sampled at
/// `footprint_samples` equispaced points including both endpoints.
bool has_ris_los(const Scene& scene, Point2 q, Point2 p,
                 int footprint_samples = 5, int wall_hint = -1);

/// Single-hop variant: some footprint sample of the panel at q has an
/// unobstructed line to p. This is the visibility rule behind the RIS
/// channel LoS flags, matching the sampled-footprint coverage model.
bool footprint_sees_point(const Scene& scene, Point2 q, Point2 p,
                          int footprint_samples = 5, int wall_hint = -1);

}  // namespace risim
