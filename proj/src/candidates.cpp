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

#include "risim/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace risim {

Point2 ray_boundary_exit(const Scene& scene, Point2 origin, Point2 dir) {
    const double len = norm(dir);
    if (len < kGeomTol)
        throw std::invalid_argument("ray_boundary_exit: zero direction");
    dir = (1.0 / len) * dir;

    double best_t = std::numeric_limits<double>::infinity();
    if (dir.x > kGeomTol) best_t = std::min(best_t, (scene.size_x - origin.x) / dir.x);
    if (dir.x < -kGeomTol) best_t = std::min(best_t, -origin.x / dir.x);
    if (dir.y > kGeomTol) best_t = std::min(best_t, (scene.size_y - origin.y) / dir.y);
    if (dir.y < -kGeomTol) best_t = std::min(best_t, -origin.y / dir.y);
    if (!std::isfinite(best_t) || best_t < 0.0)
        throw std::invalid_argument("ray_boundary_exit: origin not inside room");

    Point2 hit = origin + best_t * dir;
    // Snap onto the boundary so downstream wall classification is exact.
    hit.x = std::clamp(hit.x, 0.0, scene.size_x);
    hit.y = std::clamp(hit.y, 0.0, scene.size_y);
    if (std::abs(hit.x) > kGeomTol && std::abs(hit.x - scene.size_x) > kGeomTol &&
        std::abs(hit.y) > kGeomTol && std::abs(hit.y - scene.size_y) > kGeomTol) {
        // Numerical drift off the boundary; snap the nearer coordinate.
        const double dx = std::min(hit.x, scene.size_x - hit.x);
        const double dy = std::min(hit.y, scene.size_y - hit.y);
        if (dx <= dy)
            hit.x = (hit.x < 0.5 * scene.size_x) ? 0.0 : scene.size_x;
        else
            hit.y = (hit.y < 0.5 * scene.size_y) ? 0.0 : scene.size_y;
    }
    return hit;
}

namespace {

// The two tangent ray directions from an external point to a circle.
std::pair<Point2, Point2> circle_tangent_dirs(Point2 from,
                                              const CircleObstacle& c) {
    const Point2 u = c.center - from;
    const double d = norm(u);
    const double sin_a = std::min(c.radius / d, 1.0);
    const double cos_a = std::sqrt(std::max(0.0, 1.0 - sin_a * sin_a));
    const Point2 n{u.x / d, u.y / d};
    // Rotate the center direction by +/- the tangent half-angle.
    const Point2 lhs{n.x * cos_a - n.y * sin_a, n.x * sin_a + n.y * cos_a};
    const Point2 rhs{n.x * cos_a + n.y * sin_a, -n.x * sin_a + n.y * cos_a};
    return {lhs, rhs};
}

void sort_clockwise(const Scene& scene, std::vector<Point2>& pts) {
    std::sort(pts.begin(), pts.end(), [&](Point2 a, Point2 b) {
        return perimeter_coord(scene, a) < perimeter_coord(scene, b);
    });
}

}  // namespace

CandidateSet build_candidate_set_tangent(const Scene& scene) {
    const Point2 bs = scene.bs_2d();
    if (point_in_obstacle(scene, bs))
        throw std::invalid_argument("candidate set: BS inside an obstacle");

    std::vector<Point2> hits;
    for (const Obstacle& ob : scene.obstacles) {
        Point2 dirs[2];
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            const double d = distance(bs, c->center);
            if (d <= c->radius + kGeomTol)
                throw std::invalid_argument("candidate set: BS inside an obstacle");
            auto [lhs, rhs] = circle_tangent_dirs(bs, *c);
            dirs[0] = lhs;
            dirs[1] = rhs;
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            dirs[0] = w.end_a() - bs;
            dirs[1] = w.end_b() - bs;
        }
        for (const Point2& dir : dirs) {
            if (norm(dir) < kGeomTol) continue;  // BS coincides with an endpoint
            const Point2 hit = ray_boundary_exit(scene, bs, dir);
            // Keep the hit only when the tangent ray itself is clear. The
            // generating obstacle never blocks its own tangent: the ray
            // grazes a circle boundary or passes through a wall endpoint,
            // and both contacts are non-blocking.
            if (!segment_blocked(scene, bs, hit)) hits.push_back(hit);
        }
    }

    // Merge duplicates, keeping the first occurrence.
    std::vector<Point2> unique;
    for (const Point2& p : hits) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](Point2 q) {
            return distance(p, q) < kDupTol;
        });
        if (!dup) unique.push_back(p);
    }
    sort_clockwise(scene, unique);

    CandidateSet out;
    out.origin = CandidateOrigin::kTangent;
    out.positions = std::move(unique);
    out.wall_index.reserve(out.positions.size());
    for (const Point2& p : out.positions)
        out.wall_index.push_back(boundary_wall(scene, p));
    return out;
}

CandidateSet build_candidate_set_uniform(const Scene& scene, double spacing) {
    if (!(spacing > 0.0))
        throw std::invalid_argument("uniform candidates: spacing must be positive");
    if (spacing > scene.size_x + kGeomTol || spacing > scene.size_y + kGeomTol)
        throw std::invalid_argument("uniform candidates: spacing exceeds a wall length");

    const double per = scene.perimeter();
    const int count = static_cast<int>(std::floor(per / spacing + kGeomTol));

    CandidateSet out;
    out.origin = CandidateOrigin::kUniform;
    out.positions.reserve(count);
    out.wall_index.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double s = i * spacing;
        out.positions.push_back(perimeter_point(scene, s));
        out.wall_index.push_back(wall_at_perimeter(scene, s));
    }
    return out;
}

}  // namespace risim
