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

#include "risim/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace risim {

double segment_point_distance(Point2 a, Point2 b, Point2 p) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(a, p);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(a + t * ab, p);
}

Point2 WallObstacle::end_a() const {
    return {center.x - 0.5 * length * std::cos(angle),
            center.y - 0.5 * length * std::sin(angle)};
}

Point2 WallObstacle::end_b() const {
    return {center.x + 0.5 * length * std::cos(angle),
            center.y + 0.5 * length * std::sin(angle)};
}

bool Scene::contains(Point2 p) const {
    return p.x >= -kGeomTol && p.x <= size_x + kGeomTol && p.y >= -kGeomTol &&
           p.y <= size_y + kGeomTol;
}

bool Scene::contains(const Point3& p) const {
    return contains(Point2{p.x, p.y}) && p.z >= -kGeomTol &&
           p.z <= size_z + kGeomTol;
}

void Scene::validate() const {
    if (!(size_x > 0.0) || !(size_y > 0.0) || !(size_z > 0.0))
        throw std::invalid_argument("scene: dimensions must be positive");
    if (!std::isfinite(bs_position.x) || !std::isfinite(bs_position.y) ||
        !std::isfinite(bs_position.z))
        throw std::invalid_argument("scene: BS position must be finite");
    if (!contains(bs_position))
        throw std::invalid_argument("scene: BS position outside bounds");
    if (std::abs(bs_position.z - size_z) > kGeomTol)
        throw std::invalid_argument("scene: BS must sit on the ceiling plane");
    if (!(ris_length > 0.0))
        throw std::invalid_argument("scene: ris_length must be positive");
    for (const Obstacle& ob : obstacles) {
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            if (!(c->radius > 0.0))
                throw std::invalid_argument("scene: circle radius must be positive");
            if (c->center.x - c->radius < -kGeomTol ||
                c->center.x + c->radius > size_x + kGeomTol ||
                c->center.y - c->radius < -kGeomTol ||
                c->center.y + c->radius > size_y + kGeomTol)
                throw std::invalid_argument("scene: circle footprint leaves bounds");
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            if (!(w.length > 0.0))
                throw std::invalid_argument("scene: wall length must be positive");
            if (!(w.angle > 0.0) || w.angle > M_PI + kGeomTol)
                throw std::invalid_argument("scene: wall angle must be in (0, pi]");
            if (!contains(w.end_a()) || !contains(w.end_b()))
                throw std::invalid_argument("scene: wall footprint leaves bounds");
        }
    }
}

bool point_in_obstacle(const Scene& scene, Point2 p) {
    for (const Obstacle& ob : scene.obstacles) {
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            if (distance(p, c->center) < c->radius - kGeomTol) return true;
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            if (segment_point_distance(w.end_a(), w.end_b(), p) < kGeomTol)
                return true;
        }
    }
    return false;
}

namespace {

// Open segment (a,b) passes through the open disk. Tangency (minimum
// distance within kGeomTol of the radius) does not block.
bool segment_hits_circle(Point2 a, Point2 b, const CircleObstacle& c) {
    return segment_point_distance(a, b, c.center) < c.radius - kGeomTol;
}

// Proper crossing of open segments (a,b) and (c,d): both segments must
// strictly straddle the other's supporting line. Contact at an endpoint or
// collinear grazing does not count. Signs are taken on perpendicular
// distances so the tolerance is a length.
bool segments_properly_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double lab = distance(a, b);
    const double lcd = distance(c, d);
    if (lab < kGeomTol || lcd < kGeomTol) return false;
    const double d1 = cross(b - a, c - a) / lab;
    const double d2 = cross(b - a, d - a) / lab;
    const double d3 = cross(d - c, a - c) / lcd;
    const double d4 = cross(d - c, b - c) / lcd;
    const bool straddle1 = (d1 > kGeomTol && d2 < -kGeomTol) ||
                           (d1 < -kGeomTol && d2 > kGeomTol);
    const bool straddle2 = (d3 > kGeomTol && d4 < -kGeomTol) ||
                           (d3 < -kGeomTol && d4 > kGeomTol);
    return straddle1 && straddle2;
}

}  // namespace

bool segment_blocked(const Scene& scene, Point2 a, Point2 b,
                     int ignore_index) {
    if (distance(a, b) < kGeomTol) return false;
    for (int i = 0; i < static_cast<int>(scene.obstacles.size()); ++i) {
        if (i == ignore_index) continue;
        const Obstacle& ob = scene.obstacles[i];
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            if (segment_hits_circle(a, b, *c)) return true;
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            if (segments_properly_cross(a, b, w.end_a(), w.end_b())) return true;
        }
    }
    return false;
}

bool has_direct_los(const Scene& scene, Point2 p) {
    if (point_in_obstacle(scene, p))
        throw std::invalid_argument("has_direct_los: point inside an obstacle");
    return !segment_blocked(scene, scene.bs_2d(), p);
}

int boundary_wall(const Scene& scene, Point2 q) {
    const bool on_left = std::abs(q.x) < kGeomTol;
    const bool on_right = std::abs(q.x - scene.size_x) < kGeomTol;
    const bool on_bottom = std::abs(q.y) < kGeomTol;
    const bool on_top = std::abs(q.y - scene.size_y) < kGeomTol;
    if (!scene.contains(q)) return -1;
    // Corners belong to the wall whose clockwise run starts there.
    if (on_left && on_bottom) return kWallLeft;      // (0,0)
    if (on_left && on_top) return kWallTop;          // (0,Sy)
    if (on_right && on_top) return kWallRight;       // (Sx,Sy)
    if (on_right && on_bottom) return kWallBottom;   // (Sx,0)
    if (on_left) return kWallLeft;
    if (on_top) return kWallTop;
    if (on_right) return kWallRight;
    if (on_bottom) return kWallBottom;
    return -1;
}

double perimeter_coord(const Scene& scene, Point2 q) {
    const int wall = boundary_wall(scene, q);
    switch (wall) {
        case kWallLeft:
            return q.y;
        case kWallTop:
            return scene.size_y + q.x;
        case kWallRight:
            return scene.size_y + scene.size_x + (scene.size_y - q.y);
        case kWallBottom:
            return 2.0 * scene.size_y + scene.size_x + (scene.size_x - q.x);
        default:
            throw std::invalid_argument("perimeter_coord: point not on boundary");
    }
}

Point2 perimeter_point(const Scene& scene, double s) {
    const double per = scene.perimeter();
    s = std::fmod(s, per);
    if (s < 0.0) s += per;
    if (s < scene.size_y) return {0.0, s};
    s -= scene.size_y;
    if (s < scene.size_x) return {s, scene.size_y};
    s -= scene.size_x;
    if (s < scene.size_y) return {scene.size_x, scene.size_y - s};
    s -= scene.size_y;
    return {scene.size_x - s, 0.0};
}

int wall_at_perimeter(const Scene& scene, double s) {
    const double per = scene.perimeter();
    s = std::fmod(s, per);
    if (s < 0.0) s += per;
    if (s < scene.size_y) return kWallLeft;
    if (s < scene.size_y + scene.size_x) return kWallTop;
    if (s < 2.0 * scene.size_y + scene.size_x) return kWallRight;
    return kWallBottom;
}

Segment ris_footprint(const Scene& scene, Point2 q, int wall_hint) {
    const int wall = wall_hint >= 0 ? wall_hint : boundary_wall(scene, q);
    if (wall < 0)
        throw std::invalid_argument("ris_footprint: point not on boundary");

    // Coordinate along the wall and wall extent.
    const bool vertical = (wall == kWallLeft || wall == kWallRight);
    const double extent = vertical ? scene.size_y : scene.size_x;
    const double t = vertical ? q.y : q.x;
    const double len = std::min(scene.ris_length, extent);
    const double lo = std::clamp(t - 0.5 * len, 0.0, extent - len);
    const double hi = lo + len;

    auto at = [&](double u) -> Point2 {
        switch (wall) {
            case kWallLeft:
                return {0.0, u};
            case kWallRight:
                return {scene.size_x, u};
            case kWallTop:
                return {u, scene.size_y};
            default:
                return {u, 0.0};
        }
    };
    return {at(lo), at(hi)};
}

bool has_ris_los(const Scene& scene, Point2 q, Point2 p,
                 int footprint_samples, int wall_hint) {
    const Segment fp = ris_footprint(scene, q, wall_hint);
    const Point2 bs = scene.bs_2d();
    const int n = std::max(2, footprint_samples);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        const Point2 r = fp.a + t * (fp.b - fp.a);
        if (!segment_blocked(scene, bs, r) && !segment_blocked(scene, r, p))
            return true;
    }
    return false;
}

bool footprint_sees_point(const Scene& scene, Point2 q, Point2 p,
                          int footprint_samples, int wall_hint) {
    const Segment fp = ris_footprint(scene, q, wall_hint);
    const int n = std::max(2, footprint_samples);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        const Point2 r = fp.a + t * (fp.b - fp.a);
        if (!segment_blocked(scene, r, p)) return true;
    }
    return false;
}

}  // namespace risim
