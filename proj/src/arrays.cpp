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

#include "risim/arrays.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risim {

Axis plane_axis_a(Plane plane) {
    switch (plane) {
        case Plane::kXY:
            return Axis::kX;
        case Plane::kYZ:
            return Axis::kY;
        default:
            return Axis::kX;
    }
}

Axis plane_axis_b(Plane plane) {
    switch (plane) {
        case Plane::kXY:
            return Axis::kY;
        default:
            return Axis::kZ;
    }
}

LosAngles los_angles(const Point3& from, const Point3& to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double dz = to.z - from.z;
    const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (r < kGeomTol)
        throw std::invalid_argument("los_angles: coincident points");
    return {std::acos(std::clamp(dz / r, -1.0, 1.0)), std::atan2(dy, dx)};
}

double axis_projection(Axis axis, double theta, double phi) {
    switch (axis) {
        case Axis::kX:
            return std::sin(theta) * std::cos(phi);
        case Axis::kY:
            return std::sin(theta) * std::sin(phi);
        default:
            return std::cos(theta);
    }
}

arma::cx_vec ula_response(Axis axis, int count, double spacing,
                          double wavelength, double theta, double phi) {
    const double psi = axis_projection(axis, theta, phi);
    const double step = 2.0 * std::numbers::pi / wavelength * spacing * psi;
    arma::cx_vec a(count);
    for (int d = 0; d < count; ++d) a(d) = std::polar(1.0, step * d);
    return a;
}

arma::cx_vec array_response(const ArrayGeometry& geom, double theta,
                            double phi) {
    const arma::cx_vec a = ula_response(plane_axis_a(geom.plane), geom.count_a,
                                        geom.spacing_a, geom.wavelength, theta,
                                        phi);
    const arma::cx_vec b = ula_response(plane_axis_b(geom.plane), geom.count_b,
                                        geom.spacing_b, geom.wavelength, theta,
                                        phi);
    return arma::kron(a, b);
}

arma::cx_vec bs_full_response(const BsArray& bs, double theta, double phi) {
    return arma::kron(array_response(bs.grid_geometry(), theta, phi),
                      array_response(bs.subarray_geometry(), theta, phi));
}

Plane ris_plane_for_wall(int wall) {
    return (wall == kWallLeft || wall == kWallRight) ? Plane::kYZ : Plane::kXZ;
}

}  // namespace risim
