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

#include <armadillo>

#include "risim/geometry.hpp"

namespace risim {

enum class Axis { kX, kY, kZ };

Axis plane_axis_a(Plane plane);
Axis plane_axis_b(Plane plane);

// Uniform planar array lying in `plane` with count_a x count_b elements.
// The first axis is the major (outer) Kronecker factor, so element
// (i_a, i_b) maps to flat index i_a * count_b + i_b.
struct ArrayGeometry {
    Plane plane = Plane::kXY;
    int count_a = 1, count_b = 1;
    double spacing_a = 0.5, spacing_b = 0.5;
    double wavelength = 1.0;

    int size() const { return count_a * count_b; }
};

struct LosAngles {
    double elevation = 0.0;  // [0, pi], measured from +z
    double azimuth = 0.0;    // (-pi, pi], atan2 convention
};

/// Elevation/azimuth of the direction from -> to in global coordinates.
/// Throws for coincident points.
LosAngles los_angles(const Point3& from, const Point3& to);

/// Directional cosine seen by a ULA along `axis` for a plane wave at
/// (theta, phi): x -> sin(theta)cos(phi), y -> sin(theta)sin(phi),
/// z -> cos(theta).
double axis_projection(Axis axis, double theta, double phi);

arma::cx_vec ula_response(Axis axis, int count, double spacing,
                          double wavelength, double theta, double phi);

/// Planar response: Kronecker product of the two ULA responses. Every entry
/// has unit modulus.
arma::cx_vec array_response(const ArrayGeometry& geom, double theta,
                            double phi);

// Hybrid BS array: sub_count_a x sub_count_b sub-arrays, each of
// elem_count_a x elem_count_b elements, on one contiguous element grid.
// Flattening is sub-array major so the full response splits into
// kron(grid-level response, sub-array response), with the grid level spaced
// at the sub-array pitch.
struct BsArray {
    Plane plane = Plane::kXY;
    int sub_count_a = 2, sub_count_b = 1;    // L1, L2
    int elem_count_a = 4, elem_count_b = 4;  // M1, M2
    double spacing_a = 0.5, spacing_b = 0.5;
    double wavelength = 1.0;

    int num_subarrays() const { return sub_count_a * sub_count_b; }
    int elems_per_subarray() const { return elem_count_a * elem_count_b; }
    int total_elements() const {
        return num_subarrays() * elems_per_subarray();
    }

    ArrayGeometry subarray_geometry() const {
        return {plane, elem_count_a, elem_count_b, spacing_a, spacing_b,
                wavelength};
    }
    ArrayGeometry grid_geometry() const {
        return {plane, sub_count_a, sub_count_b, elem_count_a * spacing_a,
                elem_count_b * spacing_b, wavelength};
    }
};

/// Full-array response of length total_elements(), ordered sub-array major.
arma::cx_vec bs_full_response(const BsArray& bs, double theta, double phi);

/// Mounting plane of a RIS on the given boundary wall: walls with constant
/// x span the yz-plane, walls with constant y span the xz-plane.
Plane ris_plane_for_wall(int wall);

}  // namespace risim
