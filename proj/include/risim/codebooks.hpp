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

#include <iosfwd>
#include <vector>

#include "risim/arrays.hpp"

namespace risim {

/// Analog beam steered at (theta, phi): the conjugated array response
/// scaled to unit norm, so it cancels the channel's departure phases and a
/// same-angle LoS channel sees the full coherent gain of `size` elements.
arma::cx_vec steering_beam(const ArrayGeometry& geom, double theta,
                           double phi);

// Angle grids are uniform in the projected (spatial-frequency) coordinate
// of the array, covering the half-space it faces.
struct BeamAngleGrid {
    std::vector<double> elevations;
    std::vector<double> azimuths;
};

/// Ceiling-mounted BS array facing straight down: elevations uniform in
/// sin(theta) over the lower hemisphere, azimuths uniform over the circle.
BeamAngleGrid make_bs_angle_grid(int v1, int v2);

/// Wall-mounted RIS facing the room: elevations uniform in cos(theta),
/// azimuths uniform in the wall-parallel projection over the half-circle
/// the wall faces.
BeamAngleGrid make_ris_angle_grid(int wall, int w1, int w2);

struct BsCodebook {
    std::vector<arma::cx_vec> beams;  // v1*w2 unit-norm beams, theta-major
    std::vector<LosAngles> angles;
    int v1 = 0, v2 = 0;

    int size() const { return static_cast<int>(beams.size()); }
};

BsCodebook build_bs_codebook(const BsArray& bs_array, int v1, int v2);

/// Per-element reflection coefficients that cancel the arrival phase
/// profile and steer the reflected wave to (theta, phi). Returns the
/// diagonal of the reflection matrix; every entry has unit modulus.
arma::cx_vec ris_reflection_phases(const ArrayGeometry& geom,
                                   const LosAngles& arrival, double theta,
                                   double phi);

// The reflection codebook of one RIS bakes in its BS-arrival angles, so
// two RISs on different walls hold different codebooks even for the same
// target grid.
struct RisCodebook {
    std::vector<arma::cx_vec> reflections;  // diagonals, theta-major
    std::vector<LosAngles> angles;
    int w1 = 0, w2 = 0;

    int size() const { return static_cast<int>(reflections.size()); }
};

RisCodebook build_ris_codebook(const ArrayGeometry& geom, int wall,
                               const LosAngles& arrival, int w1, int w2);

void bs_codebook_to_csv(const BsCodebook& cb, std::ostream& os);
void ris_codebook_to_csv(const RisCodebook& cb, std::ostream& os);

}  // namespace risim
