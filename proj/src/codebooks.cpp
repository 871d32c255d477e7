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

#include "risim/codebooks.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risim {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double phi) {
    while (phi > kPi) phi -= 2.0 * kPi;
    while (phi <= -kPi) phi += 2.0 * kPi;
    return phi;
}

}  // namespace

arma::cx_vec steering_beam(const ArrayGeometry& geom, double theta,
                           double phi) {
    return arma::conj(array_response(geom, theta, phi)) /
           std::sqrt(static_cast<double>(geom.size()));
}

BeamAngleGrid make_bs_angle_grid(int v1, int v2) {
    if (v1 < 1 || v2 < 1)
        throw std::invalid_argument("codebook: grid sizes must be >= 1");
    BeamAngleGrid grid;
    grid.elevations.reserve(v1);
    for (int i = 0; i < v1; ++i) {
        const double s = (i + 0.5) / v1;  // sin(theta), uniform in (0,1)
        grid.elevations.push_back(kPi - std::asin(s));
    }
    grid.azimuths.reserve(v2);
    for (int j = 0; j < v2; ++j)
        grid.azimuths.push_back(-kPi + 2.0 * kPi * (j + 0.5) / v2);
    return grid;
}

BeamAngleGrid make_ris_angle_grid(int wall, int w1, int w2) {
    if (w1 < 1 || w2 < 1)
        throw std::invalid_argument("codebook: grid sizes must be >= 1");
    BeamAngleGrid grid;
    grid.elevations.reserve(w1);
    for (int i = 0; i < w1; ++i) {
        const double c = -1.0 + 2.0 * (i + 0.5) / w1;  // cos(theta)
        grid.elevations.push_back(std::acos(c));
    }
    grid.azimuths.reserve(w2);
    for (int j = 0; j < w2; ++j) {
        const double u = -1.0 + 2.0 * (j + 0.5) / w2;
        double phi;
        switch (wall) {
            case kWallLeft:  // faces +x: phi in (-pi/2, pi/2)
                phi = std::asin(u);
                break;
            case kWallRight:  // faces -x
                phi = wrap_angle(kPi - std::asin(u));
                break;
            case kWallBottom:  // faces +y: phi in (0, pi)
                phi = std::acos(u);
                break;
            case kWallTop:  // faces -y
                phi = -std::acos(u);
                break;
            default:
                throw std::invalid_argument("codebook: bad wall index");
        }
        grid.azimuths.push_back(phi);
    }
    return grid;
}

BsCodebook build_bs_codebook(const BsArray& bs_array, int v1, int v2) {
    const BeamAngleGrid grid = make_bs_angle_grid(v1, v2);
    const ArrayGeometry sub = bs_array.subarray_geometry();
    BsCodebook cb;
    cb.v1 = v1;
    cb.v2 = v2;
    cb.beams.reserve(static_cast<std::size_t>(v1) * v2);
    cb.angles.reserve(static_cast<std::size_t>(v1) * v2);
    for (double theta : grid.elevations) {
        for (double phi : grid.azimuths) {
            cb.beams.push_back(steering_beam(sub, theta, phi));
            cb.angles.push_back({theta, phi});
        }
    }
    return cb;
}

arma::cx_vec ris_reflection_phases(const ArrayGeometry& geom,
                                   const LosAngles& arrival, double theta,
                                   double phi) {
    const Axis axis_a = plane_axis_a(geom.plane);
    const Axis axis_b = plane_axis_b(geom.plane);
    const double psi_a = axis_projection(axis_a, theta, phi) +
                         axis_projection(axis_a, arrival.elevation,
                                         arrival.azimuth);
    const double psi_b = axis_projection(axis_b, theta, phi) +
                         axis_projection(axis_b, arrival.elevation,
                                         arrival.azimuth);
    const double k = 2.0 * kPi / geom.wavelength;

    arma::cx_vec sigma(geom.size());
    for (int na = 0; na < geom.count_a; ++na) {
        for (int nb = 0; nb < geom.count_b; ++nb) {
            const double phase =
                -k * (geom.spacing_a * na * psi_a + geom.spacing_b * nb * psi_b);
            sigma(na * geom.count_b + nb) = std::polar(1.0, phase);
        }
    }
    return sigma;
}

RisCodebook build_ris_codebook(const ArrayGeometry& geom, int wall,
                               const LosAngles& arrival, int w1, int w2) {
    const BeamAngleGrid grid = make_ris_angle_grid(wall, w1, w2);
    RisCodebook cb;
    cb.w1 = w1;
    cb.w2 = w2;
    cb.reflections.reserve(static_cast<std::size_t>(w1) * w2);
    cb.angles.reserve(static_cast<std::size_t>(w1) * w2);
    for (double theta : grid.elevations) {
        for (double phi : grid.azimuths) {
            cb.reflections.push_back(
                ris_reflection_phases(geom, arrival, theta, phi));
            cb.angles.push_back({theta, phi});
        }
    }
    return cb;
}

namespace {

void dump_entries(const std::vector<arma::cx_vec>& entries,
                  const std::vector<LosAngles>& angles, std::ostream& os) {
    os << "index,elevation,azimuth,element,re,im\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (arma::uword n = 0; n < entries[i].n_elem; ++n) {
            os << i << ',' << angles[i].elevation << ',' << angles[i].azimuth
               << ',' << n << ',' << entries[i](n).real() << ','
               << entries[i](n).imag() << '\n';
        }
    }
}

}  // namespace

void bs_codebook_to_csv(const BsCodebook& cb, std::ostream& os) {
    dump_entries(cb.beams, cb.angles, os);
}

void ris_codebook_to_csv(const RisCodebook& cb, std::ostream& os) {
    dump_entries(cb.reflections, cb.angles, os);
}

}  // namespace risim
