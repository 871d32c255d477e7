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

// Test-only reference algorithms, deliberately independent of the library's
// implementation paths: blockage by dense sampling instead of closed-form
// intersection, shadow tests by quadratic roots, pseudo-inverse by
// hand-rolled Gaussian elimination, and dense matrix products that ignore
// the block-diagonal analog structure.

#pragma once

#include <armadillo>
#include <complex>
#include <vector>

#include "risim/geometry.hpp"
#include "risim/precoding.hpp"

namespace risim::testing {

// Blockage by sampling `samples` points strictly inside (a,b). Circles are
// membership tests; zero-thickness walls are detected by a sign change of
// the side function between consecutive samples inside the wall's extent.
inline bool oracle_segment_blocked(const Scene& scene, Point2 a, Point2 b,
                                   int samples = 10000) {
    if (distance(a, b) <= 0.0) return false;
    for (const Obstacle& ob : scene.obstacles) {
        if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
            for (int i = 1; i <= samples; ++i) {
                const double t = static_cast<double>(i) / (samples + 1);
                const Point2 p = a + t * (b - a);
                if (distance(p, c->center) < c->radius) return true;
            }
        } else {
            const auto& w = std::get<WallObstacle>(ob);
            const Point2 wa = w.end_a();
            const Point2 wb = w.end_b();
            const Point2 axis = wb - wa;
            const double len2 = dot(axis, axis);
            double prev_side = 0.0;
            double prev_t = 0.0;
            for (int i = 0; i <= samples + 1; ++i) {
                const double t = static_cast<double>(i) / (samples + 1);
                const Point2 p = a + t * (b - a);
                const double side = cross(axis, p - wa);
                if (i > 0 && prev_side * side < 0.0) {
                    // Interpolate the crossing and check the wall extent.
                    const double f = prev_side / (prev_side - side);
                    const double tc = prev_t + f * (t - prev_t);
                    const Point2 pc = a + tc * (b - a);
                    const double u = dot(pc - wa, axis) / len2;
                    if (u > 0.0 && u < 1.0 && tc > 0.0 && tc < 1.0) return true;
                }
                prev_side = side;
                prev_t = t;
            }
        }
    }
    return false;
}

inline bool oracle_has_direct_los(const Scene& scene, Point2 p,
                                  int samples = 10000) {
    return !oracle_segment_blocked(scene, scene.bs_2d(), p, samples);
}

// Shadow test for circles by quadratic line-disk intersection, the route
// the implementation does not take.
inline bool oracle_circle_shadowed(Point2 bs, Point2 p,
                                   const CircleObstacle& c) {
    const Point2 d = p - bs;
    const Point2 f = bs - c.center;
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(f, d);
    const double qc = dot(f, f) - c.radius * c.radius;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return false;
    const double sq = std::sqrt(disc);
    const double t1 = (-qb - sq) / (2.0 * qa);
    const double t2 = (-qb + sq) / (2.0 * qa);
    return (t1 > 0.0 && t1 < 1.0) || (t2 > 0.0 && t2 < 1.0) ||
           (t1 < 0.0 && t2 > 1.0);
}

// Least-squares pseudo-inverse via Gaussian elimination on the normal
// equations, with unit-norm columns.
inline arma::cx_mat oracle_zero_forcing(const arma::cx_mat& w) {
    const arma::uword k = w.n_rows;
    arma::cx_mat gram = w * w.t();
    arma::cx_mat rhs = arma::cx_mat(k, k, arma::fill::eye);
    // Forward elimination with partial pivoting.
    for (arma::uword col = 0; col < k; ++col) {
        arma::uword pivot = col;
        for (arma::uword r = col + 1; r < k; ++r)
            if (std::abs(gram(r, col)) > std::abs(gram(pivot, col))) pivot = r;
        gram.swap_rows(col, pivot);
        rhs.swap_rows(col, pivot);
        for (arma::uword r = col + 1; r < k; ++r) {
            const std::complex<double> factor = gram(r, col) / gram(col, col);
            gram.row(r) -= factor * gram.row(col);
            rhs.row(r) -= factor * rhs.row(col);
        }
    }
    // Back substitution.
    arma::cx_mat inv(k, k);
    for (arma::uword c = 0; c < k; ++c) {
        for (arma::uword r = k; r-- > 0;) {
            std::complex<double> sum = rhs(r, c);
            for (arma::uword j = r + 1; j < k; ++j) sum -= gram(r, j) * inv(j, c);
            inv(r, c) = sum / gram(r, r);
        }
    }
    arma::cx_mat precoder = w.t() * inv;
    for (arma::uword c = 0; c < k; ++c)
        precoder.col(c) /= arma::norm(precoder.col(c));
    return precoder;
}

// Effective channel via dense unstructured products: materializes the full
// analog matrix and the diagonal reflection matrices.
inline arma::cx_mat oracle_effective_channel(
    const ChannelRealization& r, const AnalogConfig& analog,
    const std::vector<arma::cx_vec>& reflections) {
    const arma::cx_mat f_dense = analog.dense();
    arma::cx_mat w(r.num_users, analog.num_subarrays, arma::fill::zeros);
    for (int k = 0; k < r.num_users; ++k) {
        arma::cx_rowvec row = r.direct.row(k);
        for (int j = 0; j < r.num_ris; ++j) {
            if (j >= static_cast<int>(reflections.size()) ||
                reflections[j].is_empty())
                continue;
            const arma::cx_mat sigma = arma::diagmat(reflections[j]);
            row += r.ris_user[j].row(k) * sigma * r.bs_ris[j];
        }
        w.row(k) = row * f_dense;
    }
    return w;
}

}  // namespace risim::testing
