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

#include "risim/channel.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct NlosDraw {
    arma::cx_double gain;
    double theta, phi;
};

// Draw order is fixed (gain re, gain im, elevation, azimuth) so streams
// stay reproducible across refactors.
NlosDraw draw_nlos(const ChannelParams& params, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> elev(-kHalfPi, kHalfPi);
    std::uniform_real_distribution<double> azim(-std::numbers::pi,
                                                std::numbers::pi);
    const double scale = std::sqrt(params.nlos_variance / 2.0);
    const double re = normal(rng) * scale;
    const double im = normal(rng) * scale;
    NlosDraw d;
    d.gain = arma::cx_double(re, im);
    d.theta = elev(rng);
    d.phi = azim(rng);
    return d;
}

double los_gain(double dist, const ChannelParams& params) {
    return std::pow(dist, -params.path_loss_exponent / 2.0);
}

}  // namespace

RisMount make_ris_mount(const Scene& scene, Point2 q, int wall_hint,
                        int elem_count_a, int elem_count_b, double spacing,
                        double wavelength, double z_center,
                        int footprint_samples) {
    RisMount mount;
    mount.wall_point = q;
    mount.wall = wall_hint >= 0 ? wall_hint : boundary_wall(scene, q);
    if (mount.wall < 0)
        throw std::invalid_argument("make_ris_mount: point not on boundary");
    mount.z_center = z_center;
    mount.geometry = {ris_plane_for_wall(mount.wall), elem_count_a,
                      elem_count_b, spacing, spacing, wavelength};
    mount.footprint_samples = footprint_samples;
    return mount;
}

DirectChannel synth_bs_user(const Scene& scene, const BsArray& bs_array,
                            const Point3& user, const ChannelParams& params,
                            std::mt19937_64& rng) {
    if (!scene.contains(user))
        throw std::invalid_argument("synth_bs_user: user outside bounds");
    if (point_in_obstacle(scene, to_2d(user)))
        throw std::invalid_argument("synth_bs_user: user inside an obstacle");

    DirectChannel out;
    out.bs_departure = los_angles(scene.bs_position, user);
    out.los_present = !segment_blocked(scene, scene.bs_2d(), to_2d(user));

    arma::cx_rowvec h(bs_array.total_elements(), arma::fill::zeros);
    if (out.los_present) {
        const double c0 = los_gain(distance(scene.bs_position, user), params);
        h += c0 * arma::strans(bs_full_response(bs_array,
                                                out.bs_departure.elevation,
                                                out.bs_departure.azimuth));
    }
    const int q_paths = params.num_nlos_paths;
    if (q_paths > 0) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(q_paths));
        for (int q = 0; q < q_paths; ++q) {
            const NlosDraw d = draw_nlos(params, rng);
            h += norm * d.gain *
                 arma::strans(bs_full_response(bs_array, d.theta, d.phi));
        }
    }
    out.h = std::move(h);
    return out;
}

RisUserChannel synth_ris_user(const Scene& scene, const RisMount& mount,
                              const Point3& user, const ChannelParams& params,
                              std::mt19937_64& rng) {
    if (!scene.contains(user))
        throw std::invalid_argument("synth_ris_user: user outside bounds");
    if (point_in_obstacle(scene, to_2d(user)))
        throw std::invalid_argument("synth_ris_user: user inside an obstacle");

    RisUserChannel out;
    out.ris_departure = los_angles(mount.center(), user);
    out.los_present = footprint_sees_point(scene, mount.wall_point, to_2d(user),
                                           mount.footprint_samples, mount.wall);

    arma::cx_rowvec h(mount.geometry.size(), arma::fill::zeros);
    if (out.los_present) {
        const double c0 = los_gain(distance(mount.center(), user), params);
        h += c0 * arma::strans(array_response(mount.geometry,
                                              out.ris_departure.elevation,
                                              out.ris_departure.azimuth));
    }
    const int q_paths = params.num_nlos_paths;
    if (q_paths > 0) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(q_paths));
        for (int q = 0; q < q_paths; ++q) {
            const NlosDraw d = draw_nlos(params, rng);
            h += norm * d.gain *
                 arma::strans(array_response(mount.geometry, d.theta, d.phi));
        }
    }
    out.h = std::move(h);
    return out;
}

BsRisChannel synth_bs_ris(const Scene& scene, const BsArray& bs_array,
                          const RisMount& mount, const ChannelParams& params,
                          std::mt19937_64& rng) {
    BsRisChannel out;
    out.arrival_at_ris = los_angles(mount.center(), scene.bs_position);
    out.bs_departure = los_angles(scene.bs_position, mount.center());
    out.los_present = footprint_sees_point(scene, mount.wall_point,
                                           scene.bs_2d(),
                                           mount.footprint_samples, mount.wall);

    const int n = mount.geometry.size();
    const int lm = bs_array.total_elements();
    arma::cx_mat g(n, lm, arma::fill::zeros);
    if (out.los_present) {
        const double c0 =
            los_gain(distance(scene.bs_position, mount.center()), params);
        g += c0 *
             array_response(mount.geometry, out.arrival_at_ris.elevation,
                            out.arrival_at_ris.azimuth) *
             arma::strans(bs_full_response(bs_array, out.bs_departure.elevation,
                                           out.bs_departure.azimuth));
    }
    const int q_paths = params.num_nlos_paths;
    if (q_paths > 0) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(q_paths));
        for (int q = 0; q < q_paths; ++q) {
            std::normal_distribution<double> normal(0.0, 1.0);
            std::uniform_real_distribution<double> elev(-kHalfPi, kHalfPi);
            std::uniform_real_distribution<double> azim(-std::numbers::pi,
                                                        std::numbers::pi);
            const double scale = std::sqrt(params.nlos_variance / 2.0);
            const arma::cx_double gain(normal(rng) * scale, normal(rng) * scale);
            const double theta_r = elev(rng);
            const double phi_r = azim(rng);
            const double theta_t = elev(rng);
            const double phi_t = azim(rng);
            g += norm * gain * array_response(mount.geometry, theta_r, phi_r) *
                 arma::strans(bs_full_response(bs_array, theta_t, phi_t));
        }
    }
    out.g = std::move(g);
    return out;
}

ChannelRealization synthesize_drop(const Scene& scene, const BsArray& bs_array,
                                   std::span<const RisMount> mounts,
                                   std::span<const Point3> users,
                                   const ChannelParams& params,
                                   std::mt19937_64& rng) {
    ChannelRealization r;
    r.num_users = static_cast<int>(users.size());
    r.num_ris = static_cast<int>(mounts.size());
    r.direct.set_size(r.num_users, bs_array.total_elements());
    r.direct_los.resize(r.num_users);
    r.user_departure_at_bs.resize(r.num_users);

    for (int k = 0; k < r.num_users; ++k) {
        DirectChannel dc = synth_bs_user(scene, bs_array, users[k], params, rng);
        r.direct.row(k) = dc.h;
        r.direct_los[k] = dc.los_present ? 1 : 0;
        r.user_departure_at_bs[k] = dc.bs_departure;
    }

    r.ris_user.resize(r.num_ris);
    r.bs_ris.resize(r.num_ris);
    r.ris_links.resize(r.num_ris);
    r.ris_user_los.assign(r.num_ris, std::vector<std::uint8_t>(r.num_users));
    r.user_departure_at_ris.assign(r.num_ris,
                                   std::vector<LosAngles>(r.num_users));

    for (int j = 0; j < r.num_ris; ++j) {
        BsRisChannel link = synth_bs_ris(scene, bs_array, mounts[j], params, rng);
        r.bs_ris[j] = link.g;
        link.g.reset();  // keep only the metadata copy
        r.ris_links[j] = link;

        r.ris_user[j].set_size(r.num_users, mounts[j].geometry.size());
        for (int k = 0; k < r.num_users; ++k) {
            RisUserChannel rc =
                synth_ris_user(scene, mounts[j], users[k], params, rng);
            r.ris_user[j].row(k) = rc.h;
            r.ris_user_los[j][k] = rc.los_present ? 1 : 0;
            r.user_departure_at_ris[j][k] = rc.ris_departure;
        }
    }
    return r;
}

namespace {

void dump_matrix(const arma::cx_mat& m, const char* tag, std::ostream& os) {
    for (arma::uword r = 0; r < m.n_rows; ++r) {
        for (arma::uword c = 0; c < m.n_cols; ++c) {
            os << tag << ',' << r << ',' << c << ',' << m(r, c).real() << ','
               << m(r, c).imag() << '\n';
        }
    }
}

}  // namespace

void realization_to_csv(const ChannelRealization& r, std::ostream& os) {
    os << "channel,row,col,re,im\n";
    dump_matrix(r.direct, "direct", os);
    for (int j = 0; j < r.num_ris; ++j) {
        const std::string ru = "ris_user_" + std::to_string(j);
        const std::string br = "bs_ris_" + std::to_string(j);
        dump_matrix(r.ris_user[j], ru.c_str(), os);
        dump_matrix(r.bs_ris[j], br.c_str(), os);
    }
}

}  // namespace risim
