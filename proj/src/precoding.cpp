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

#include "risim/precoding.hpp"

#include <cmath>

namespace risim {

arma::cx_mat AnalogConfig::dense() const {
    arma::cx_mat f(static_cast<arma::uword>(num_subarrays) * elems_per_subarray,
                   num_subarrays, arma::fill::zeros);
    for (int l = 0; l < num_subarrays; ++l) {
        if (beams[l].is_empty()) continue;
        f.submat(static_cast<arma::uword>(l) * elems_per_subarray, l,
                 static_cast<arma::uword>(l + 1) * elems_per_subarray - 1, l) =
            beams[l];
    }
    return f;
}

namespace {

// Composite row seen by user k: direct channel plus every active RIS
// cascade h_kj diag(sigma_j) G_j.
arma::cx_rowvec composite_row(const ChannelRealization& r,
                              std::span<const arma::cx_vec> reflections,
                              int user) {
    arma::cx_rowvec row = r.direct.row(user);
    for (int j = 0; j < r.num_ris; ++j) {
        if (j >= static_cast<int>(reflections.size()) ||
            reflections[j].is_empty())
            continue;
        const arma::cx_rowvec weighted =
            r.ris_user[j].row(user) % arma::strans(reflections[j]);
        row += weighted * r.bs_ris[j];
    }
    return row;
}

}  // namespace

arma::cx_mat effective_channel(const ChannelRealization& r,
                               const AnalogConfig& analog,
                               std::span<const arma::cx_vec> reflections) {
    const int users = r.num_users;
    const int l_count = analog.num_subarrays;
    const int m = analog.elems_per_subarray;
    arma::cx_mat w(users, l_count, arma::fill::zeros);
    for (int k = 0; k < users; ++k) {
        const arma::cx_rowvec row = composite_row(r, reflections, k);
        for (int l = 0; l < l_count; ++l) {
            if (analog.beams[l].is_empty()) continue;
            w(k, l) = arma::as_scalar(
                row.subvec(static_cast<arma::uword>(l) * m,
                           static_cast<arma::uword>(l + 1) * m - 1) *
                analog.beams[l]);
        }
    }
    return w;
}

arma::cx_mat zero_forcing(const arma::cx_mat& effective) {
    const arma::uword users = effective.n_rows;
    if (users > effective.n_cols)
        throw SingularChannelError("zero_forcing: more users than RF chains");
    if (!effective.is_finite())
        throw SingularChannelError("zero_forcing: non-finite channel");

    const double cond = arma::cond(effective);
    if (!std::isfinite(cond) || cond > kConditionLimit)
        throw SingularChannelError("zero_forcing: rank-deficient channel");

    const arma::cx_mat gram = effective * effective.t();
    arma::cx_mat inv_gram;
    if (!arma::inv(inv_gram, gram))
        throw SingularChannelError("zero_forcing: gram inversion failed");
    arma::cx_mat precoder = effective.t() * inv_gram;
    for (arma::uword k = 0; k < users; ++k) {
        const double n = arma::norm(precoder.col(k));
        if (!(n > 0.0) || !std::isfinite(n))
            throw SingularChannelError("zero_forcing: zero-norm column");
        precoder.col(k) /= n;
    }
    return precoder;
}

arma::vec user_sinrs(const arma::cx_mat& effective,
                     const arma::cx_mat& precoder, double power,
                     double noise_power) {
    const arma::uword users = effective.n_rows;
    const double per_user = power / static_cast<double>(users);
    const arma::cx_mat link = effective * precoder;  // K x K
    arma::vec sinr(users);
    for (arma::uword k = 0; k < users; ++k) {
        const double signal = per_user * std::norm(link(k, k));
        double interference = 0.0;
        for (arma::uword j = 0; j < users; ++j) {
            if (j != k) interference += per_user * std::norm(link(k, j));
        }
        sinr(k) = signal / (interference + noise_power);
    }
    return sinr;
}

double sum_rate(const arma::cx_mat& effective, const arma::cx_mat& precoder,
                double power, double noise_power) {
    const arma::vec sinr = user_sinrs(effective, precoder, power, noise_power);
    double rate = 0.0;
    for (arma::uword k = 0; k < sinr.n_elem; ++k)
        rate += std::log2(1.0 + sinr(k));
    return rate;
}

double received_snr(const ChannelRealization& r, const arma::cx_vec& x,
                    std::span<const arma::cx_vec> reflections, double power,
                    double noise_power, int user) {
    const arma::cx_rowvec row = composite_row(r, reflections, user);
    const arma::cx_double amp = arma::as_scalar(row * x);
    return power * std::norm(amp) / noise_power;
}

arma::cx_vec subarray_pilot(const BsArray& bs_array, const arma::cx_vec& beam,
                            int subarray) {
    arma::cx_vec x(bs_array.total_elements(), arma::fill::zeros);
    const int m = bs_array.elems_per_subarray();
    x.subvec(static_cast<arma::uword>(subarray) * m,
             static_cast<arma::uword>(subarray + 1) * m - 1) = beam;
    return x;
}

}  // namespace risim
