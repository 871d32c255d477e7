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

#include <span>
#include <stdexcept>
#include <vector>

#include "risim/channel.hpp"

namespace risim {

// Per-sub-array analog beam assignment. An empty vector marks an inactive
// sub-array, which materializes as an all-zero block.
struct AnalogConfig {
    int num_subarrays = 0;
    int elems_per_subarray = 0;
    std::vector<arma::cx_vec> beams;  // each empty or elems_per_subarray long

    /// Dense LM x L block-diagonal matrix; inactive blocks are zero.
    arma::cx_mat dense() const;
};

/// Channel is rank-deficient beyond recovery (condition number above the
/// singularity threshold); callers may retry with a different assignment.
class SingularChannelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kConditionLimit = 1e12;

/// Effective K x L channel after analog beamforming and RIS reflection:
/// row k is (h_k0 + sum_j h_kj diag(sigma_j) G_j) F_A. A RIS with an empty
/// reflection vector is off and contributes nothing.
arma::cx_mat effective_channel(const ChannelRealization& r,
                               const AnalogConfig& analog,
                               std::span<const arma::cx_vec> reflections);

/// Unit-norm-column zero-forcing precoder W^H (W W^H)^{-1}. Throws
/// SingularChannelError when W is rank deficient (condition number above
/// kConditionLimit) or has more rows than columns.
arma::cx_mat zero_forcing(const arma::cx_mat& effective);

/// Per-user SINRs (linear) under equal power split across users.
arma::vec user_sinrs(const arma::cx_mat& effective, const arma::cx_mat& precoder,
                     double power, double noise_power);

/// Sum of log2(1 + SINR_k) in bits/s/Hz.
double sum_rate(const arma::cx_mat& effective, const arma::cx_mat& precoder,
                double power, double noise_power);

/// Linear SNR at user k for pilot vector x sent at full power through the
/// direct path plus every active RIS.
double received_snr(const ChannelRealization& r, const arma::cx_vec& x,
                    std::span<const arma::cx_vec> reflections, double power,
                    double noise_power, int user);

/// Pilot vector carrying `beam` on one sub-array and zeros elsewhere.
arma::cx_vec subarray_pilot(const BsArray& bs_array, const arma::cx_vec& beam,
                            int subarray = 0);

}  // namespace risim
