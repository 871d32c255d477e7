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

#include "risim/scenario.hpp"

namespace risim {

// Fixed column set shared by both sweeps. Fields that do not apply to a
// row are left empty.
inline constexpr const char* kTrialCsvHeader =
    "trial,seed,method,scheme,J,I,obstacle_type,snr_db,coverage_norm,"
    "sum_rate_bps_hz";

/// Coverage vs number of RISs for every configured placement method.
/// Output is byte-identical for a given (config, seed) regardless of the
/// worker count.
void coverage_sweep(const ScenarioConfig& config, std::ostream& out);

/// Sum rates across the configured SNR grid for every placement method and
/// scheme. Same determinism contract as coverage_sweep.
void rate_sweep(const ScenarioConfig& config, std::ostream& out);

}  // namespace risim
