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

#include <cstdint>
#include <random>

namespace risim {

// Independent reproducible random streams per (trial, purpose), derived
// from one master seed. Trials can then run in any order or in parallel
// without changing any drawn value.
enum class RngPurpose : std::uint64_t {
    kScene = 1,
    kUsers = 2,
    kChannel = 3,
    kPlacement = 4,
    kRisPhases = 5,
};

// SplitMix64 finalizer; decorrelates structured seed inputs.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t trial,
                                 RngPurpose purpose) {
    const std::uint64_t s =
        mix64(mix64(mix64(master_seed) ^ trial) ^
              static_cast<std::uint64_t>(purpose));
    return std::mt19937_64(s);
}

}  // namespace risim
