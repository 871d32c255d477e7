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

// Hand-traced assignment fixtures: each case walks the greedy rounds on
// paper and freezes the expected assignment vector and round order.

#pragma once

#include <string>
#include <vector>

#include "risim/protocol.hpp"

namespace risim::testing {

struct AssignmentCase {
    std::string name;
    ScanReport report;
    int num_ris = 0;
    std::vector<int> expect_user_ris;
    std::vector<int> expect_round_user;
};

inline ScanReport make_report(const std::vector<std::vector<double>>& direct,
                              const std::vector<std::vector<std::vector<double>>>& via) {
    ScanReport report;
    const int users = static_cast<int>(direct.size());
    const int beams = static_cast<int>(direct.front().size());
    report.direct.set_size(users, beams);
    for (int k = 0; k < users; ++k)
        for (int i = 0; i < beams; ++i) report.direct(k, i) = direct[k][i];
    for (const auto& ris : via) {
        arma::mat m(users, static_cast<int>(ris.front().size()));
        for (int k = 0; k < users; ++k)
            for (std::size_t i = 0; i < ris[k].size(); ++i)
                m(k, i) = ris[k][i];
        report.via_ris.push_back(m);
    }
    return report;
}

inline std::vector<AssignmentCase> assignment_cases() {
    std::vector<AssignmentCase> cases;

    cases.push_back({"direct beats ris", make_report({{10, 1}}, {{{5}}}),
                     1, {0}, {0}});

    cases.push_back({"ris beats direct", make_report({{3}}, {{{5}}}),
                     1, {1}, {0}});

    cases.push_back({"tie favors direct", make_report({{7}}, {{{7}}}),
                     1, {0}, {0}});

    cases.push_back({"strong ris pair steals round one",
                     make_report({{1}, {2}}, {{{10}, {9}}}),
                     1, {1, 0}, {0, 1}});

    cases.push_back({"direct first then ris",
                     make_report({{5}, {1}}, {{{2}, {4}}}),
                     1, {0, 1}, {0, 1}});

    cases.push_back({"two ris two users",
                     make_report({{1}, {1}}, {{{9}, {2}}, {{3}, {8}}}),
                     2, {1, 2}, {0, 1}});

    cases.push_back({"both direct despite ris",
                     make_report({{6}, {7}}, {{{5}, {5}}, {{4}, {4}}}),
                     2, {0, 0}, {1, 0}});

    cases.push_back({"equal direct argmax takes lowest user",
                     make_report({{5, 5}, {5, 3}}, {{{1}, {1}}}),
                     1, {0, 0}, {0, 1}});

    cases.push_back({"equal ris argmax takes lowest ris",
                     make_report({{0}, {0}}, {{{4}, {3}}, {{4}, {2}}}),
                     2, {1, 2}, {0, 1}});

    cases.push_back({"three users one ris",
                     make_report({{1, 2}, {3, 1}, {0, 0}},
                                 {{{4, 1}, {0, 2}, {5, 0}}}),
                     1, {0, 0, 1}, {2, 1, 0}});

    cases.push_back({"no ris at all",
                     make_report({{1}, {9}}, {}),
                     0, {0, 0}, {1, 0}});

    cases.push_back({"all-zero reports settle direct in user order",
                     make_report({{0}, {0}}, {{{0}, {0}}}),
                     1, {0, 0}, {0, 1}});

    cases.push_back({"contested ris goes to the stronger user",
                     make_report({{1}, {1}}, {{{9}, {8}}, {{2}, {3}}}),
                     2, {1, 2}, {0, 1}});

    cases.push_back({"second user falls back to direct",
                     make_report({{1}, {4}}, {{{9}, {8}}, {{2}, {3}}}),
                     2, {1, 0}, {0, 1}});

    cases.push_back({"single user picks the better ris",
                     make_report({{2}}, {{{1}}, {{7}}}),
                     2, {2}, {0}});

    cases.push_back({"three users three ris cascade",
                     make_report({{0}, {0}, {0}},
                                 {{{1}, {6}, {5}}, {{2}, {7}, {3}},
                                  {{3}, {8}, {1}}}),
                     3, {2, 3, 1}, {1, 2, 0}});

    {
        // Positive scaling leaves the cascade unchanged.
        AssignmentCase scaled = cases.back();
        scaled.name = "cascade is scale invariant";
        scaled.report.direct *= 1000.0;
        for (auto& m : scaled.report.via_ris) m *= 1000.0;
        cases.push_back(scaled);
    }

    cases.push_back({"multi-beam ris sweep",
                     make_report({{1, 0}, {0, 1}},
                                 {{{0, 5, 2}, {3, 0, 0}}}),
                     1, {1, 0}, {0, 1}});

    cases.push_back({"direct argmax across beams",
                     make_report({{2, 9}, {1, 1}}, {{{6}, {6}}}),
                     1, {0, 1}, {0, 1}});

    cases.push_back({"uniform scores settle direct in user order",
                     make_report({{5}, {5}, {5}},
                                 {{{5}, {5}, {5}}, {{5}, {5}, {5}}}),
                     2, {0, 0, 0}, {0, 1, 2}});

    return cases;
}

}  // namespace risim::testing
