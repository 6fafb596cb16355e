// SPDX-License-Identifier: Apache-2.0
//
// wetbench: CSI-free multi-antenna RF wireless energy transfer toolkit
// Copyright (C) 2026 The wetbench authors
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

#ifndef WETBENCH_OPTIMIZE_HPP
#define WETBENCH_OPTIMIZE_HPP

#include <cstdint>
#include <string_view>
#include <optional>

#include "wetbench/channel.hpp"

namespace wetbench
{

/// psi_t = (t mod 2) pi; maximizes f averaged over phi.
PhaseShift max_energy_shift(int antennas);

/// psi = 0; the canonical variance-reducing choice for AA-SS.
PhaseShift min_var_shift(int antennas);

/// Shift for AA-IS: zero when R_sum >= M, alternating pi when R_sum < M.
PhaseShift aa_is_shift(int antennas, double r_sum);

enum class Objective
{
    MaxFAvg,
    MinFAvg,
    MaxFTildeAvg
};

std::string_view objective_name(Objective objective) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;

struct SearchOptions
{
    int restarts = 16;
    int grid = 720;          // candidate phases per coordinate
    int max_sweeps = 1000;   // per restart; exceeding it throws BudgetExceeded
    std::uint64_t seed = 1;
    int threads = 1;
};

struct SearchResult
{
    PhaseShift shift;
    double value = 0.0;
    int restart = 0;         // index of the winning restart
    int sweeps = 0;          // sweeps used by the winning restart
};

/// Multi-start cyclic coordinate search on a uniform grid over [0, 2pi).
///
/// Restart 0 starts at psi = 0, the rest at seeded random grid points. Each
/// sweep visits psi_1..psi_{M-1} and moves a coordinate only on strict
/// improvement, so the objective is monotone across sweeps. Ties between
/// restarts go to the lowest index. M is limited to 32.
SearchResult search_phase(Objective objective, int antennas, const SearchOptions &options = {});

} // namespace wetbench

#endif
