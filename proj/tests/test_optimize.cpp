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

#include <doctest.h>

#include "wetbench/analytic.hpp"
#include "wetbench/optimize.hpp"

using namespace wetbench;

TEST_CASE("closed-form shifts")
{
    Vector expected(4);
    expected << 0, pi, 0, pi;
    CHECK(max_energy_shift(4).psi() == expected);
    CHECK(max_energy_shift(1).psi() == Vector::Zero(1));
    CHECK(min_var_shift(6).psi().isZero(0.0));

    CHECK(aa_is_shift(8, r_sum(CorrelationModel{Exponential{0.3}}, 8)).psi().isZero(0.0));
    CHECK(aa_is_shift(4, 0.0).psi() == expected);
    CHECK(aa_is_shift(4, 4.0).psi().isZero(0.0));
    CHECK_THROWS_AS(aa_is_shift(4, 17.0), Error);
    CHECK_THROWS_AS(aa_is_shift(4, -1.0), Error);
}

TEST_CASE("objective names")
{
    for (Objective o : {Objective::MaxFAvg, Objective::MinFAvg, Objective::MaxFTildeAvg})
        CHECK(parse_objective(objective_name(o)) == o);
    CHECK_FALSE(parse_objective("fastest").has_value());
}

TEST_CASE("search recovers the alternating optimum")
{
    SearchOptions o;
    o.restarts = 4;
    const SearchResult r = search_phase(Objective::MaxFAvg, 4, o);
    const double ref = f_averaged(max_energy_shift(4).psi());
    CHECK(std::abs(r.value - ref) <= 1e-3 * ref);
    CHECK(r.value == doctest::Approx(f_averaged(r.shift.psi())).epsilon(1e-12));
}

TEST_CASE("zero shift is near the minimum of the averaged phase function")
{
    SearchOptions o;
    o.restarts = 8;
    o.grid = 360;
    // psi = 0 is within 2% of the minimum except at M = 3 (3.9%) and M = 5 (2.4%).
    for (int M = 2; M <= 16; ++M)
    {
        const SearchResult r = search_phase(Objective::MinFAvg, M, o);
        const double zero = f_averaged(Vector::Zero(M));
        CAPTURE(M);
        CHECK(r.value <= zero + 1e-12);
        CHECK(zero <= (M == 3 || M == 5 ? 1.05 : 1.02) * r.value);
    }
}

TEST_CASE("AA-IS mean cannot be raised by phase shifting")
{
    SearchOptions o;
    o.restarts = 4;
    o.grid = 180;
    const SearchResult r = search_phase(Objective::MaxFTildeAvg, 8, o);
    CHECK(std::abs(r.value) / 64.0 < 0.05);
}

TEST_CASE("search is deterministic and thread invariant")
{
    SearchOptions o;
    o.restarts = 6;
    o.grid = 120;
    o.seed = 99;
    const SearchResult a = search_phase(Objective::MinFAvg, 7, o);
    o.threads = 3;
    const SearchResult b = search_phase(Objective::MinFAvg, 7, o);
    CHECK(a.value == b.value);
    CHECK(a.shift.psi() == b.shift.psi());
    CHECK(a.restart == b.restart);
    CHECK(a.sweeps == b.sweeps);
}

TEST_CASE("search limits")
{
    SearchOptions o;
    o.max_sweeps = 1;
    o.grid = 64;
    try
    {
        search_phase(Objective::MaxFAvg, 6, o);
        FAIL("budget not enforced");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
    CHECK_THROWS_AS(search_phase(Objective::MaxFAvg, 33), Error);
    CHECK(search_phase(Objective::MaxFAvg, 1).value == doctest::Approx(1.0));
}
