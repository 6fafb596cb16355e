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

#include "wetbench/harvester.hpp"

using namespace wetbench;

TEST_CASE("logistic harvester anchors")
{
    const EhCurve g = EhCurve::reference_fit();
    CHECK(harvest(g, 0.0) == 0.0);
    // Direct evaluation of the textbook form at 1.6 mW.
    const double eab = std::exp(g.a * g.b);
    const double direct = g.g_max * ((1.0 + eab) / (1.0 + std::exp(-g.a * (1.6 - g.b))) - 1.0) / eab;
    CHECK(harvest(g, 1.6) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(harvest(g, 1.6) == doctest::Approx(0.30365).epsilon(1e-4));
    CHECK(std::abs(harvest(g, 1e6) - 2.0) <= 1e-9);
    CHECK(harvest(g, 1e300) == g.g_max);
    CHECK_THROWS_AS(harvest(g, -1e-3), Error);
}

TEST_CASE("harvester is monotone with a single inflection at b")
{
    const EhCurve g;
    double prev = 0.0;
    for (int i = 1; i <= 4000; ++i)
    {
        const double x = 0.005 * i;
        const double y = harvest(g, x);
        CHECK(y >= prev);
        CHECK(y <= g.g_max);
        prev = y;
    }
    CHECK(inflection(g) == 3.5);
    CHECK(inflection(EhCurve{2.0, 1.0, 1.0, 0.0}) == 1.0);

    const auto second = [&](double x) {
        const double h = 1e-3;
        return (harvest(g, x + h) - 2.0 * harvest(g, x) + harvest(g, x - h)) / (h * h);
    };
    CHECK(second(3.49) > 0.0);
    CHECK(second(3.51) < 0.0);
    for (double x : {0.5, 2.0, 3.0, 4.0, 8.0})
        CHECK(harvest_second_derivative(g, x) == doctest::Approx(second(x)).epsilon(1e-4));
}

TEST_CASE("harvester inverse")
{
    const EhCurve g;
    for (double x : {0.01, 0.3, 1.6, 3.5, 7.0, 20.0})
        CHECK(harvest_inverse(g, harvest(g, x)) == doctest::Approx(x).epsilon(1e-9));
    CHECK(harvest_inverse(g, 0.0) == 0.0);
    CHECK(std::isinf(harvest_inverse(g, g.g_max)));
}

TEST_CASE("power unit conversions")
{
    CHECK(dbm_to_mw(0.0) == 1.0);
    CHECK(dbm_to_mw(-2.0) == doctest::Approx(0.6310).epsilon(1e-4));
    CHECK(dbm_to_mw(2.0) == doctest::Approx(1.5849).epsilon(1e-4));
    CHECK(mw_to_dbm(dbm_to_mw(-13.7)) == doctest::Approx(-13.7).epsilon(1e-12));
    CHECK_THROWS_AS(mw_to_dbm(0.0), Error);
    CHECK(EhCurve{}.xi0 == doctest::Approx(dbm_to_mw(-2.0)).epsilon(1e-12));
}

TEST_CASE("curve validation")
{
    CHECK_NOTHROW(EhCurve{}.validate());
    CHECK_THROWS_AS((EhCurve{0.0, 0.56, 3.5, 0.6}.validate()), Error);
    CHECK_THROWS_AS((EhCurve{2.0, -1.0, 3.5, 0.6}.validate()), Error);
    CHECK_THROWS_AS((EhCurve{2.0, 0.56, 3.5, -1.0}.validate()), Error);
}
