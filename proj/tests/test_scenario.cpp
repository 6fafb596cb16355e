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

#include <algorithm>

#include "wetbench/optimize.hpp"
#include "wetbench/scenario.hpp"

using namespace wetbench;

namespace
{

ArrayConfig small_array()
{
    ArrayConfig a;
    a.antennas = 4;
    a.kappa = 5.0;
    a.correlation = Exponential{0.3};
    return a;
}

Deployment few_devices()
{
    Deployment d;
    d.devices = {{2.0, 0.3}, {3.5, 1.9}, {5.0, 4.0}, {2.7, 5.5}, {4.1, 3.0}};
    return d;
}

} // namespace

TEST_CASE("path loss")
{
    const PathLoss pl;
    CHECK(beta_at(pl, 1.0) == doctest::Approx(1000.0));
    CHECK(beta_at(pl, 10.0) == doctest::Approx(dbm_to_mw(3.0)));
    CHECK(beta_at(pl, 4.0) > beta_at(pl, 5.0));
    CHECK_THROWS_AS(beta_at(pl, 0.0), Error);
}

TEST_CASE("azimuth wrapping")
{
    CHECK(device_phi(0.5, 0.2) == doctest::Approx(0.3));
    CHECK(device_phi(0.2, 0.5) == doctest::Approx(two_pi - 0.3));
    CHECK(device_phi(two_pi, 0.0) == 0.0);
    for (double a : {-7.0, -0.1, 0.0, 3.0, 13.0})
    {
        const double w = device_phi(a, 1.0);
        CHECK(w >= 0.0);
        CHECK(w < two_pi);
    }
}

TEST_CASE("deployments")
{
    const Deployment disk = generate(UniformDisk{10.0, 80, 1.0}, PathLoss{}, 7);
    CHECK(disk.devices.size() == 80);
    for (const Device &d : disk.devices)
    {
        CHECK(d.distance >= 1.0);
        CHECK(d.distance <= 10.0);
    }
    const Deployment again = generate(UniformDisk{10.0, 80, 1.0}, PathLoss{}, 7);
    CHECK(again.devices.front().distance == disk.devices.front().distance);

    const Deployment cl = generate({Cluster{1.0, 0.4, 5.0, 7.0, 10}, Cluster{4.0, 0.2, 6.0, 8.0, 5}}, PathLoss{}, 3);
    REQUIRE(cl.devices.size() == 15);
    for (int i = 0; i < 10; ++i)
    {
        CHECK(std::abs(cl.devices[i].azimuth - 1.0) <= 0.2 + 1e-12);
        CHECK(cl.devices[i].distance >= 5.0);
        CHECK(cl.devices[i].distance <= 7.0);
    }
    CHECK_THROWS_AS(Deployment{}.validate(), Error);
}

TEST_CASE("plan validation")
{
    BeaconPlan ok{"split", 0.0,
                  {BeaconGroup{0, 2, Scheme::AaSs, PhaseShift::zeros(2)},
                   BeaconGroup{2, 2, Scheme::AaSs, max_energy_shift(2)}}};
    CHECK_NOTHROW(ok.validate(4));
    CHECK(ok.active_antennas() == 4);

    BeaconPlan overlap = ok;
    overlap.groups[1].first = 1;
    CHECK_THROWS_AS(overlap.validate(4), Error);
    BeaconPlan outside = ok;
    outside.groups[1].first = 3;
    CHECK_THROWS_AS(outside.validate(4), Error);
    BeaconPlan wrong_shift = ok;
    wrong_shift.groups[0].shift = PhaseShift::zeros(3);
    CHECK_THROWS_AS(wrong_shift.validate(4), Error);
    BeaconPlan two_sa{"sa", 0.0,
                      {BeaconGroup{0, 2, Scheme::Sa, PhaseShift::zeros(2)},
                       BeaconGroup{2, 2, Scheme::Sa, PhaseShift::zeros(2)}}};
    CHECK_THROWS_AS(two_sa.validate(4), Error);
}

TEST_CASE("plan evaluation invariances")
{
    const ArrayConfig a = small_array();
    const EhCurve g;
    EvaluationOptions o;
    o.samples = 2000;
    const Deployment d = few_devices();
    const BeaconPlan plan = single_group_plan("max", 4, Scheme::AaSs, max_energy_shift(4), 0.4);
    const PlanResult base = evaluate_plan(d, plan, a, g, o);
    REQUIRE(base.per_device.size() == d.devices.size());
    CHECK(base.min_energy == *std::min_element(base.per_device.begin(), base.per_device.end()));
    CHECK(base.per_device[static_cast<std::size_t>(base.worst_device)] == base.min_energy);

    SUBCASE("rotating devices and array together changes nothing")
    {
        Deployment turned = d;
        for (Device &dev : turned.devices)
            dev.azimuth += 1.1;
        BeaconPlan p = plan;
        p.rotation += 1.1;
        const PlanResult r = evaluate_plan(turned, p, a, g, o);
        for (std::size_t i = 0; i < d.devices.size(); ++i)
            CHECK(r.per_device[i] == doctest::Approx(base.per_device[i]).epsilon(1e-9));
    }
    SUBCASE("relabeling devices permutes the result")
    {
        Deployment shuffled = d;
        std::reverse(shuffled.devices.begin(), shuffled.devices.end());
        const PlanResult r = evaluate_plan(shuffled, plan, a, g, o);
        const std::size_t n = d.devices.size();
        for (std::size_t i = 0; i < n; ++i)
            CHECK(r.per_device[n - 1 - i] == base.per_device[i]);
        CHECK(r.min_energy == base.min_energy);
    }
    SUBCASE("thread count does not matter")
    {
        EvaluationOptions t = o;
        t.threads = 3;
        CHECK(evaluate_plan(d, plan, a, g, t).per_device == base.per_device);
    }
    SUBCASE("SA is rotation invariant in distribution")
    {
        const BeaconPlan sa = single_group_plan("sa", 4, Scheme::Sa, PhaseShift::zeros(4));
        EvaluationOptions big = o;
        big.samples = 40000;
        const PlanResult r0 = evaluate_plan(d, sa, a, g, big);
        BeaconPlan turned = sa;
        turned.rotation = 2.0;
        const PlanResult r1 = evaluate_plan(d, turned, a, g, big);
        for (std::size_t i = 0; i < d.devices.size(); ++i)
            CHECK(r1.per_device[i] == doctest::Approx(r0.per_device[i]).epsilon(0.03));
    }
}

TEST_CASE("plan sweeps")
{
    const ArrayConfig a = small_array();
    const EhCurve g;
    EvaluationOptions o;
    o.samples = 500;
    const Deployment d = few_devices();
    const BeaconPlan p = single_group_plan("is", 4, Scheme::AaIs, PhaseShift::zeros(4));
    const std::vector<BeaconPlan> twins = with_rotations({p}, {0.0, 0.0});
    REQUIRE(twins.size() == 2);
    CHECK(sweep_plans(d, twins, a, g, o).best_index == 0);

    const auto grid = with_rotations({p, single_group_plan("ss", 4, Scheme::AaSs, PhaseShift::zeros(4))}, {0.0, 1.0, 2.0});
    REQUIRE(grid.size() == 6);
    CHECK(grid[1].name == "is");
    CHECK(grid[1].rotation == 1.0);
    CHECK(grid[3].name == "ss");
    const SweepResult s = sweep_plans(d, grid, a, g, o);
    for (const PlanResult &r : s.results)
        CHECK(r.min_energy <= s.results[static_cast<std::size_t>(s.best_index)].min_energy);
    try
    {
        sweep_plans(d, {}, a, g, o);
        FAIL("empty sweep accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == Errc::EmptyCandidateSet);
    }
}
