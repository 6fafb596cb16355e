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

#include "wetbench/scenario.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <thread>

namespace wetbench
{

double beta_at(const PathLoss &pathloss, double distance_m)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw Error(Errc::OutOfRange, "device distance must be finite and > 0");
    return dbm_to_mw(pathloss.intercept_dbm - pathloss.exponent * std::log10(distance_m));
}

void Deployment::validate() const
{
    if (devices.empty())
        throw Error(Errc::OutOfRange, "deployment has no devices");
    for (const auto &d : devices)
        if (!(d.distance > 0.0) || !std::isfinite(d.distance) || !std::isfinite(d.azimuth))
            throw Error(Errc::OutOfRange, "device distances must be finite and > 0");
}

Deployment generate(const UniformDisk &disk, const PathLoss &pathloss, std::uint64_t seed)
{
    if (disk.count < 1 || !(disk.min_distance > 0.0) || !(disk.radius > disk.min_distance))
        throw Error(Errc::OutOfRange, "disk needs count >= 1 and 0 < min_distance < radius");
    RngStream rng(seed, 0);
    Deployment out;
    out.pathloss = pathloss;
    const double r0 = disk.min_distance * disk.min_distance;
    const double r1 = disk.radius * disk.radius;
    for (int i = 0; i < disk.count; ++i)
    {
        const double r = std::sqrt(r0 + (r1 - r0) * rng.uniform());
        out.devices.push_back({r, rng.uniform(0.0, two_pi)});
    }
    return out;
}

Deployment generate(const std::vector<Cluster> &clusters, const PathLoss &pathloss, std::uint64_t seed)
{
    if (clusters.empty())
        throw Error(Errc::OutOfRange, "need at least one cluster");
    RngStream rng(seed, 0);
    Deployment out;
    out.pathloss = pathloss;
    for (const auto &c : clusters)
    {
        if (c.count < 1 || !(c.r_min > 0.0) || !(c.r_max >= c.r_min) || !(c.spread >= 0.0))
            throw Error(Errc::OutOfRange, "cluster needs count >= 1, 0 < r_min <= r_max, spread >= 0");
        for (int i = 0; i < c.count; ++i)
        {
            const double az = c.center_azimuth + c.spread * (rng.uniform() - 0.5);
            const double r = rng.uniform(c.r_min, c.r_max);
            out.devices.push_back({r, device_phi(az, 0.0)});
        }
    }
    return out;
}

double device_phi(double azimuth, double rotation)
{
    double w = std::fmod(azimuth - rotation, two_pi);
    if (w < 0.0)
        w += two_pi;
    if (w >= two_pi)
        w = 0.0;
    return w;
}

int BeaconPlan::active_antennas() const
{
    int n = 0;
    for (const auto &g : groups)
        n += g.count;
    return n;
}

void BeaconPlan::validate(int antennas) const
{
    if (groups.empty())
        throw Error(Errc::InvalidPlan, "plan '" + name + "' has no groups");
    if (!std::isfinite(rotation))
        throw Error(Errc::InvalidPlan, "plan rotation must be finite");
    std::vector<bool> used(static_cast<std::size_t>(antennas), false);
    int sa_groups = 0;
    for (const auto &g : groups)
    {
        if (g.count < 1 || g.first < 0 || g.first + g.count > antennas)
            throw Error(Errc::InvalidPlan, "plan '" + name + "' has a group outside the array");
        if (g.shift.size() != g.count)
            throw Error(Errc::InvalidPlan, "plan '" + name + "' has a phase shift of the wrong length");
        for (int t = g.first; t < g.first + g.count; ++t)
        {
            if (used[static_cast<std::size_t>(t)])
                throw Error(Errc::InvalidPlan, "plan '" + name + "' assigns an antenna twice");
            used[static_cast<std::size_t>(t)] = true;
        }
        if (g.scheme == Scheme::Sa)
            ++sa_groups;
    }
    if (sa_groups > 1)
        throw Error(Errc::InvalidPlan, "plan '" + name + "' has more than one SA group");
}

BeaconPlan single_group_plan(std::string name, int antennas, Scheme scheme, const PhaseShift &shift, double rotation)
{
    return BeaconPlan{std::move(name), rotation, {BeaconGroup{0, antennas, scheme, shift}}};
}

namespace
{

std::uint64_t device_key(std::uint64_t seed, const Device &device)
{
    return derive_seed(seed, std::bit_cast<std::uint64_t>(device.distance));
}

double evaluate_device(const Device &device, const BeaconPlan &plan, const ArrayConfig &base, const Matrix &R,
                       const EhCurve &curve, const PathLoss &pathloss, const EvaluationOptions &options)
{
    const int M = base.antennas;
    const double beta = beta_at(pathloss, device.distance);
    const double active = plan.active_antennas();

    // Full-array shift assembled from the group shifts; idle antennas keep 0.
    Vector psi = Vector::Zero(M);
    for (const auto &g : plan.groups)
        psi.segment(g.first, g.count) = g.shift.psi();

    ArrayConfig config = base;
    config.phi = device_phi(device.azimuth, plan.rotation);
    const ChannelSampler sampler(config, PhaseShift::normalized(psi), R);

    Vector hx(M), hy(M), scratch;
    RngStream rng(device_key(options.seed, device), 0);
    double total = 0.0;
    for (long i = 0; i < options.samples; ++i)
    {
        sampler.sample_into(rng, hx, hy, scratch);
        double steady = 0.0;
        const BeaconGroup *sa = nullptr;
        double sa_beta = 0.0;
        for (const auto &g : plan.groups)
        {
            const double b = beta * g.count / active;
            const auto gx = hx.segment(g.first, g.count);
            const auto gy = hy.segment(g.first, g.count);
            switch (g.scheme)
            {
            case Scheme::AaSs: steady += rf_aa_ss(gx, gy, b); break;
            case Scheme::AaIs: steady += rf_aa_is(gx, gy, b); break;
            case Scheme::Sa:
                sa = &g;
                sa_beta = b;
                break;
            }
        }
        if (sa == nullptr)
        {
            total += harvest(curve, steady);
            continue;
        }
        double block = 0.0;
        for (int t = sa->first; t < sa->first + sa->count; ++t)
            block += harvest(curve, steady + sa_beta * (hx(t) * hx(t) + hy(t) * hy(t)));
        total += block / sa->count;
    }
    return total / static_cast<double>(options.samples);
}

} // namespace

PlanResult evaluate_plan(const Deployment &deployment, const BeaconPlan &plan, const ArrayConfig &base,
                         const EhCurve &curve, const EvaluationOptions &options)
{
    deployment.validate();
    base.validate();
    curve.validate();
    plan.validate(base.antennas);
    if (options.samples < 1 || options.threads < 1)
        throw Error(Errc::OutOfRange, "evaluation needs samples >= 1 and threads >= 1");

    const Matrix R = build_correlation(base.correlation, base.antennas);
    const std::size_t n = deployment.devices.size();
    PlanResult out;
    out.per_device.assign(n, 0.0);

    auto body = [&](std::size_t i) {
        out.per_device[i] =
            evaluate_device(deployment.devices[i], plan, base, R, curve, deployment.pathloss, options);
    };
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.threads), n));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try
                {
                    for (std::size_t i = next++; i < n; i = next++)
                        body(i);
                }
                catch (...)
                {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto &t : pool)
            t.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    out.worst_device = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (out.per_device[i] < out.per_device[static_cast<std::size_t>(out.worst_device)])
            out.worst_device = static_cast<int>(i);
    out.min_energy = out.per_device[static_cast<std::size_t>(out.worst_device)];
    return out;
}

SweepResult sweep_plans(const Deployment &deployment, const std::vector<BeaconPlan> &candidates,
                        const ArrayConfig &base, const EhCurve &curve, const EvaluationOptions &options)
{
    if (candidates.empty())
        throw Error(Errc::EmptyCandidateSet, "no candidate plans to sweep");
    SweepResult out;
    for (const auto &plan : candidates)
        out.results.push_back(evaluate_plan(deployment, plan, base, curve, options));
    for (std::size_t i = 1; i < out.results.size(); ++i)
        if (out.results[i].min_energy > out.results[static_cast<std::size_t>(out.best_index)].min_energy)
            out.best_index = static_cast<int>(i);
    return out;
}

std::vector<BeaconPlan> with_rotations(const std::vector<BeaconPlan> &templates, const std::vector<double> &rotations)
{
    std::vector<BeaconPlan> out;
    for (const auto &t : templates)
        for (double r : rotations)
        {
            BeaconPlan p = t;
            p.rotation = r;
            out.push_back(std::move(p));
        }
    return out;
}

} // namespace wetbench
