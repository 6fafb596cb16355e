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

#ifndef WETBENCH_SCENARIO_HPP
#define WETBENCH_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wetbench/channel.hpp"
#include "wetbench/harvester.hpp"
#include "wetbench/schemes.hpp"

namespace wetbench
{

/// beta (dBm) = intercept - exponent * log10(d / 1 m).
struct PathLoss
{
    double intercept_dbm = 30.0;
    double exponent = 27.0;
};

/// Average single-antenna RF power at distance d, in mW.
double beta_at(const PathLoss &pathloss, double distance_m);

struct Device
{
    double distance = 1.0;   // m
    double azimuth = 0.0;    // rad, measured from the unrotated boresight
};

struct UniformDisk
{
    double radius = 10.0;
    int count = 80;
    double min_distance = 1.0;   // keeps devices out of the near field
};

struct Cluster
{
    double center_azimuth = 0.0;   // rad
    double spread = 0.0;           // full angular width, rad
    double r_min = 1.0;
    double r_max = 2.0;
    int count = 1;
};

struct Deployment
{
    std::vector<Device> devices;
    PathLoss pathloss;

    void validate() const;
};

/// Devices uniform in area over the annulus [min_distance, radius].
Deployment generate(const UniformDisk &disk, const PathLoss &pathloss, std::uint64_t seed);

/// Devices with azimuth uniform in [center - spread/2, center + spread/2]
/// and distance uniform in [r_min, r_max].
Deployment generate(const std::vector<Cluster> &clusters, const PathLoss &pathloss, std::uint64_t seed);

/// Azimuth seen by the rotated array, wrapped into [0, 2pi).
double device_phi(double azimuth, double rotation);

/// One signal fed to a consecutive block of antennas.
struct BeaconGroup
{
    int first = 0;
    int count = 1;
    Scheme scheme = Scheme::AaSs;
    PhaseShift shift;   // length count, applied to antennas first..first+count-1
};

/// Array rotation and per-signal antenna assignment. Total power is split
/// equally over the active antennas, so a group of m antennas out of
/// N active delivers a per-antenna power of beta / N, i.e. it behaves like a
/// single m-antenna beacon with beta scaled by m / N.
struct BeaconPlan
{
    std::string name;
    double rotation = 0.0;   // rad, counter-clockwise
    std::vector<BeaconGroup> groups;

    int active_antennas() const;
    void validate(int antennas) const;
};

/// Plan with every antenna in one group.
BeaconPlan single_group_plan(std::string name, int antennas, Scheme scheme, const PhaseShift &shift,
                             double rotation = 0.0);

struct PlanResult
{
    std::vector<double> per_device;   // mean harvested power, mW
    double min_energy = 0.0;
    int worst_device = 0;
};

struct EvaluationOptions
{
    long samples = 5000;
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Monte Carlo mean harvested power per device.
///
/// Signals from co-active groups are independent, so their RF powers add
/// before the harvester. An SA group cycles its power over its antennas in
/// equal sub-blocks while the other groups stay on. Each device draws from a
/// stream keyed by its distance so every plan sees the same fading.
PlanResult evaluate_plan(const Deployment &deployment, const BeaconPlan &plan, const ArrayConfig &base,
                         const EhCurve &curve, const EvaluationOptions &options);

struct SweepResult
{
    int best_index = 0;
    std::vector<PlanResult> results;   // one per candidate, in order
};

/// Evaluates every candidate and picks the highest minimum energy; ties go
/// to the earliest candidate.
SweepResult sweep_plans(const Deployment &deployment, const std::vector<BeaconPlan> &candidates,
                        const ArrayConfig &base, const EhCurve &curve, const EvaluationOptions &options);

/// Copies of the templates at each rotation, template-major order.
std::vector<BeaconPlan> with_rotations(const std::vector<BeaconPlan> &templates, const std::vector<double> &rotations);

} // namespace wetbench

#endif
