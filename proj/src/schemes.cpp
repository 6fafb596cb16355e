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

#include "wetbench/schemes.hpp"

namespace wetbench
{

std::string_view scheme_name(Scheme scheme) noexcept
{
    switch (scheme)
    {
    case Scheme::AaSs: return "AA-SS";
    case Scheme::AaIs: return "AA-IS";
    case Scheme::Sa: return "SA";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept
{
    if (name == "AA-SS" || name == "aa-ss" || name == "aa_ss")
        return Scheme::AaSs;
    if (name == "AA-IS" || name == "aa-is" || name == "aa_is")
        return Scheme::AaIs;
    if (name == "SA" || name == "sa")
        return Scheme::Sa;
    return std::nullopt;
}

void SchemeConfig::validate(int antennas) const
{
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw Error(Errc::OutOfRange, "beta must be finite and > 0");
    if (shift.size() != antennas)
        throw Error(Errc::OutOfRange, "phase shift length does not match antenna count");
}

double rf_energy(Scheme scheme, const ChannelSample &sample, double beta)
{
    return scheme == Scheme::AaSs ? rf_aa_ss(sample, beta) : rf_aa_is(sample, beta);
}

std::string_view jensen_order_name(JensenOrder order) noexcept
{
    switch (order)
    {
    case JensenOrder::SaDominates: return "SaDominates";
    case JensenOrder::AaIsDominates: return "AaIsDominates";
    case JensenOrder::Indeterminate: return "Indeterminate";
    }
    return "?";
}

JensenOrder jensen_order(const ChannelSample &sample, double beta, const EhCurve &curve)
{
    const Vector powers = rf_sa_subblocks(sample, beta);
    const double b = inflection(curve);
    if (powers.minCoeff() >= b)
        return JensenOrder::AaIsDominates;
    if (powers.maxCoeff() <= b)
        return JensenOrder::SaDominates;
    return JensenOrder::Indeterminate;
}

} // namespace wetbench
