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

#include "wetbench/harvester.hpp"

#include <algorithm>
#include <limits>

namespace wetbench
{

void EhCurve::validate() const
{
    if (!(g_max > 0.0) || !(a > 0.0) || !(b > 0.0))
        throw Error(Errc::OutOfRange, "EH curve needs g_max, a, b > 0");
    if (!(xi0 >= 0.0) || !std::isfinite(xi0))
        throw Error(Errc::OutOfRange, "EH outage threshold must be finite and >= 0");
}

double harvest(const EhCurve &curve, double rf_mw)
{
    if (rf_mw < 0.0 || std::isnan(rf_mw))
        throw Error(Errc::NegativeInput, "RF power must be >= 0");
    // ((1 + e^{ab}) / (1 + e^{-a(x-b)}) - 1) e^{-ab} = (1 - e^{-ax}) / (1 + e^{-a(x-b)}),
    // which is exactly 0 at x = 0 and cannot overflow.
    const double value = curve.g_max * -std::expm1(-curve.a * rf_mw) / (1.0 + std::exp(-curve.a * (rf_mw - curve.b)));
    return std::clamp(value, 0.0, curve.g_max);
}

double harvest_inverse(const EhCurve &curve, double harvested_mw)
{
    if (harvested_mw <= 0.0)
        return 0.0;
    if (harvested_mw >= curve.g_max)
        return std::numeric_limits<double>::infinity();
    const double eab = std::exp(-curve.a * curve.b);
    // 1 + e^{-a(x-b)} = (1 + e^{-ab}) / (y / g_max + e^{-ab})
    const double denom = (1.0 + eab) / (harvested_mw / curve.g_max + eab) - 1.0;
    return std::max(0.0, curve.b - std::log(denom) / curve.a);
}

double harvest_second_derivative(const EhCurve &curve, double rf_mw)
{
    // g'' = g_max a^2 (1 + e^{-ab}) s (1 - s) (1 - 2 s), s = 1 / (1 + e^{-a(x-b)})
    const double s = 1.0 / (1.0 + std::exp(-curve.a * (rf_mw - curve.b)));
    const double eab = std::exp(-curve.a * curve.b);
    return curve.g_max * curve.a * curve.a * (1.0 + eab) * s * (1.0 - s) * (1.0 - 2.0 * s);
}

} // namespace wetbench
