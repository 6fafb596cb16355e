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

#ifndef WETBENCH_HARVESTER_HPP
#define WETBENCH_HARVESTER_HPP

#include <cmath>

#include "wetbench/error.hpp"

namespace wetbench
{

/// Logistic (sigmoid) rectifier model, powers in mW.
///
///   g(x) = g_max * ((1 + e^{ab}) / (1 + e^{-a(x - b)}) - 1) * e^{-ab}
///
/// g(0) = 0, g is non-decreasing, convex below b and concave above it, and
/// saturates at g_max.
struct EhCurve
{
    double g_max = 2.0;   // mW
    double a = 0.56;
    double b = 3.5;
    double xi0 = 0.630957344480193;   // outage threshold on RF power, mW (-2 dBm)

    void validate() const;

    /// Parameters of the 2.45 GHz rectifier fit used in the reference experiments.
    static EhCurve reference_fit() { return EhCurve{}; }
};

/// Ideal linear harvester, g(x) = eta * x.
struct LinearEh
{
    double eta = 0.2;

    double operator()(double x) const { return eta * x; }
};

double harvest(const EhCurve &curve, double rf_mw);

inline double harvest(const LinearEh &curve, double rf_mw) { return curve(rf_mw); }

/// Inverse of harvest() on [0, g_max); returns +inf at or above g_max.
double harvest_inverse(const EhCurve &curve, double harvested_mw);

/// RF power where g switches from convex to concave.
inline double inflection(const EhCurve &curve) { return curve.b; }

/// Second derivative of g.
double harvest_second_derivative(const EhCurve &curve, double rf_mw);

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw)
{
    if (!(mw > 0.0))
        throw Error(Errc::NonPositive, "mw_to_dbm needs a positive power");
    return 10.0 * std::log10(mw);
}

} // namespace wetbench

#endif
