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

#ifndef WETBENCH_CHI2_HPP
#define WETBENCH_CHI2_HPP

#include "wetbench/error.hpp"

namespace wetbench
{

/// Non-central chi-squared law chi2(m, n): m degrees of freedom, non-centrality n.
struct NoncentralChi2
{
    double dof = 2.0;
    double noncentrality = 0.0;

    double mean() const noexcept { return dof + noncentrality; }
    double variance() const noexcept { return 2.0 * (dof + 2.0 * noncentrality); }
};

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Density of chi2(m, n) at x >= 0.
///
/// Both chi2_pdf and chi2_cdf sum the Poisson(n/2)-weighted central series
/// outward from the Poisson mode, using three-term recurrences between
/// neighbouring central terms, and stop each side once a term drops below
/// 1e-14 of the accumulated value. More than 1e6 terms throws NonConvergence.
double chi2_pdf(const NoncentralChi2 &dist, double x);

/// Distribution function of chi2(m, n) at x.
double chi2_cdf(const NoncentralChi2 &dist, double x);

/// J0, the Bessel function of the first kind and order zero.
double bessel_j0(double x);

} // namespace wetbench

#endif
