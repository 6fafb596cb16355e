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

#include "wetbench/chi2.hpp"

#include <cmath>
#include <limits>

namespace wetbench
{

namespace
{

constexpr double series_eps = 1e-14;
constexpr long max_terms = 1000000;

void check_params(const NoncentralChi2 &dist)
{
    if (!(dist.dof > 0.0) || !std::isfinite(dist.dof))
        throw Error(Errc::OutOfRange, "chi2 dof must be finite and > 0");
    if (!(dist.noncentrality >= 0.0) || !std::isfinite(dist.noncentrality))
        throw Error(Errc::OutOfRange, "chi2 non-centrality must be finite and >= 0");
}

double log_poisson(double k, double lambda)
{
    return k * std::log(lambda) - lambda - std::lgamma(k + 1.0);
}

double log_central_pdf(double nu, double x)
{
    return (0.5 * nu - 1.0) * std::log(x) - 0.5 * x - 0.5 * nu * std::log(2.0) - std::lgamma(0.5 * nu);
}

[[noreturn]] void too_many_terms()
{
    throw Error(Errc::NonConvergence, "non-central chi2 series exceeded the term cap");
}

} // namespace

double gamma_p(double a, double x)
{
    if (!(a > 0.0))
        throw Error(Errc::OutOfRange, "gamma_p needs a > 0");
    if (x <= 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0)
    {
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int n = 0; n < 100000; ++n)
        {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-17)
                return sum * std::exp(log_prefix);
        }
        throw Error(Errc::NonConvergence, "gamma_p series did not converge");
    }
    // Lentz continued fraction for Q(a, x).
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-17)
            return 1.0 - std::exp(log_prefix) * h;
    }
    throw Error(Errc::NonConvergence, "gamma_p continued fraction did not converge");
}

double chi2_cdf(const NoncentralChi2 &dist, double x)
{
    check_params(dist);
    if (!(x > 0.0))
        return 0.0;
    if (std::isinf(x))
        return 1.0;

    const double a0 = 0.5 * dist.dof;
    const double y = 0.5 * x;
    const double lambda = 0.5 * dist.noncentrality;
    if (lambda == 0.0)
        return gamma_p(a0, y);

    const double k0 = std::floor(lambda);
    const double log_w0 = log_poisson(k0, lambda);
    const double a_mode = a0 + k0;
    const double p_mode = gamma_p(a_mode, y);
    const double log_y = std::log(y);
    // log of P(a) - P(a + 1) = y^a e^{-y} / Gamma(a + 1)
    const double log_t_mode = a_mode * log_y - y - std::lgamma(a_mode + 1.0);

    double sum = std::exp(log_w0) * p_mode;
    long terms = 1;

    // Upward in k: P decreases, Poisson weights decrease once k > lambda.
    {
        double log_w = log_w0;
        double p = p_mode;
        double log_t = log_t_mode;
        double a = a_mode;
        for (double k = k0 + 1.0;; k += 1.0)
        {
            p -= std::exp(log_t);
            if (p < 0.0)
                p = 0.0;
            log_t += log_y - std::log(a + 1.0);
            a += 1.0;
            log_w += std::log(lambda / k);
            const double w = std::exp(log_w);
            sum += w * p;
            if (++terms > max_terms)
                too_many_terms();
            const double r = lambda / (k + 1.0);
            if (r < 1.0 && w * p * r / (1.0 - r) <= series_eps * sum)
                break;
            if (w == 0.0 && k > lambda)
                break;
        }
    }
    // Downward in k: P increases, weights fall off geometrically below the mode.
    {
        double log_w = log_w0;
        double p = p_mode;
        double log_t = log_t_mode;
        double a = a_mode;
        for (double k = k0 - 1.0; k >= 0.0; k -= 1.0)
        {
            log_t += std::log(a) - log_y;   // now log of P(a - 1) - P(a)
            a -= 1.0;
            p += std::exp(log_t);
            if (p > 1.0)
                p = 1.0;
            log_w += std::log((k + 1.0) / lambda);
            const double w = std::exp(log_w);
            sum += w * p;
            if (++terms > max_terms)
                too_many_terms();
            const double r = k / lambda;
            if (r < 1.0 && w * r / (1.0 - r) <= series_eps * sum)
                break;
        }
    }
    return sum > 1.0 ? 1.0 : sum;
}

double chi2_pdf(const NoncentralChi2 &dist, double x)
{
    check_params(dist);
    const double lambda = 0.5 * dist.noncentrality;
    if (x < 0.0 || std::isinf(x))
        return 0.0;
    if (x == 0.0)
    {
        if (dist.dof < 2.0)
            return std::numeric_limits<double>::infinity();
        return dist.dof == 2.0 ? 0.5 * std::exp(-lambda) : 0.0;
    }
    if (lambda == 0.0)
        return std::exp(log_central_pdf(dist.dof, x));

    const double k0 = std::floor(lambda);
    const double nu_mode = dist.dof + 2.0 * k0;
    const double log_term0 = log_poisson(k0, lambda) + log_central_pdf(nu_mode, x);
    const double log_x = std::log(x);

    double sum = std::exp(log_term0);
    long terms = 1;
    {
        double log_term = log_term0;
        double nu = nu_mode;
        for (double k = k0 + 1.0;; k += 1.0)
        {
            // f_{nu+2} = f_nu x / nu, w_k = w_{k-1} lambda / k
            log_term += log_x - std::log(nu) + std::log(lambda / k);
            nu += 2.0;
            const double term = std::exp(log_term);
            sum += term;
            if (++terms > max_terms)
                too_many_terms();
            const double r = lambda / (k + 1.0) * x / nu;
            if (r < 1.0 && term * r / (1.0 - r) <= series_eps * sum)
                break;
        }
    }
    {
        double log_term = log_term0;
        double nu = nu_mode;
        for (double k = k0 - 1.0; k >= 0.0; k -= 1.0)
        {
            // f_{nu-2} = f_nu x^{-1} (nu - 2), w_k = w_{k+1} (k + 1) / lambda
            log_term += std::log(nu - 2.0) - log_x + std::log((k + 1.0) / lambda);
            nu -= 2.0;
            const double term = std::exp(log_term);
            sum += term;
            if (++terms > max_terms)
                too_many_terms();
            const double r = nu > 2.0 ? k / lambda * (nu - 2.0) / x : 0.0;
            if (r < 1.0 && term * r / (1.0 - r) <= series_eps * sum)
                break;
        }
    }
    return sum;
}

double bessel_j0(double x)
{
    return std::cyl_bessel_j(0.0, std::abs(x));
}

} // namespace wetbench
