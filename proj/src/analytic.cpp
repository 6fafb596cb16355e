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

#include "wetbench/analytic.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace wetbench
{

namespace
{

Vector theta_of(const Vector &psi, double phi)
{
    return psi + los_phases(static_cast<int>(psi.size()), phi);
}

/// J0(k pi) for k = 0..n-1.
Vector j0_table(int n)
{
    Vector J(std::max(n, 1));
    for (int k = 0; k < J.size(); ++k)
        J(k) = bessel_j0(static_cast<double>(k) * pi);
    return J;
}

void require_antennas(const Vector &psi, int minimum)
{
    if (psi.size() < minimum)
        throw Error(Errc::OutOfRange, "phase vector has too few antennas");
}

// ---- Gauss-Legendre quadrature ----

constexpr int gl_order = 20;

struct GaussLegendre
{
    std::array<double, gl_order> nodes{};
    std::array<double, gl_order> weights{};

    GaussLegendre()
    {
        for (int i = 0; i < gl_order; ++i)
        {
            double x = std::cos(pi * (i + 0.75) / (gl_order + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it)
            {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= gl_order; ++k)
                {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = gl_order * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre &gauss_legendre()
{
    static const GaussLegendre rule;
    return rule;
}

double gl_panel(const std::function<double(double)> &fn, double lo, double hi)
{
    const auto &rule = gauss_legendre();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (int i = 0; i < gl_order; ++i)
        sum += rule.weights[i] * fn(mid + half * rule.nodes[i]);
    return sum * half;
}

double adaptive(const std::function<double(double)> &fn, double lo, double hi, double whole, double tol, int depth)
{
    const double mid = 0.5 * (lo + hi);
    const double left = gl_panel(fn, lo, mid);
    const double right = gl_panel(fn, mid, hi);
    if (std::abs(left + right - whole) <= tol || depth >= 40)
        return left + right;
    return adaptive(fn, lo, mid, left, 0.5 * tol, depth + 1) + adaptive(fn, mid, hi, right, 0.5 * tol, depth + 1);
}

double integrate(const std::function<double(double)> &fn, double lo, double hi, double tol, int panels)
{
    double total = 0.0;
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p)
    {
        const double a = lo + p * width;
        const double b = p + 1 == panels ? hi : a + width;
        total += adaptive(fn, a, b, gl_panel(fn, a, b), tol / panels, 0);
    }
    return total;
}

} // namespace

// ---- Phase functions -------------------------------------------------------

double f_phase(const Vector &psi, double phi)
{
    require_antennas(psi, 1);
    const Vector theta = theta_of(psi, phi);
    double v1 = 1.0;
    double v2 = 0.0;
    for (Eigen::Index t = 1; t < theta.size(); ++t)
    {
        v1 += std::cos(theta(t));
        v2 += std::sin(theta(t));
    }
    return v1 * v1 + v2 * v2;
}

double f_phase_expanded(const Vector &psi, double phi)
{
    require_antennas(psi, 1);
    const Vector theta = theta_of(psi, phi);
    const Eigen::Index M = theta.size();
    double f = static_cast<double>(M);
    for (Eigen::Index t = 1; t < M; ++t)
        f += 2.0 * std::cos(theta(t));
    for (Eigen::Index t = 1; t < M; ++t)
        for (Eigen::Index l = t + 1; l < M; ++l)
            f += 2.0 * std::cos(theta(t) - theta(l));
    return f;
}

double f_averaged(const Vector &psi)
{
    require_antennas(psi, 1);
    const Eigen::Index M = psi.size();
    const Vector J = j0_table(static_cast<int>(M));
    double f = static_cast<double>(M);
    for (Eigen::Index t = 1; t < M; ++t)
        f += 2.0 * J(t) * std::cos(psi(t));
    for (Eigen::Index t = 1; t < M; ++t)
        for (Eigen::Index l = t + 1; l < M; ++l)
            f += 2.0 * J(l - t) * std::cos(psi(t) - psi(l));
    return f;
}

double f_averaged_upper_bound(int antennas)
{
    const Vector J = j0_table(antennas);
    double f = antennas;
    for (int t = 1; t < antennas; ++t)
        f += 2.0 * std::abs(J(t));
    for (int t = 1; t < antennas; ++t)
        for (int l = t + 1; l < antennas; ++l)
            f += 2.0 * std::abs(J(l - t));
    return f;
}

double v_tilde(const Vector &psi, double phi)
{
    require_antennas(psi, 2);
    const Vector theta = theta_of(psi, phi);
    const int M = static_cast<int>(theta.size());
    double v = M - 1.0;
    for (int j = 1; j <= M - 1; ++j)
    {
        const int first = M - j + 1;   // inner sums run over t = M-j+1 .. M-1
        const double pivot = theta(M - j);
        double inner = 0.0;
        for (int t = first; t <= M - 1; ++t)
        {
            inner += std::cos(theta(t));
            for (int l = t + 1; l <= M - 1; ++l)
                inner += std::cos(theta(t) - theta(l));
            inner -= j * std::cos(pivot - theta(t));
        }
        inner -= j * std::cos(pivot);
        v += 2.0 * inner / (static_cast<double>(j) * (j + 1.0));
    }
    return v;
}

double v_tilde_quadratic(const Vector &psi, double phi, double rho)
{
    require_antennas(psi, 2);
    const int M = static_cast<int>(psi.size());
    if (!(rho < 1.0))
        throw Error(Errc::OutOfRange, "quadratic form needs rho < 1");
    ArrayConfig config;
    config.antennas = M;
    config.phi = phi;
    config.kappa = 0.0;
    const MeanVectors omega = mean_vectors(config, PhaseShift::normalized(psi));
    const UniformEigen eig = uniform_eigen(M, rho);
    const Vector inv_sqrt = eig.lambda.array().rsqrt();
    const Vector ux = inv_sqrt.asDiagonal() * (eig.Q.transpose() * omega.omega_x);
    const Vector uy = inv_sqrt.asDiagonal() * (eig.Q.transpose() * omega.omega_y);
    double v = 0.0;
    for (int j = 0; j < M - 1; ++j)
        v += eig.lambda(j) * (ux(j) * ux(j) + uy(j) * uy(j));
    return 0.5 * v;
}

double f_tilde(const Vector &psi, double phi)
{
    const double M = static_cast<double>(psi.size());
    return f_phase(psi, phi) + M * v_tilde(psi, phi) - M * M;
}

double f_tilde_averaged(const Vector &psi)
{
    require_antennas(psi, 1);
    const int M = static_cast<int>(psi.size());
    if (M == 1)
        return 0.0;
    const Vector J = j0_table(M + 1);
    double sum = 0.0;
    for (int j = 1; j <= M - 1; ++j)
    {
        const int first = M - j + 1;
        const int pivot = M - j;
        double inner = 0.0;
        for (int t = first; t <= M - 1; ++t)
        {
            inner += J(t) * std::cos(psi(t));
            for (int l = t + 1; l <= M - 1; ++l)
                inner += J(l - t) * std::cos(psi(t) - psi(l));
            inner -= j * J(t - pivot) * std::cos(psi(pivot) - psi(t));
        }
        inner -= j * J(pivot) * std::cos(psi(pivot));
        sum += inner / (static_cast<double>(j) * (j + 1.0));
    }
    return f_averaged(psi) - M + 2.0 * M * sum;
}

// ---- Energy distributions --------------------------------------------------

double EnergyDistribution::mean() const
{
    double m = offset;
    for (const auto &c : components)
        m += c.scale * c.law.mean();
    return m;
}

double EnergyDistribution::variance() const
{
    double v = 0.0;
    for (const auto &c : components)
        v += c.scale * c.scale * c.law.variance();
    return v;
}

double EnergyDistribution::cdf(double x) const
{
    const double z = x - offset;
    std::vector<ScaledChi2> active;
    for (const auto &c : components)
        if (c.scale > 0.0)
            active.push_back(c);

    if (active.empty())
        return z >= 0.0 ? 1.0 : 0.0;
    if (z <= 0.0)
        return 0.0;
    if (active.size() == 1)
        return chi2_cdf(active[0].law, z / active[0].scale);
    if (active.size() > 2)
        throw Error(Errc::OutOfRange, "cdf supports at most two mixture components");

    // Integrate over the component with fewer degrees of freedom; its density
    // is bounded for dof >= 2.
    const bool swap = active[1].law.dof < active[0].law.dof;
    const ScaledChi2 &inner = swap ? active[1] : active[0];
    const ScaledChi2 &outer = swap ? active[0] : active[1];

    const double u_max = z / inner.scale;
    const double tail = inner.law.mean() + 50.0 * std::sqrt(inner.law.variance()) + 50.0;
    const double hi = std::min(u_max, tail);
    const auto integrand = [&](double u) {
        const double rest = (z - inner.scale * u) / outer.scale;
        return chi2_pdf(inner.law, u) * chi2_cdf(outer.law, rest);
    };
    const double value = integrate(integrand, 0.0, hi, 1e-9, 8);
    return std::clamp(value, 0.0, 1.0);
}

EnergyDistribution dist_aa_ss(double beta, const PhaseInputs &in)
{
    const int M = in.antennas();
    if (M < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    if (!(in.r_sum >= 0.0) || !(beta > 0.0) || !(in.kappa >= 0.0))
        throw Error(Errc::OutOfRange, "invalid AA-SS distribution parameters");
    const double f = f_phase(in);
    EnergyDistribution out;
    if (in.r_sum == 0.0)
    {
        out.offset = beta * in.kappa * f / (M * (in.kappa + 1.0));
        return out;
    }
    const double scale = beta * in.r_sum / (2.0 * (in.kappa + 1.0) * M);
    out.components.push_back({scale, NoncentralChi2{2.0, 2.0 * in.kappa * f / in.r_sum}});
    return out;
}

EnergyDistribution dist_aa_is(double beta, const PhaseInputs &in)
{
    const int M = in.antennas();
    if (M == 1)
        return dist_aa_ss(beta, in);
    const double M2 = static_cast<double>(M) * M;
    if (!(in.r_sum >= 0.0 && in.r_sum <= M2 * (1.0 + 1e-12)) || !(beta > 0.0) || !(in.kappa >= 0.0))
        throw Error(Errc::OutOfRange, "invalid AA-IS distribution parameters");

    const double kappa = in.kappa;
    const double f = f_phase(in);
    const double vt = std::max(0.0, v_tilde(in));
    const double c = beta / (2.0 * M2 * (kappa + 1.0));
    const double spread = std::max(0.0, M2 - in.r_sum);

    EnergyDistribution out;
    if (in.r_sum > 0.0)
        out.components.push_back({c * in.r_sum, NoncentralChi2{2.0, 2.0 * kappa * f / in.r_sum}});
    else
        out.offset += c * 2.0 * kappa * f;

    if (spread > 1e-12 * M2)
        out.components.push_back(
            {c * spread / (M - 1.0), NoncentralChi2{2.0 * (M - 1.0), 2.0 * M * (M - 1.0) * kappa * vt / spread}});
    else
        out.offset += c * 2.0 * M * kappa * vt;
    return out;
}

double mean_aa_ss(double beta, int antennas, double kappa, double r_sum, double f)
{
    return beta / (antennas * (kappa + 1.0)) * (r_sum + kappa * f);
}

double variance_aa_ss(double beta, int antennas, double kappa, double r_sum, double f)
{
    const double d = (kappa + 1.0) * antennas;
    return beta * beta * r_sum / (d * d) * (r_sum + 2.0 * kappa * f);
}

double mean_aa_is(double beta, int antennas, double kappa, double f_tilde)
{
    const double M2 = static_cast<double>(antennas) * antennas;
    return beta * (1.0 + kappa * f_tilde / (M2 * (kappa + 1.0)));
}

double variance_aa_is_approx(double beta, int antennas, double kappa, double r_sum, double f)
{
    const double M = antennas;
    if (antennas == 1)
        return variance_aa_ss(beta, 1, kappa, r_sum, f);
    const double k1 = kappa + 1.0;
    const double bracket = M * M * M * (1.0 + 2.0 * kappa) + r_sum * r_sum - 2.0 * M * r_sum * k1 +
                           2.0 * kappa * (r_sum - M) * f;
    return beta * beta / (M * M * M * (M - 1.0) * k1 * k1) * bracket;
}

double outage_probability(const EnergyDistribution &dist, double xi0_mw)
{
    if (xi0_mw <= 0.0)
        return 0.0;
    return dist.cdf(xi0_mw);
}

double harvested_cdf(const EnergyDistribution &dist, const EhCurve &curve, double y_mw)
{
    if (y_mw < 0.0)
        return 0.0;
    if (y_mw >= curve.g_max)
        return 1.0;
    return dist.cdf(harvest_inverse(curve, y_mw));
}

// ---- Gains ----------------------------------------------------------------

double gain_mean_db(int antennas, double kappa, double r_sum)
{
    if (kappa == 0.0)
        return 0.0;
    return 10.0 * std::log10((r_sum + kappa * f_fit_max_energy(antennas)) /
                             (r_sum + kappa * f_fit_zero_shift(antennas)));
}

double gain_var_db(int antennas, double kappa, double r_sum)
{
    if (kappa == 0.0)
        return 0.0;
    return 10.0 * std::log10((r_sum + 2.0 * kappa * f_fit_max_energy(antennas)) /
                             (r_sum + 2.0 * kappa * f_fit_zero_shift(antennas)));
}

double gain_mean_db_lower_bound(int antennas, double kappa)
{
    return gain_mean_db(antennas, kappa, static_cast<double>(antennas) * antennas);
}

double gain_var_db_upper_bound(int antennas)
{
    return 5.0 * std::log10(static_cast<double>(antennas)) + 10.0 * std::log10(0.85 / 0.64);
}

// ---- Uniform correlation eigendecomposition ---------------------------------

UniformEigen uniform_eigen(int antennas, double rho)
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    const int M = antennas;
    if (M > 1 && !(rho >= -1.0 / (M - 1.0) - 1e-15 && rho <= 1.0))
        throw Error(Errc::OutOfRange, "uniform rho must lie in [-1/(M-1), 1]");

    UniformEigen out{Vector::Constant(M, 1.0 - rho), Matrix::Zero(M, M)};
    out.lambda(M - 1) = 1.0 + (M - 1.0) * rho;
    // Rows of Q^T: row j-1 (j = 1..M-1) puts -1 on element 0, j on element M-j and
    // -1 on elements M-j+1..M-1, normalized by sqrt(j (j + 1)). The last row is
    // the constant vector.
    for (int j = 1; j <= M - 1; ++j)
    {
        const double norm = std::sqrt(static_cast<double>(j) * (j + 1.0));
        out.Q(0, j - 1) = -1.0 / norm;
        out.Q(M - j, j - 1) = j / norm;
        for (int t = M - j + 1; t < M; ++t)
            out.Q(t, j - 1) = -1.0 / norm;
    }
    out.Q.col(M - 1).setConstant(1.0 / std::sqrt(static_cast<double>(M)));
    return out;
}

} // namespace wetbench
