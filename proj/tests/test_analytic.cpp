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

#include <Eigen/Eigenvalues>

#include "wetbench/analytic.hpp"
#include "wetbench/optimize.hpp"

using namespace wetbench;

namespace
{

// Periodic trapezoid rule for the phi average; spectrally accurate here.
template <typename F>
double phi_average(const F &f, int n = 4096)
{
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += f(two_pi * i / n);
    return s / n;
}

Vector random_psi(int M, RngStream &rng)
{
    Vector psi(M);
    for (int t = 0; t < M; ++t)
        psi(t) = rng.uniform(0.0, two_pi);
    psi(0) = 0.0;
    return psi;
}

// P[a X + b Y <= x] by Simpson over the density of X.
double convolve_cdf(const ScaledChi2 &a, const ScaledChi2 &b, double x)
{
    const double top = x / a.scale;
    const int n = 20000;
    const double h = top / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i)
    {
        const double u = i * h;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += w * chi2_pdf(a.law, u) * chi2_cdf(b.law, std::max(0.0, (x - a.scale * u) / b.scale));
    }
    return s * h / 3.0;
}

} // namespace

TEST_CASE("phase function examples")
{
    for (int M = 1; M <= 64; ++M)
        for (double phi : {0.0, 0.4, 2.0})
        {
            const Vector psi = -los_phases(M, phi);
            CHECK(std::abs(f_phase(psi, phi) - double(M) * M) <= 1e-10);
        }
    CHECK(std::abs(f_phase(Vector::Zero(2), pi / 2)) < 1e-12);
    Vector psi(2);
    psi << 0, pi;
    CHECK(f_phase(psi, pi / 2) == doctest::Approx(4.0));

    RngStream rng(1, 0);
    for (int i = 0; i < 200; ++i)
    {
        const int M = 1 + i % 12;
        const Vector p = random_psi(M, rng);
        const double phi = rng.uniform(0.0, two_pi);
        CHECK(std::abs(f_phase(p, phi) - f_phase_expanded(p, phi)) <= 1e-10 * M * M);
        CHECK(f_phase(p, phi) >= 0.0);
        CHECK(f_phase(p, phi) <= double(M) * M + 1e-9);
    }
}

TEST_CASE("phi-averaged phase function")
{
    CHECK(f_averaged(Vector::Zero(1)) == doctest::Approx(1.0));
    RngStream rng(2, 0);
    for (int M : {2, 3, 5, 8, 13})
        for (int k = 0; k < 4; ++k)
        {
            const Vector p = random_psi(M, rng);
            const double q = phi_average([&](double phi) { return f_phase(p, phi); });
            CHECK(std::abs(f_averaged(p) - q) <= 1e-6);
        }

    // M = 2: 2 + 2 J0(pi) cos psi1 is smallest at psi1 = 0 since J0(pi) < 0.
    Vector two(2);
    for (double s : {0.3, 1.0, 2.0, 3.0})
    {
        two << 0, s;
        CHECK(f_averaged(two) == doctest::Approx(2.0 + 2.0 * bessel_j0(pi) * std::cos(s)).epsilon(1e-12));
        CHECK(f_averaged(two) > f_averaged(Vector::Zero(2)));
    }

    for (int M : {2, 4, 8})
    {
        const double best = f_averaged(max_energy_shift(M).psi());
        CHECK(best == doctest::Approx(f_averaged_upper_bound(M)).epsilon(1e-12));
        for (int i = 0; i < 1000; ++i)
            CHECK(f_averaged(random_psi(M, rng)) <= best + 1e-12);
    }
}

TEST_CASE("curve fits of the averaged phase function")
{
    for (int M : {8, 16, 32, 64})
    {
        const double me = f_averaged(max_energy_shift(M).psi());
        const double zero = f_averaged(Vector::Zero(M));
        CHECK(std::abs(me / f_fit_max_energy(M) - 1.0) <= 0.03);
        CHECK(std::abs(zero / f_fit_zero_shift(M) - 1.0) <= 0.05);
    }
}

TEST_CASE("second AA-IS phase function")
{
    Vector psi = -los_phases(2, 0.9);
    CHECK(std::abs(v_tilde(psi, 0.9)) < 1e-12);
    CHECK(std::abs(v_tilde(Vector::Zero(3), 0.0)) < 1e-12);

    RngStream rng(4, 0);
    for (int i = 0; i < 300; ++i)
    {
        const int M = 2 + i % 15;
        const Vector p = random_psi(M, rng);
        const double phi = rng.uniform(0.0, two_pi);
        const double rho = rng.uniform(-1.0 / (M - 1), 0.95);
        const double v = v_tilde(p, phi);
        CHECK(std::abs(v - v_tilde_quadratic(p, phi, rho)) <= 1e-9 * std::max(1.0, v));
        CHECK(v >= -1e-9);
        CHECK(std::abs(f_tilde(p, phi)) <= 1e-9 * M * M);
    }
}

TEST_CASE("phi-averaged second phase function")
{
    CHECK(f_tilde_averaged(Vector::Zero(1)) == 0.0);
    for (int M = 2; M <= 16; ++M)
        CHECK(std::abs(f_tilde_averaged(Vector::Zero(M))) / (M * M) < 0.05);
    RngStream rng(5, 0);
    for (int k = 0; k < 5; ++k)
    {
        const Vector p = random_psi(6, rng);
        const double q = phi_average([&](double phi) { return f_tilde(p, phi); });
        CHECK(std::abs(f_tilde_averaged(p) - q) <= 1e-6);
    }
}

TEST_CASE("AA-SS distribution")
{
    RngStream rng(6, 0);
    for (int i = 0; i < 50; ++i)
    {
        const int M = 1 + i % 10;
        const double kappa = rng.uniform(0.0, 20.0);
        const double beta = rng.uniform(0.1, 5.0);
        const double rho = M > 1 ? rng.uniform(-1.0 / (M - 1) + 0.01, 1.0) : 0.0;
        const double R = r_sum(CorrelationModel{Uniform{rho}}, M);
        const PhaseInputs in{PhaseShift::normalized(random_psi(M, rng)), rng.uniform(0.0, two_pi), kappa, R};
        const double f = f_phase(in);
        const EnergyDistribution d = dist_aa_ss(beta, in);
        CHECK(d.mean() == doctest::Approx(beta * (R + kappa * f) / (M * (kappa + 1))).epsilon(1e-12));
        CHECK(d.variance() ==
              doctest::Approx(beta * beta * R * (R + 2 * kappa * f) / ((kappa + 1) * (kappa + 1) * M * M))
                  .epsilon(1e-12));
        CHECK(d.mean() == doctest::Approx(mean_aa_ss(beta, M, kappa, R, f)).epsilon(1e-12));
        CHECK(d.variance() == doctest::Approx(variance_aa_ss(beta, M, kappa, R, f)).epsilon(1e-12));
    }

    const PhaseInputs rayleigh{PhaseShift::zeros(4), 0.3, 0.0, 6.0};
    const EnergyDistribution e = dist_aa_ss(2.0, rayleigh);
    for (double x : {0.1, 1.0, 3.0, 10.0})
        CHECK(e.cdf(x) == doctest::Approx(1.0 - std::exp(-x * 4.0 / (2.0 * 6.0))).epsilon(1e-12));

    const PhaseInputs degenerate{PhaseShift::zeros(4), 0.0, 3.0, 0.0};
    const EnergyDistribution p = dist_aa_ss(1.0, degenerate);
    CHECK(p.components.empty());
    CHECK(p.offset == doctest::Approx(3.0 * 16.0 / (4.0 * 4.0)));
    CHECK(p.cdf(p.offset - 1e-9) == 0.0);
    CHECK(p.cdf(p.offset) == 1.0);
}

TEST_CASE("AA-IS distribution")
{
    RngStream rng(7, 0);
    for (int i = 0; i < 60; ++i)
    {
        const int M = 2 + i % 9;
        const double kappa = rng.uniform(0.0, 15.0);
        const double beta = rng.uniform(0.5, 3.0);
        const double R = rng.uniform(0.0, double(M) * M);
        const PhaseInputs in{PhaseShift::normalized(random_psi(M, rng)), rng.uniform(0.0, two_pi), kappa, R};
        const double f = f_phase(in);
        const double vt = v_tilde(in);
        const EnergyDistribution d = dist_aa_is(beta, in);
        REQUIRE(d.components.size() == 2);
        CHECK(d.components[0].scale == doctest::Approx(beta * R / (2 * M * M * (kappa + 1))));
        CHECK(d.components[0].law.dof == 2.0);
        CHECK(d.components[0].law.noncentrality == doctest::Approx(2 * kappa * f / R));
        CHECK(d.components[1].scale == doctest::Approx(beta * (M * M - R) / (2 * M * M * (kappa + 1) * (M - 1))));
        CHECK(d.components[1].law.dof == 2.0 * (M - 1));
        CHECK(d.components[1].law.noncentrality == doctest::Approx(2 * M * (M - 1) * kappa * vt / (M * M - R)));
        CHECK(d.mean() == doctest::Approx(mean_aa_is(beta, M, kappa, f_tilde(in.shift.psi(), in.phi))).epsilon(1e-9));
        CHECK(d.mean() == doctest::Approx(beta).epsilon(1e-9));
        CHECK(std::abs(d.variance() - variance_aa_is_approx(beta, M, kappa, R, f)) <= 1e-9 * d.variance());
    }

    SUBCASE("single antenna reduces to AA-SS")
    {
        const PhaseInputs in{PhaseShift::zeros(1), 0.2, 4.0, 1.0};
        const EnergyDistribution a = dist_aa_is(1.5, in);
        const EnergyDistribution b = dist_aa_ss(1.5, in);
        for (double x : {0.2, 1.0, 4.0})
            CHECK(a.cdf(x) == doctest::Approx(b.cdf(x)).epsilon(1e-14));
    }
    SUBCASE("full correlation drops the second component")
    {
        const PhaseInputs in{PhaseShift::zeros(4), 0.2, 4.0, 16.0};
        CHECK(dist_aa_is(1.0, in).components.size() == 1);
    }
    SUBCASE("two-component cdf matches a direct convolution")
    {
        const PhaseInputs in{PhaseShift::zeros(4), 0.7, 5.0, 7.0};
        const EnergyDistribution d = dist_aa_is(1.0, in);
        for (double x : {0.3, 0.8, 1.0, 1.6, 3.0})
            CHECK(std::abs(d.cdf(x) - convolve_cdf(d.components[0], d.components[1], x)) < 1e-8);
        CHECK(outage_probability(d, 0.0) == 0.0);
        CHECK(outage_probability(d, 1e6) == doctest::Approx(1.0));
        const EhCurve g;
        CHECK(harvested_cdf(d, g, harvest(g, 1.3)) == doctest::Approx(d.cdf(1.3)).epsilon(1e-9));
        CHECK(harvested_cdf(d, g, g.g_max) == 1.0);
    }
}

TEST_CASE("gains of the alternating shift")
{
    CHECK(gain_mean_db(8, 10.0, 8.0) >= 3.47);
    CHECK(gain_var_db(8, 10.0, 8.0) <= 5.75);
    CHECK(gain_mean_db_lower_bound(8, 10.0) == doctest::Approx(3.47).epsilon(0.005 / 3.47));
    CHECK(gain_var_db_upper_bound(8) == doctest::Approx(5.75).epsilon(0.005 / 5.75));
    CHECK(gain_mean_db(8, 0.0, 8.0) == 0.0);
    CHECK(gain_var_db(8, 0.0, 8.0) == 0.0);
    for (double R : {0.0, 4.0, 8.0, 30.0, 64.0})
    {
        CHECK(gain_mean_db(8, 10.0, R) >= gain_mean_db_lower_bound(8, 10.0) - 1e-12);
        CHECK(gain_var_db(8, 10.0, R) <= gain_var_db_upper_bound(8) + 1e-12);
    }
}

TEST_CASE("uniform correlation eigendecomposition")
{
    for (int M = 2; M <= 64; ++M)
        for (double rho : {-1.0 / (M - 1), 0.0, 0.3, 0.9, 1.0})
        {
            const UniformEigen e = uniform_eigen(M, rho);
            const Matrix R = build_correlation(Uniform{rho}, M);
            const Matrix I = Matrix::Identity(M, M);
            CHECK((e.Q.transpose() * e.Q - I).cwiseAbs().maxCoeff() <= 1e-10);
            CHECK((e.Q * e.lambda.asDiagonal() * e.Q.transpose() - R).cwiseAbs().maxCoeff() <= 1e-10);
            Eigen::SelfAdjointEigenSolver<Matrix> solver(R);
            Vector sorted = e.lambda;
            std::sort(sorted.data(), sorted.data() + M);
            CHECK((sorted - solver.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-10);
        }
    const UniformEigen e = uniform_eigen(4, 0.5);
    CHECK(e.lambda(0) == doctest::Approx(0.5));
    CHECK(e.lambda(3) == doctest::Approx(2.5));
    CHECK(uniform_eigen(5, 0.0).lambda.isOnes(1e-15));
    CHECK_THROWS_AS(uniform_eigen(4, -0.5), Error);
}
