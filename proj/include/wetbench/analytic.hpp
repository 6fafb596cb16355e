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

#ifndef WETBENCH_ANALYTIC_HPP
#define WETBENCH_ANALYTIC_HPP

#include <cmath>
#include <vector>

#include "wetbench/channel.hpp"
#include "wetbench/chi2.hpp"
#include "wetbench/harvester.hpp"

namespace wetbench
{

// ---- Phase functions -------------------------------------------------------

/// Inputs shared by the phase functions and the closed-form distributions.
struct PhaseInputs
{
    PhaseShift shift;
    double phi = 0.0;
    double kappa = 0.0;
    double r_sum = 0.0;

    int antennas() const noexcept { return static_cast<int>(shift.size()); }
};

/// Squared magnitude of the phased LOS sum, f = v1^2 + v2^2 with
/// v1 = 1 + sum cos(psi_t + Phi_t) and v2 = sum sin(psi_t + Phi_t).
double f_phase(const Vector &psi, double phi);
inline double f_phase(const PhaseInputs &in) { return f_phase(in.shift.psi(), in.phi); }

/// Same quantity through the expanded cosine form
/// M + 2 sum_t cos(theta_t) + 2 sum_{t<l} cos(theta_t - theta_l).
double f_phase_expanded(const Vector &psi, double phi);

/// f averaged over phi uniform on [0, 2pi]:
/// M + 2 sum_t J0(t pi) cos psi_t + 2 sum_{t<l} J0((l - t) pi) cos(psi_t - psi_l).
double f_averaged(const Vector &psi);

/// Upper bound of f_averaged over all psi; attained by alternating pi shifts.
double f_averaged_upper_bound(int antennas);

/// Phase function of the second AA-IS mixture component (the closed form
/// with nested cosine sums over j = 1..M-1). Needs M >= 2.
double v_tilde(const Vector &psi, double phi);
inline double v_tilde(const PhaseInputs &in) { return v_tilde(in.shift.psi(), in.phi); }

/// v_tilde through the eigenbasis quadratic form
/// 1/2 sum_{j<M} lambda_j (u_{x,j}^2 + u_{y,j}^2), u = Lambda^{-1/2} Q^T omega,
/// using the uniform-correlation eigenvectors for the given rho (< 1).
double v_tilde_quadratic(const Vector &psi, double phi, double rho = 0.0);

/// f + M v_tilde - M^2; governs the AA-IS mean perturbation.
double f_tilde(const Vector &psi, double phi);

/// f_tilde averaged over phi uniform on [0, 2pi], via J0 terms.
double f_tilde_averaged(const Vector &psi);

// ---- Energy distributions --------------------------------------------------

struct ScaledChi2
{
    double scale = 1.0;   // mW
    NoncentralChi2 law;
};

/// offset + sum_i scale_i X_i with independent X_i ~ chi2(m_i, n_i).
///
/// The offset carries the deterministic part of degenerate correlation
/// cases (R_sum = 0 or R_sum = M^2).
struct EnergyDistribution
{
    std::vector<ScaledChi2> components;
    double offset = 0.0;

    double mean() const;
    double variance() const;

    /// P[X <= x]. Two components are convolved numerically with adaptive
    /// Gauss-Legendre panels over the first component (1e-9 abs target).
    double cdf(double x) const;
};

/// RF energy under AA-SS: scale beta R_sum / (2 (kappa + 1) M), chi2(2, 2 kappa f / R_sum).
/// R_sum = 0 yields the point mass beta kappa f / (M (kappa + 1)).
EnergyDistribution dist_aa_ss(double beta, const PhaseInputs &in);

/// Approximate RF energy under AA-IS, a two-component mixture driven by
/// R_sum, f and v_tilde. Exact under uniform correlation. M = 1 falls back to
/// the AA-SS law; R_sum = M^2 drops the second component.
EnergyDistribution dist_aa_is(double beta, const PhaseInputs &in);

/// Closed-form AA-SS moments.
double mean_aa_ss(double beta, int antennas, double kappa, double r_sum, double f);
double variance_aa_ss(double beta, int antennas, double kappa, double r_sum, double f);

/// AA-IS mean beta (1 + kappa f_tilde / (M^2 (kappa + 1))).
double mean_aa_is(double beta, int antennas, double kappa, double f_tilde);

/// AA-IS variance written through f alone (uses f_tilde ~ 0).
double variance_aa_is_approx(double beta, int antennas, double kappa, double r_sum, double f);

/// P[RF energy < xi0].
double outage_probability(const EnergyDistribution &dist, double xi0_mw);

/// P[g(RF) <= y] for the monotone harvester g.
double harvested_cdf(const EnergyDistribution &dist, const EhCurve &curve, double y_mw);

// ---- Gains of the max-energy shift over no shift -----------------------------

/// Curve fits of f_averaged: max-energy shift and psi = 0.
inline double f_fit_max_energy(int antennas) { return 0.85 * std::pow(antennas, 1.5); }
inline double f_fit_zero_shift(int antennas) { return 0.64 * antennas; }

/// dB gain in mean AA-SS RF energy of the alternating-pi shift over psi = 0.
double gain_mean_db(int antennas, double kappa, double r_sum);

/// dB increase in AA-SS RF variance of the same comparison.
double gain_var_db(int antennas, double kappa, double r_sum);

/// gain_mean_db at R_sum = M^2, its lower bound over R_sum.
double gain_mean_db_lower_bound(int antennas, double kappa);

/// gain_var_db at R_sum = 0, its upper bound: 5 log10(M) + 1.23.
double gain_var_db_upper_bound(int antennas);

// ---- Uniform correlation eigendecomposition ---------------------------------

struct UniformEigen
{
    Vector lambda;   // 1 - rho (M - 1 times), then 1 + (M - 1) rho
    Matrix Q;        // orthonormal eigenvectors as columns, R = Q diag(lambda) Q^T
};

/// Closed-form eigendecomposition of the uniform correlation matrix. Column
/// j < M-1 is a Helmert-style contrast; the last column is 1/sqrt(M).
UniformEigen uniform_eigen(int antennas, double rho);

} // namespace wetbench

#endif
