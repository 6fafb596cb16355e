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

#ifndef WETBENCH_CHANNEL_HPP
#define WETBENCH_CHANNEL_HPP

#include <Eigen/Dense>

#include <numbers>
#include <variant>

#include "wetbench/error.hpp"
#include "wetbench/rng.hpp"

namespace wetbench
{

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// ---- Spatial correlation -------------------------------------------------

/// R(i,j) = tau^|i-j|, tau in [0,1).
struct Exponential
{
    double tau = 0.0;
};

/// R(i,j) = rho for i != j, rho in [-1/(M-1), 1].
struct Uniform
{
    double rho = 0.0;
};

/// User supplied real symmetric PSD matrix with unit diagonal.
struct Custom
{
    Matrix R;
};

using CorrelationModel = std::variant<Exponential, Uniform, Custom>;

/// Builds and validates the M x M correlation matrix of a model.
Matrix build_correlation(const CorrelationModel &model, int antennas);

/// Sum of all entries, 1^T R 1.
template <typename Derived>
double r_sum(const Eigen::MatrixBase<Derived> &R)
{
    return R.sum();
}

/// Closed-form R_sum for the exponential and uniform models; the Custom model
/// falls back to the entry sum.
double r_sum(const CorrelationModel &model, int antennas);

/// Symmetric square root S of a PSD matrix, S * S = R.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero so singular matrices such
/// as the fully correlated rho = 1 case are supported; anything more
/// negative throws FactorizationFailure.
Matrix spectral_sqrt(const Matrix &R);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Matrix &R);

// ---- Array geometry and channel statistics --------------------------------

struct ArrayConfig
{
    int antennas = 8;                       // M
    double kappa = 5.0;                     // Rician factor
    double phi = 0.0;                       // azimuth relative to boresight, rad
    double phi0 = std::numbers::pi / 4.0;   // initial LOS phase, rad
    CorrelationModel correlation = Exponential{0.3};

    void validate() const;
};

/// Preventive per-antenna phases, psi[0] == 0.
class PhaseShift
{
public:
    PhaseShift() = default;
    explicit PhaseShift(Vector psi);

    static PhaseShift zeros(int antennas) { return PhaseShift(Vector::Zero(antennas)); }

    /// Subtracts psi[0] from every entry and wraps into [0, 2pi).
    static PhaseShift normalized(const Vector &psi);

    const Vector &psi() const noexcept { return psi_; }
    Eigen::Index size() const noexcept { return psi_.size(); }
    double operator[](Eigen::Index t) const { return psi_(t); }

private:
    Vector psi_;
};

/// Real and imaginary Gaussian parts of one equivalent channel realization.
struct ChannelSample
{
    Vector hx;
    Vector hy;

    Eigen::Index antennas() const noexcept { return hx.size(); }
};

/// Mean LOS phase of each element relative to the first, -t*pi*sin(phi).
Vector los_phases(int antennas, double phi);
inline Vector los_phases(const ArrayConfig &config) { return los_phases(config.antennas, config.phi); }

/// Total LOS phase psi_t + Phi_t per antenna.
Vector total_phases(const ArrayConfig &config, const PhaseShift &shift);

struct MeanVectors
{
    Vector omega_x;
    Vector omega_y;
};

/// Normalized LOS mean directions of the real and imaginary parts.
///
/// omega_x[t] = sqrt(2) cos(psi_t + Phi_t + phi0) and omega_y[t] =
/// sqrt(2) sin(psi_t + Phi_t + phi0). At phi0 = pi/4 this is
/// cos(.) - sin(.) and cos(.) + sin(.), with omega[0] = 1.
MeanVectors mean_vectors(const ArrayConfig &config, const PhaseShift &shift);

/// Draws correlated Rician channel realizations for a fixed configuration.
///
/// hx ~ N(sqrt(kappa / (2 (kappa + 1))) omega_x, R / (2 (kappa + 1))), same for
/// hy with omega_y, hx and hy independent.
class ChannelSampler
{
public:
    ChannelSampler(const ArrayConfig &config, const PhaseShift &shift);
    ChannelSampler(const ArrayConfig &config, const PhaseShift &shift, const Matrix &R);

    int antennas() const noexcept { return static_cast<int>(mean_x_.size()); }
    const Vector &mean_x() const noexcept { return mean_x_; }
    const Vector &mean_y() const noexcept { return mean_y_; }
    const Matrix &correlation() const noexcept { return R_; }

    ChannelSample sample(RngStream &rng) const;

    /// Allocation-free variant; hx and hy must already have M entries.
    void sample_into(RngStream &rng, Vector &hx, Vector &hy, Vector &scratch) const;

    /// Same draw with the LOS mean re-evaluated at azimuth phi instead of the
    /// configured one.
    void sample_into_at(double phi, RngStream &rng, Vector &hx, Vector &hy, Vector &scratch) const;

private:
    void init(const ArrayConfig &config, const PhaseShift &shift);

    Matrix R_;
    Matrix factor_;     // spectral square root scaled by 1/sqrt(2(kappa+1))
    Vector mean_x_;
    Vector mean_y_;
    Vector psi_;
    double los_ = 0.0;
    double phi0_ = 0.0;
    double noise_ = 0.0;
    bool white_ = false;   // R == I, skip the matrix product
};

ChannelSample sample_channel(const ArrayConfig &config, const PhaseShift &shift, RngStream &rng);

} // namespace wetbench

#endif
