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

#include "wetbench/channel.hpp"

#include <cmath>
#include <string>

namespace wetbench
{

namespace
{

constexpr double psd_tolerance = 1e-10;

void validate_custom(const Matrix &R, int antennas)
{
    if (R.rows() != antennas || R.cols() != antennas)
        throw Error(Errc::OutOfRange, "custom correlation must be " + std::to_string(antennas) + "x" +
                                          std::to_string(antennas));
    if (!R.allFinite())
        throw Error(Errc::OutOfRange, "custom correlation has non-finite entries");
    if ((R - R.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw Error(Errc::NotPositiveSemidefinite, "custom correlation is not symmetric");
    if ((R.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12)
        throw Error(Errc::OutOfRange, "custom correlation must have a unit diagonal");
    if (min_eigenvalue(R) < -psd_tolerance)
        throw Error(Errc::NotPositiveSemidefinite, "custom correlation has a negative eigenvalue");
}

} // namespace

Matrix build_correlation(const CorrelationModel &model, int antennas)
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "antenna count must be >= 1");
    const Eigen::Index M = antennas;

    if (const auto *e = std::get_if<Exponential>(&model))
    {
        if (!(e->tau >= 0.0 && e->tau < 1.0))
            throw Error(Errc::OutOfRange, "exponential tau must lie in [0, 1)");
        Matrix R(M, M);
        for (Eigen::Index i = 0; i < M; ++i)
            for (Eigen::Index j = 0; j < M; ++j)
                R(i, j) = std::pow(e->tau, static_cast<double>(std::abs(i - j)));
        return R;
    }
    if (const auto *u = std::get_if<Uniform>(&model))
    {
        const double lower = M > 1 ? -1.0 / static_cast<double>(M - 1) : -1.0;
        if (!(u->rho >= lower - 1e-15 && u->rho <= 1.0))
            throw Error(Errc::OutOfRange, "uniform rho must lie in [-1/(M-1), 1]");
        Matrix R = Matrix::Constant(M, M, u->rho);
        R.diagonal().setOnes();
        return R;
    }
    const auto &c = std::get<Custom>(model);
    validate_custom(c.R, antennas);
    return c.R;
}

double r_sum(const CorrelationModel &model, int antennas)
{
    const double M = antennas;
    if (const auto *e = std::get_if<Exponential>(&model))
    {
        const double t = e->tau;
        if (t == 0.0)
            return M;
        return (M * (1.0 - t * t) - 2.0 * t * (1.0 - std::pow(t, M))) / ((1.0 - t) * (1.0 - t));
    }
    if (const auto *u = std::get_if<Uniform>(&model))
        return M * (1.0 + (M - 1.0) * u->rho);
    return r_sum(std::get<Custom>(model).R);
}

double min_eigenvalue(const Matrix &R)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(R, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Matrix spectral_sqrt(const Matrix &R)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(R);
    if (solver.info() != Eigen::Success)
        throw Error(Errc::FactorizationFailure, "eigendecomposition did not converge");
    Vector lambda = solver.eigenvalues();
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
    {
        if (lambda(i) < -psd_tolerance)
            throw Error(Errc::FactorizationFailure, "matrix is indefinite beyond tolerance");
        lambda(i) = lambda(i) < 0.0 ? 0.0 : std::sqrt(lambda(i));
    }
    const Matrix &Q = solver.eigenvectors();
    return Q * lambda.asDiagonal() * Q.transpose();
}

void ArrayConfig::validate() const
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "antenna count must be >= 1");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw Error(Errc::OutOfRange, "kappa must be finite and >= 0");
    if (!(phi >= 0.0 && phi <= two_pi))
        throw Error(Errc::OutOfRange, "phi must lie in [0, 2pi]");
    if (!std::isfinite(phi0))
        throw Error(Errc::OutOfRange, "phi0 must be finite");
}

PhaseShift::PhaseShift(Vector psi) : psi_(std::move(psi))
{
    if (psi_.size() < 1)
        throw Error(Errc::OutOfRange, "phase shift needs at least one antenna");
    if (psi_(0) != 0.0)
        throw Error(Errc::OutOfRange, "phase shift must have psi[0] == 0");
    if (!psi_.allFinite())
        throw Error(Errc::OutOfRange, "phase shift has non-finite entries");
}

PhaseShift PhaseShift::normalized(const Vector &psi)
{
    Vector out = psi.array() - psi(0);
    for (Eigen::Index t = 0; t < out.size(); ++t)
    {
        double w = std::fmod(out(t), two_pi);
        if (w < 0.0)
            w += two_pi;
        out(t) = w;
    }
    out(0) = 0.0;
    return PhaseShift(std::move(out));
}

Vector los_phases(int antennas, double phi)
{
    Vector Phi(antennas);
    const double s = std::sin(phi);
    for (int t = 0; t < antennas; ++t)
        Phi(t) = -static_cast<double>(t) * pi * s;
    return Phi;
}

Vector total_phases(const ArrayConfig &config, const PhaseShift &shift)
{
    if (shift.size() != config.antennas)
        throw Error(Errc::OutOfRange, "phase shift length does not match antenna count");
    return los_phases(config) + shift.psi();
}

MeanVectors mean_vectors(const ArrayConfig &config, const PhaseShift &shift)
{
    const Vector theta = total_phases(config, shift);
    MeanVectors out{Vector(theta.size()), Vector(theta.size())};
    for (Eigen::Index t = 0; t < theta.size(); ++t)
    {
        if (config.phi0 == pi / 4.0)
        {
            // Exact form used throughout the analysis; keeps omega[0] == 1 bit-exact.
            const double c = std::cos(theta(t));
            const double s = std::sin(theta(t));
            out.omega_x(t) = c - s;
            out.omega_y(t) = c + s;
        }
        else
        {
            out.omega_x(t) = std::sqrt(2.0) * std::cos(theta(t) + config.phi0);
            out.omega_y(t) = std::sqrt(2.0) * std::sin(theta(t) + config.phi0);
        }
    }
    return out;
}

ChannelSampler::ChannelSampler(const ArrayConfig &config, const PhaseShift &shift)
    : R_(build_correlation(config.correlation, config.antennas))
{
    init(config, shift);
}

ChannelSampler::ChannelSampler(const ArrayConfig &config, const PhaseShift &shift, const Matrix &R) : R_(R)
{
    init(config, shift);
}

void ChannelSampler::init(const ArrayConfig &config, const PhaseShift &shift)
{
    config.validate();
    if (R_.rows() != config.antennas || R_.cols() != config.antennas)
        throw Error(Errc::OutOfRange, "correlation matrix size does not match antenna count");
    const double noise = 1.0 / std::sqrt(2.0 * (config.kappa + 1.0));
    white_ = R_.isIdentity(0.0);
    noise_ = noise;
    if (!white_)
        factor_ = spectral_sqrt(R_) * noise;

    const MeanVectors omega = mean_vectors(config, shift);
    const double los = std::sqrt(config.kappa / (2.0 * (config.kappa + 1.0)));
    mean_x_ = los * omega.omega_x;
    mean_y_ = los * omega.omega_y;
    psi_ = shift.psi();
    los_ = los;
    phi0_ = config.phi0;
}

void ChannelSampler::sample_into_at(double phi, RngStream &rng, Vector &hx, Vector &hy, Vector &scratch) const
{
    const Eigen::Index M = mean_x_.size();
    if (white_)
    {
        for (Eigen::Index t = 0; t < M; ++t)
            hx(t) = noise_ * rng.normal();
        for (Eigen::Index t = 0; t < M; ++t)
            hy(t) = noise_ * rng.normal();
    }
    else
    {
        scratch.resize(M);
        for (Eigen::Index t = 0; t < M; ++t)
            scratch(t) = rng.normal();
        hx.noalias() = factor_ * scratch;
        for (Eigen::Index t = 0; t < M; ++t)
            scratch(t) = rng.normal();
        hy.noalias() = factor_ * scratch;
    }
    if (los_ == 0.0)
        return;
    const double s = std::sin(phi);
    const bool quarter = phi0_ == pi / 4.0;
    for (Eigen::Index t = 0; t < M; ++t)
    {
        const double theta = psi_(t) - static_cast<double>(t) * pi * s;
        if (quarter)
        {
            const double c = std::cos(theta);
            const double sn = std::sin(theta);
            hx(t) += los_ * (c - sn);
            hy(t) += los_ * (c + sn);
        }
        else
        {
            hx(t) += los_ * std::sqrt(2.0) * std::cos(theta + phi0_);
            hy(t) += los_ * std::sqrt(2.0) * std::sin(theta + phi0_);
        }
    }
}

void ChannelSampler::sample_into(RngStream &rng, Vector &hx, Vector &hy, Vector &scratch) const
{
    const Eigen::Index M = mean_x_.size();
    scratch.resize(M);
    if (white_)
    {
        for (Eigen::Index t = 0; t < M; ++t)
            hx(t) = mean_x_(t) + noise_ * rng.normal();
        for (Eigen::Index t = 0; t < M; ++t)
            hy(t) = mean_y_(t) + noise_ * rng.normal();
        return;
    }
    for (Eigen::Index t = 0; t < M; ++t)
        scratch(t) = rng.normal();
    hx.noalias() = factor_ * scratch;
    hx += mean_x_;
    for (Eigen::Index t = 0; t < M; ++t)
        scratch(t) = rng.normal();
    hy.noalias() = factor_ * scratch;
    hy += mean_y_;
}

ChannelSample ChannelSampler::sample(RngStream &rng) const
{
    ChannelSample out{Vector(mean_x_.size()), Vector(mean_x_.size())};
    Vector scratch;
    sample_into(rng, out.hx, out.hy, scratch);
    return out;
}

ChannelSample sample_channel(const ArrayConfig &config, const PhaseShift &shift, RngStream &rng)
{
    return ChannelSampler(config, shift).sample(rng);
}

} // namespace wetbench
