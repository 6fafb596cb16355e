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

#ifndef WETBENCH_SCHEMES_HPP
#define WETBENCH_SCHEMES_HPP

#include <Eigen/Dense>

#include <optional>
#include <string_view>

#include "wetbench/channel.hpp"
#include "wetbench/harvester.hpp"

namespace wetbench
{

enum class Scheme
{
    AaSs,   // all antennas, same signal
    AaIs,   // all antennas, independent signals
    Sa      // switching antennas, one at a time at full power
};

std::string_view scheme_name(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

struct SchemeConfig
{
    Scheme scheme = Scheme::AaSs;
    double beta = 1.0;   // average single-antenna RF power at the device, mW
    PhaseShift shift;

    void validate(int antennas) const;
};

/// (beta / M) |1^T h|^2 = (beta / M) ((sum hx)^2 + (sum hy)^2)
template <typename DX, typename DY>
double rf_aa_ss(const Eigen::MatrixBase<DX> &hx, const Eigen::MatrixBase<DY> &hy, double beta)
{
    const double sx = hx.sum();
    const double sy = hy.sum();
    return beta / static_cast<double>(hx.size()) * (sx * sx + sy * sy);
}

/// (beta / M) ||h||^2
template <typename DX, typename DY>
double rf_aa_is(const Eigen::MatrixBase<DX> &hx, const Eigen::MatrixBase<DY> &hy, double beta)
{
    return beta / static_cast<double>(hx.size()) * (hx.squaredNorm() + hy.squaredNorm());
}

/// Incident power of each SA sub-block, beta |h_j|^2.
template <typename DX, typename DY>
Vector rf_sa_subblocks(const Eigen::MatrixBase<DX> &hx, const Eigen::MatrixBase<DY> &hy, double beta)
{
    return beta * (hx.array().square() + hy.array().square()).matrix();
}

inline double rf_aa_ss(const ChannelSample &s, double beta) { return rf_aa_ss(s.hx, s.hy, beta); }
inline double rf_aa_is(const ChannelSample &s, double beta) { return rf_aa_is(s.hx, s.hy, beta); }
inline Vector rf_sa_subblocks(const ChannelSample &s, double beta) { return rf_sa_subblocks(s.hx, s.hy, beta); }

/// Incident RF energy of one block. For SA this is the block average, which
/// equals the AA-IS value.
double rf_energy(Scheme scheme, const ChannelSample &sample, double beta);

/// Harvested energy of one block: g(rf) for AA-SS and AA-IS, the mean of
/// g over the M sub-blocks for SA.
template <typename Curve>
double harvested(Scheme scheme, double beta, const Curve &curve, const ChannelSample &sample)
{
    switch (scheme)
    {
    case Scheme::AaSs: return harvest(curve, rf_aa_ss(sample, beta));
    case Scheme::AaIs: return harvest(curve, rf_aa_is(sample, beta));
    case Scheme::Sa:
    {
        const Eigen::Index M = sample.antennas();
        double total = 0.0;
        for (Eigen::Index j = 0; j < M; ++j)
            total += harvest(curve, beta * (sample.hx(j) * sample.hx(j) + sample.hy(j) * sample.hy(j)));
        return total / static_cast<double>(M);
    }
    }
    return 0.0;
}

template <typename Curve>
double harvested(const SchemeConfig &config, const Curve &curve, const ChannelSample &sample)
{
    return harvested(config.scheme, config.beta, curve, sample);
}

enum class JensenOrder
{
    SaDominates,     // every sub-block power <= b: g convex, SA harvests at least as much
    AaIsDominates,   // every sub-block power >= b: g concave, AA-IS harvests at least as much
    Indeterminate
};

std::string_view jensen_order_name(JensenOrder order) noexcept;

/// Classifies a realization by where its sub-block powers sit relative to
/// the inflection point. The all-equal-to-b boundary satisfies both branches
/// and resolves to AaIsDominates.
JensenOrder jensen_order(const ChannelSample &sample, double beta, const EhCurve &curve);

} // namespace wetbench

#endif
