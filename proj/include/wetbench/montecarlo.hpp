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

#ifndef WETBENCH_MONTECARLO_HPP
#define WETBENCH_MONTECARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "wetbench/analytic.hpp"
#include "wetbench/channel.hpp"
#include "wetbench/harvester.hpp"
#include "wetbench/schemes.hpp"

namespace wetbench
{

/// Samples per chunk. Each chunk draws from its own stream keyed by
/// (seed, chunk index), so results do not depend on the worker count.
inline constexpr long chunk_size = 8192;

enum class PhiPolicy
{
    Fixed,                    // array.phi for every sample
    UniformRandomPerSample    // phi ~ U[0, 2pi) per sample
};

/// Uniform-bin histogram with normalized mass.
struct Histogram
{
    Vector edges;   // m + 1 ascending values
    Vector mass;    // m non-negative values summing to 1

    Eigen::Index bins() const noexcept { return mass.size(); }
};

struct HistogramSpec
{
    int bins = 240;
    double lo = 0.0;
    double hi = 6.0;

    void validate() const;
};

struct ExperimentSpec
{
    ArrayConfig array;
    SchemeConfig scheme;
    EhCurve curve;
    long samples = 200000;
    std::uint64_t seed = 1;
    PhiPolicy phi_policy = PhiPolicy::Fixed;
    bool outage_on_harvested = false;          // compare g(rf) instead of rf with xi0
    std::optional<Matrix> correlation;         // overrides array.correlation
    HistogramSpec rf_histogram;
    HistogramSpec harvested_histogram{240, 0.0, 2.0};
    int threads = 1;

    void validate() const;
};

struct EnsembleStats
{
    long samples = 0;
    double rf_mean = 0.0;
    double rf_variance = 0.0;            // unbiased
    double harvested_mean = 0.0;
    double harvested_variance = 0.0;     // unbiased
    double outage = 0.0;
    Histogram rf_histogram;
    Histogram harvested_histogram;

    double rf_standard_error() const { return std::sqrt(rf_variance / static_cast<double>(samples)); }
};

/// Simulates the scheme over independent channel blocks.
EnsembleStats run(const ExperimentSpec &spec);

/// Per-sample incident RF energies in sample order; same streams as run().
std::vector<double> simulate_rf(const ExperimentSpec &spec);

/// Bins samples into m uniform bins on [lo, hi]; values outside the range
/// are counted in the first or last bin.
Histogram histogram_estimate(const std::vector<double> &samples, int bins, double lo, double hi);

/// Exact bin masses of a distribution from its cdf at the edges; mass
/// outside [lo, hi] is folded into the end bins like histogram_estimate.
Histogram histogram_of(const EnergyDistribution &dist, int bins, double lo, double hi);

struct BhattacharyyaResult
{
    double distance = 0.0;
    double coefficient = 1.0;
    bool disjoint = false;   // coefficient 0; distance saturated
};

inline constexpr double bhattacharyya_saturation = 1e9;

/// d = -ln sum sqrt(p_i q_i). Histograms must share edges.
BhattacharyyaResult bhattacharyya(const Histogram &p, const Histogram &q);

/// Random correlation matrix with the given entry sum.
///
/// A random Gram matrix of unit vectors is blended convexly with the all-ones
/// matrix (to raise R_sum) or with the uniform rho = -1/(M-1) matrix (to lower
/// it). R_sum is linear in the blend weight, so the weight is solved directly
/// and both endpoints being PSD keeps the blend PSD.
Matrix random_correlation_matched(int antennas, double r_sum_target, std::uint64_t seed, int gram_dim = 0);

/// Random Gram correlation matrix of M unit vectors in gram_dim dimensions
/// (gram_dim = 0 picks M).
Matrix random_gram_correlation(int antennas, std::uint64_t seed, int gram_dim = 0);

enum class TargetPolicy
{
    Gram,      // R* is a random Gram correlation, R_sum taken from it
    Uniform    // R_sum drawn uniformly on [0, M^2], R* matched to it
};

struct ValidationSpec
{
    int antennas = 4;
    double kappa = 0.0;
    double phi = 0.0;
    Vector psi;                  // empty means zeros
    int trials = 100;
    long samples = 200000;
    double beta = 1.0;
    HistogramSpec histogram;
    TargetPolicy target = TargetPolicy::Gram;
    int gram_dim = 0;
    bool analytic_reference = false;   // also evaluate p1 from the closed form
    std::uint64_t seed = 1;
    int threads = 1;

    void validate() const;
};

struct ValidationResult
{
    double mean_distance = 0.0;            // p1 simulated under the matched uniform correlation
    double max_distance = 0.0;
    double mean_distance_analytic = 0.0;   // p1 from the closed form, when requested
    std::vector<double> distances;
    std::vector<double> r_sums;
};

/// Average Bhattacharyya distance between AA-IS RF energy under random
/// correlation matrices and under the uniform correlation with equal R_sum.
ValidationResult validate_theorem2(const ValidationSpec &spec);

/// Kolmogorov-Smirnov statistic sup |F_n - F| of a sample against a cdf.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, const Cdf &cdf)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double F = cdf(samples[i]);
        d = std::max(d, std::max(F - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - F));
    }
    return d;
}

/// Upper bound on the KS statistic from cdf values on a uniform grid of
/// `grid` points over the sample range; a monotone cdf is bracketed by its
/// values at the neighbouring grid nodes.
template <typename Cdf>
double ks_statistic_bound(std::vector<double> samples, const Cdf &cdf, int grid = 2049)
{
    std::sort(samples.begin(), samples.end());
    if (samples.empty())
        return 0.0;
    const double lo = samples.front();
    const double hi = samples.back();
    if (!(hi > lo) || grid < 2)
        return ks_statistic(std::move(samples), cdf);
    std::vector<double> F(static_cast<std::size_t>(grid));
    const double h = (hi - lo) / static_cast<double>(grid - 1);
    for (int k = 0; k < grid; ++k)
        F[static_cast<std::size_t>(k)] = cdf(k + 1 == grid ? hi : lo + h * k);
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const auto k = std::min(static_cast<std::size_t>((samples[i] - lo) / h), F.size() - 2);
        const double below = F[k];
        const double above = F[k + 1];
        d = std::max(d, std::max(above - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - below));
    }
    return d;
}

/// Asymptotic 1% critical value of the one-sample KS statistic.
inline double ks_critical_1pct(long n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

} // namespace wetbench

#endif
