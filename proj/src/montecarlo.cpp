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

#include "wetbench/montecarlo.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace wetbench
{

namespace
{

/// Runs fn(chunk, begin, end) for every chunk of [0, samples) and returns the
/// per-chunk results in chunk order.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(long samples, int threads, const Fn &fn)
{
    const long chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<Result> results(static_cast<std::size_t>(chunks));
    auto body = [&](long c) {
        const long begin = c * chunk_size;
        const long end = std::min(samples, begin + chunk_size);
        results[static_cast<std::size_t>(c)] = fn(c, begin, end);
    };

    const int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, chunks)));
    if (workers == 1)
    {
        for (long c = 0; c < chunks; ++c)
            body(c);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try
            {
                for (long c = next++; c < chunks; c = next++)
                    body(c);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

struct Moments
{
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    static Moments merge(const Moments &a, const Moments &b)
    {
        if (a.n == 0.0)
            return b;
        if (b.n == 0.0)
            return a;
        Moments out;
        out.n = a.n + b.n;
        const double d = b.mean - a.mean;
        out.mean = a.mean + d * b.n / out.n;
        out.m2 = a.m2 + b.m2 + d * d * a.n * b.n / out.n;
        return out;
    }

    double variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }
};

/// Pairwise reduction in a fixed tree shape.
template <typename T, typename Merge>
T reduce_pairwise(const std::vector<T> &items, std::size_t lo, std::size_t hi, const Merge &merge)
{
    if (hi - lo == 1)
        return items[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(reduce_pairwise(items, lo, mid, merge), reduce_pairwise(items, mid, hi, merge));
}

struct Binning
{
    int bins;
    double lo;
    double width;

    explicit Binning(const HistogramSpec &s) : bins(s.bins), lo(s.lo), width((s.hi - s.lo) / s.bins) {}

    int index(double x) const
    {
        const double pos = (x - lo) / width;
        if (!(pos >= 0.0))
            return 0;
        if (pos >= bins)
            return bins - 1;
        return static_cast<int>(pos);
    }
};

Histogram make_histogram(const std::vector<long> &counts, const HistogramSpec &spec, double total)
{
    Histogram h{Vector::LinSpaced(spec.bins + 1, spec.lo, spec.hi), Vector(spec.bins)};
    for (int i = 0; i < spec.bins; ++i)
        h.mass(i) = static_cast<double>(counts[static_cast<std::size_t>(i)]) / total;
    return h;
}

struct ChunkStats
{
    Moments rf;
    Moments harvested;
    long outages = 0;
    std::vector<long> rf_counts;
    std::vector<long> harvested_counts;
};

Matrix correlation_of(const ExperimentSpec &spec)
{
    return spec.correlation ? *spec.correlation : build_correlation(spec.array.correlation, spec.array.antennas);
}

/// Draws one block and returns (rf, harvested).
class BlockSimulator
{
public:
    explicit BlockSimulator(const ExperimentSpec &spec)
        : spec_(spec), sampler_(spec.array, spec.scheme.shift, correlation_of(spec)),
          hx_(spec.array.antennas), hy_(spec.array.antennas)
    {
    }

    void draw(RngStream &rng)
    {
        if (spec_.phi_policy == PhiPolicy::UniformRandomPerSample)
            sampler_.sample_into_at(rng.uniform(0.0, two_pi), rng, hx_, hy_, scratch_);
        else
            sampler_.sample_into(rng, hx_, hy_, scratch_);
    }

    double rf() const
    {
        const double beta = spec_.scheme.beta;
        return spec_.scheme.scheme == Scheme::AaSs ? rf_aa_ss(hx_, hy_, beta) : rf_aa_is(hx_, hy_, beta);
    }

    double harvested(double rf) const
    {
        if (spec_.scheme.scheme != Scheme::Sa)
            return harvest(spec_.curve, rf);
        double total = 0.0;
        for (Eigen::Index j = 0; j < hx_.size(); ++j)
            total += harvest(spec_.curve, spec_.scheme.beta * (hx_(j) * hx_(j) + hy_(j) * hy_(j)));
        return total / static_cast<double>(hx_.size());
    }

private:
    const ExperimentSpec &spec_;
    ChannelSampler sampler_;
    Vector hx_, hy_, scratch_;
};

} // namespace

void HistogramSpec::validate() const
{
    if (bins < 1)
        throw Error(Errc::OutOfRange, "histogram needs at least one bin");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw Error(Errc::OutOfRange, "histogram range must satisfy lo < hi");
}

void ExperimentSpec::validate() const
{
    array.validate();
    scheme.validate(array.antennas);
    curve.validate();
    if (samples < 1)
        throw Error(Errc::OutOfRange, "samples must be >= 1");
    if (threads < 1)
        throw Error(Errc::OutOfRange, "threads must be >= 1");
    rf_histogram.validate();
    harvested_histogram.validate();
}

EnsembleStats run(const ExperimentSpec &spec)
{
    spec.validate();
    const Binning rf_bins(spec.rf_histogram);
    const Binning h_bins(spec.harvested_histogram);
    // Built once so the factorization is shared; each chunk copies it.
    const BlockSimulator prototype(spec);

    auto chunks = run_chunks<ChunkStats>(spec.samples, spec.threads, [&](long c, long begin, long end) {
        BlockSimulator sim = prototype;
        RngStream rng(spec.seed, static_cast<std::uint64_t>(c));
        ChunkStats out;
        out.rf_counts.assign(static_cast<std::size_t>(rf_bins.bins), 0);
        out.harvested_counts.assign(static_cast<std::size_t>(h_bins.bins), 0);
        for (long i = begin; i < end; ++i)
        {
            sim.draw(rng);
            const double rf = sim.rf();
            const double h = sim.harvested(rf);
            out.rf.add(rf);
            out.harvested.add(h);
            if ((spec.outage_on_harvested ? h : rf) < spec.curve.xi0)
                ++out.outages;
            ++out.rf_counts[static_cast<std::size_t>(rf_bins.index(rf))];
            ++out.harvested_counts[static_cast<std::size_t>(h_bins.index(h))];
        }
        return out;
    });

    const ChunkStats total = reduce_pairwise(chunks, 0, chunks.size(), [](const ChunkStats &a, const ChunkStats &b) {
        ChunkStats out;
        out.rf = Moments::merge(a.rf, b.rf);
        out.harvested = Moments::merge(a.harvested, b.harvested);
        out.outages = a.outages + b.outages;
        out.rf_counts = a.rf_counts;
        out.harvested_counts = a.harvested_counts;
        for (std::size_t i = 0; i < out.rf_counts.size(); ++i)
            out.rf_counts[i] += b.rf_counts[i];
        for (std::size_t i = 0; i < out.harvested_counts.size(); ++i)
            out.harvested_counts[i] += b.harvested_counts[i];
        return out;
    });

    const double n = static_cast<double>(spec.samples);
    EnsembleStats stats;
    stats.samples = spec.samples;
    stats.rf_mean = total.rf.mean;
    stats.rf_variance = total.rf.variance();
    stats.harvested_mean = total.harvested.mean;
    stats.harvested_variance = total.harvested.variance();
    stats.outage = static_cast<double>(total.outages) / n;
    stats.rf_histogram = make_histogram(total.rf_counts, spec.rf_histogram, n);
    stats.harvested_histogram = make_histogram(total.harvested_counts, spec.harvested_histogram, n);
    return stats;
}

std::vector<double> simulate_rf(const ExperimentSpec &spec)
{
    spec.validate();
    const BlockSimulator prototype(spec);
    auto chunks = run_chunks<std::vector<double>>(spec.samples, spec.threads, [&](long c, long begin, long end) {
        BlockSimulator sim = prototype;
        RngStream rng(spec.seed, static_cast<std::uint64_t>(c));
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(end - begin));
        for (long i = begin; i < end; ++i)
        {
            sim.draw(rng);
            out.push_back(sim.rf());
        }
        return out;
    });
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(spec.samples));
    for (const auto &c : chunks)
        all.insert(all.end(), c.begin(), c.end());
    return all;
}

Histogram histogram_estimate(const std::vector<double> &samples, int bins, double lo, double hi)
{
    const HistogramSpec spec{bins, lo, hi};
    spec.validate();
    if (samples.empty())
        throw Error(Errc::OutOfRange, "histogram needs at least one sample");
    const Binning binning(spec);
    std::vector<long> counts(static_cast<std::size_t>(bins), 0);
    for (double x : samples)
        ++counts[static_cast<std::size_t>(binning.index(x))];
    return make_histogram(counts, spec, static_cast<double>(samples.size()));
}

Histogram histogram_of(const EnergyDistribution &dist, int bins, double lo, double hi)
{
    const HistogramSpec spec{bins, lo, hi};
    spec.validate();
    Histogram h{Vector::LinSpaced(bins + 1, lo, hi), Vector(bins)};
    Vector F(bins + 1);
    for (int i = 0; i <= bins; ++i)
        F(i) = dist.cdf(h.edges(i));
    F(0) = 0.0;
    F(bins) = 1.0;
    for (int i = 0; i < bins; ++i)
        h.mass(i) = std::max(0.0, F(i + 1) - F(i));
    h.mass /= h.mass.sum();
    return h;
}

BhattacharyyaResult bhattacharyya(const Histogram &p, const Histogram &q)
{
    if (p.edges.size() != q.edges.size() || p.mass.size() != q.mass.size() ||
        (p.edges - q.edges).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + p.edges.cwiseAbs().maxCoeff()))
        throw Error(Errc::EdgeMismatch, "histograms must share identical edges");
    const double c = (p.mass.array() * q.mass.array()).sqrt().sum();
    BhattacharyyaResult out;
    out.coefficient = c;
    if (c <= 0.0)
    {
        out.disjoint = true;
        out.distance = bhattacharyya_saturation;
        return out;
    }
    out.distance = std::max(0.0, -std::log(std::min(c, 1.0)));
    return out;
}

Matrix random_gram_correlation(int antennas, std::uint64_t seed, int gram_dim)
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    const int d = gram_dim > 0 ? gram_dim : antennas;
    RngStream rng(seed, 0);
    Matrix V(antennas, d);
    for (int i = 0; i < antennas; ++i)
    {
        for (int k = 0; k < d; ++k)
            V(i, k) = rng.normal();
        const double norm = V.row(i).norm();
        if (norm > 0.0)
            V.row(i) /= norm;
        else
            V(i, 0) = 1.0;
    }
    Matrix C = V * V.transpose();
    C = 0.5 * (C + C.transpose()).eval();
    C.diagonal().setOnes();
    return C;
}

Matrix random_correlation_matched(int antennas, double r_sum_target, std::uint64_t seed, int gram_dim)
{
    const double M = antennas;
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    if (!(r_sum_target >= 0.0 && r_sum_target <= M * M))
        throw Error(Errc::Infeasible, "target R_sum must lie in [0, M^2]");
    if (antennas == 1)
    {
        if (r_sum_target != 1.0)
            throw Error(Errc::Infeasible, "a single antenna has R_sum = 1");
        return Matrix::Ones(1, 1);
    }
    if (r_sum_target == M * M)
        return Matrix::Ones(antennas, antennas);

    for (int attempt = 0; attempt < 100; ++attempt)
    {
        const Matrix C = random_gram_correlation(antennas, derive_seed(seed, static_cast<std::uint64_t>(attempt)), gram_dim);
        const double rc = r_sum(C);
        Matrix E;
        double re;
        if (r_sum_target >= rc)
        {
            E = Matrix::Ones(antennas, antennas);
            re = M * M;
        }
        else
        {
            E = build_correlation(Uniform{-1.0 / (M - 1.0)}, antennas);
            re = 0.0;
        }
        if (re == rc)
            continue;
        const double w = (r_sum_target - rc) / (re - rc);
        Matrix R = (1.0 - w) * C + w * E;
        R.diagonal().setOnes();
        if (min_eigenvalue(R) >= -1e-10 && std::abs(r_sum(R) - r_sum_target) <= 1e-6)
            return R;
    }
    throw Error(Errc::Infeasible, "could not match the requested R_sum");
}

void ValidationSpec::validate() const
{
    if (antennas < 2)
        throw Error(Errc::OutOfRange, "validation needs M >= 2");
    if (trials < 1)
        throw Error(Errc::OutOfRange, "trials must be >= 1");
    if (samples < 1)
        throw Error(Errc::OutOfRange, "samples must be >= 1");
    if (!(kappa >= 0.0) || !(beta > 0.0))
        throw Error(Errc::OutOfRange, "validation needs kappa >= 0 and beta > 0");
    if (psi.size() != 0 && psi.size() != antennas)
        throw Error(Errc::OutOfRange, "psi length does not match antenna count");
    histogram.validate();
}

ValidationResult validate_theorem2(const ValidationSpec &spec)
{
    spec.validate();
    const int M = spec.antennas;
    const double Md = M;
    const PhaseShift shift = spec.psi.size() == 0 ? PhaseShift::zeros(M) : PhaseShift::normalized(spec.psi);

    ExperimentSpec base;
    base.array.antennas = M;
    base.array.kappa = spec.kappa;
    base.array.phi = spec.phi;
    base.scheme = SchemeConfig{Scheme::AaIs, spec.beta, shift};
    base.samples = spec.samples;
    base.threads = spec.threads;

    const HistogramSpec &hs = spec.histogram;
    ValidationResult out;
    double analytic_total = 0.0;
    for (int trial = 0; trial < spec.trials; ++trial)
    {
        const std::uint64_t key = derive_seed(spec.seed, static_cast<std::uint64_t>(trial));
        Matrix R_star;
        if (spec.target == TargetPolicy::Gram)
        {
            R_star = random_gram_correlation(M, derive_seed(key, 1), spec.gram_dim);
        }
        else
        {
            RngStream rng(key, 0);
            R_star = random_correlation_matched(M, rng.uniform(0.0, Md * Md), derive_seed(key, 1), spec.gram_dim);
        }
        const double rs = std::clamp(r_sum(R_star), 0.0, Md * Md);
        const double rho = std::clamp((rs - Md) / (Md * (Md - 1.0)), -1.0 / (Md - 1.0), 1.0);

        ExperimentSpec p2 = base;
        p2.correlation = R_star;
        p2.seed = derive_seed(key, 2);
        const Histogram h2 = histogram_estimate(simulate_rf(p2), hs.bins, hs.lo, hs.hi);

        ExperimentSpec p1 = base;
        p1.correlation = build_correlation(Uniform{rho}, M);
        p1.seed = derive_seed(key, 3);
        const Histogram h1 = histogram_estimate(simulate_rf(p1), hs.bins, hs.lo, hs.hi);

        const double d = bhattacharyya(h1, h2).distance;
        out.distances.push_back(d);
        out.r_sums.push_back(rs);
        out.mean_distance += d;
        out.max_distance = std::max(out.max_distance, d);

        if (spec.analytic_reference)
        {
            const PhaseInputs in{shift, spec.phi, spec.kappa, rs};
            const Histogram ha = histogram_of(dist_aa_is(spec.beta, in), hs.bins, hs.lo, hs.hi);
            analytic_total += bhattacharyya(ha, h2).distance;
        }
    }
    out.mean_distance /= spec.trials;
    out.mean_distance_analytic = spec.analytic_reference ? analytic_total / spec.trials : 0.0;
    return out;
}

} // namespace wetbench
