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

#include "wetbench/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wetbench/analytic.hpp"
#include "wetbench/montecarlo.hpp"
#include "wetbench/optimize.hpp"
#include "wetbench/scenario.hpp"

namespace wetbench
{

int exit_code_for(Errc code) noexcept
{
    switch (code)
    {
    case Errc::Io: return exit_io;
    case Errc::NonConvergence:
    case Errc::FactorizationFailure:
    case Errc::BudgetExceeded: return exit_numerical;
    default: return exit_config;
    }
}

const std::vector<std::string> &command_names()
{
    static const std::vector<std::string> names{"curves", "distributions", "optimize", "validate", "scenario"};
    return names;
}

namespace
{

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string hex(std::uint64_t v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

/// Collects rows and writes one CSV file with '#' metadata lines.
class CsvFile
{
public:
    CsvFile(std::filesystem::path path, const std::string &kind, const Config &config, std::vector<std::string> header)
        : path_(std::move(path))
    {
        text_ << "# wetbench " << kind << "\n";
        text_ << "# config_hash=" << hex(config.hash()) << "\n";
        text_ << "# seed=" << config.get_u64("run", "seed", 1) << "\n";
        row(header);
    }

    void row(const std::vector<std::string> &cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
            text_ << (i ? "," : "") << cells[i];
        text_ << "\n";
    }

    std::filesystem::path write() const
    {
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Errc::Io, "cannot open '" + path_.string() + "' for writing");
        out << text_.str();
        out.flush();
        if (!out)
            throw Error(Errc::Io, "failed writing '" + path_.string() + "'");
        return path_;
    }

private:
    std::filesystem::path path_;
    std::ostringstream text_;
};

std::filesystem::path output_dir(const Config &config)
{
    const std::filesystem::path dir = config.get_string("run", "out", "out");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw Error(Errc::Io, "cannot create output directory '" + dir.string() + "'");
    return dir;
}

int threads_of(const Config &config)
{
    const long t = config.get_long("run", "threads", 1);
    if (t < 1 || t > 1024)
        config.fail("run", "threads", "must lie in [1, 1024]");
    return static_cast<int>(t);
}

std::uint64_t seed_of(const Config &config) { return config.get_u64("run", "seed", 1); }

long samples_of(const Config &config, const std::string &section, long fallback)
{
    const long n = config.get_long(section, "samples", fallback);
    if (n < 1)
        config.fail(section, "samples", "must be >= 1");
    return n;
}

struct ArraySettings
{
    ArrayConfig array;
    bool random_phi = false;
};

ArraySettings array_of(const Config &config)
{
    ArraySettings out;
    ArrayConfig &a = out.array;
    const long M = config.get_long("array", "antennas", 8);
    if (M < 1 || M > 1024)
        config.fail("array", "antennas", "must lie in [1, 1024]");
    a.antennas = static_cast<int>(M);
    a.kappa = config.get_double("array", "kappa", 5.0);
    if (a.kappa < 0.0)
        config.fail("array", "kappa", "must be >= 0");
    const std::string phi = config.get_string("array", "phi", "random");
    if (phi == "random")
    {
        out.random_phi = true;
        a.phi = 0.0;
    }
    else
    {
        a.phi = config.get_double("array", "phi", 0.0);
        if (!(a.phi >= 0.0 && a.phi <= two_pi))
            config.fail("array", "phi", "must be 'random' or lie in [0, 2pi]");
    }
    a.phi0 = config.get_double("array", "phi0", pi / 4.0);
    const std::string model = config.get_string("array", "correlation", "exponential");
    if (model == "exponential")
        a.correlation = Exponential{config.get_double("array", "tau", 0.3)};
    else if (model == "uniform")
        a.correlation = Uniform{config.get_double("array", "rho", 0.0)};
    else
        config.fail("array", "correlation", "expected 'exponential' or 'uniform'");
    try
    {
        build_correlation(a.correlation, a.antennas);
    }
    catch (const Error &e)
    {
        config.fail("array", model == "exponential" ? "tau" : "rho", e.what());
    }
    return out;
}

EhCurve curve_of(const Config &config)
{
    EhCurve c;
    c.g_max = config.get_double("harvester", "g_max", c.g_max);
    c.a = config.get_double("harvester", "a", c.a);
    c.b = config.get_double("harvester", "b", c.b);
    c.xi0 = dbm_to_mw(config.get_double("harvester", "xi0_dbm", -2.0));
    try
    {
        c.validate();
    }
    catch (const Error &e)
    {
        throw Error(Errc::Config, std::string("harvester: ") + e.what());
    }
    return c;
}

bool outage_on_harvested(const Config &config)
{
    const std::string v = config.get_string("harvester", "outage_on", "rf");
    if (v != "rf" && v != "harvested")
        config.fail("harvester", "outage_on", "expected 'rf' or 'harvested'");
    return v == "harvested";
}

/// "SCHEME[/shift]" entries of [scheme] schemes.
struct SchemeChoice
{
    Scheme scheme;
    std::string shift;   // zero, max-energy, min-var, adaptive
    std::string label;
};

std::vector<SchemeChoice> schemes_of(const Config &config)
{
    std::vector<SchemeChoice> out;
    for (const auto &word : config.get_words("scheme", "schemes", {"AA-SS/max-energy", "AA-SS/min-var", "AA-IS/adaptive", "SA"}))
    {
        const auto slash = word.find('/');
        const std::string name = word.substr(0, slash);
        const auto scheme = parse_scheme(name);
        if (!scheme)
            config.fail("scheme", "schemes", "unknown scheme '" + name + "'");
        std::string shift = slash == std::string::npos ? "zero" : word.substr(slash + 1);
        if (slash == std::string::npos && *scheme == Scheme::AaIs)
            shift = "adaptive";
        if (shift != "zero" && shift != "max-energy" && shift != "min-var" && shift != "adaptive")
            config.fail("scheme", "schemes", "unknown shift '" + shift + "'");
        out.push_back({*scheme, shift, word});
    }
    return out;
}

PhaseShift shift_for(const std::string &name, const ArrayConfig &array)
{
    if (name == "max-energy")
        return max_energy_shift(array.antennas);
    if (name == "adaptive")
        return aa_is_shift(array.antennas, r_sum(array.correlation, array.antennas));
    return PhaseShift::zeros(array.antennas);
}

double beta_of(const Config &config)
{
    return dbm_to_mw(config.get_double("scheme", "beta_dbm", 0.0));
}

// ---- curves -----------------------------------------------------------------

CommandOutput cmd_curves(const Config &config)
{
    const auto dir = output_dir(config);
    const std::string quantity = config.get_string("curves", "quantity", "energy");
    CommandOutput out;

    if (quantity == "f")
    {
        const std::string parameter = config.get_string("curves", "parameter", "phi");
        if (parameter != "phi")
            config.fail("curves", "parameter", "quantity 'f' sweeps 'phi' only");
        const auto phis = config.get_list("curves", "values", {});
        if (phis.empty())
            config.fail("curves", "values", "sweep grid is empty");
        const auto Ms = config.get_list("curves", "antennas", {2, 4, 8});
        CsvFile csv(dir / "curves.csv", "curves", config, {"antennas", "phi", "f_zero_shift", "f_max_energy"});
        for (double Md : Ms)
        {
            const int M = static_cast<int>(Md);
            if (M < 1 || M != Md)
                config.fail("curves", "antennas", "antenna counts must be positive integers");
            const Vector zero = Vector::Zero(M);
            const Vector maxe = max_energy_shift(M).psi();
            for (double phi : phis)
                csv.row({std::to_string(M), num(phi), num(f_phase(zero, phi)), num(f_phase(maxe, phi))});
        }
        out.files.push_back(csv.write());
        out.summary = "curves: f(psi, phi) for " + std::to_string(Ms.size()) + " array sizes\n";
        return out;
    }
    if (quantity != "energy")
        config.fail("curves", "quantity", "expected 'energy' or 'f'");

    const std::string parameter = config.get_string("curves", "parameter", "beta_dbm");
    if (parameter != "beta_dbm" && parameter != "tau" && parameter != "kappa" && parameter != "antennas" &&
        parameter != "phi" && parameter != "rho")
        config.fail("curves", "parameter", "expected beta_dbm, tau, rho, kappa, antennas or phi");
    if (!config.has("curves", "values"))
        config.fail("curves", "values", "sweep grid is empty");
    const auto values = config.get_list("curves", "values", {});

    const ArraySettings base = array_of(config);
    const EhCurve curve = curve_of(config);
    const auto choices = schemes_of(config);
    const long samples = samples_of(config, "run", 100000);
    const int threads = threads_of(config);
    const std::uint64_t seed = seed_of(config);

    CsvFile csv(dir / "curves.csv", "curves", config,
                {"parameter", "value", "scheme", "rf_mean", "rf_variance", "harvested_mean", "harvested_variance",
                 "outage"});
    for (double value : values)
    {
        ArraySettings point = base;
        double beta = beta_of(config);
        ArrayConfig &a = point.array;
        try
        {
            if (parameter == "beta_dbm")
                beta = dbm_to_mw(value);
            else if (parameter == "tau")
                a.correlation = Exponential{value};
            else if (parameter == "rho")
                a.correlation = Uniform{value};
            else if (parameter == "kappa")
                a.kappa = value;
            else if (parameter == "antennas")
            {
                if (value < 1 || value != std::floor(value))
                    config.fail("curves", "values", "antenna counts must be positive integers");
                a.antennas = static_cast<int>(value);
            }
            else
            {
                a.phi = value;
                point.random_phi = false;
            }
            a.validate();
            build_correlation(a.correlation, a.antennas);
        }
        catch (const Error &e)
        {
            if (e.code() == Errc::Config)
                throw;
            config.fail("curves", "values", "value " + num(value) + ": " + e.what());
        }

        for (const auto &choice : choices)
        {
            ExperimentSpec spec;
            spec.array = a;
            spec.scheme = SchemeConfig{choice.scheme, beta, shift_for(choice.shift, a)};
            spec.curve = curve;
            spec.samples = samples;
            // Same seed at every sweep point: common random numbers across the sweep.
            spec.seed = seed;
            spec.phi_policy = point.random_phi ? PhiPolicy::UniformRandomPerSample : PhiPolicy::Fixed;
            spec.outage_on_harvested = outage_on_harvested(config);
            spec.threads = threads;
            const EnsembleStats s = run(spec);
            csv.row({parameter, num(value), choice.label, num(s.rf_mean), num(s.rf_variance), num(s.harvested_mean),
                     num(s.harvested_variance), num(s.outage)});
        }
    }
    out.files.push_back(csv.write());
    out.summary = "curves: " + std::to_string(values.size()) + " points x " + std::to_string(choices.size()) +
                  " schemes over " + parameter + "\n";
    return out;
}

// ---- distributions ------------------------------------------------------------

CommandOutput cmd_distributions(const Config &config)
{
    const auto dir = output_dir(config);
    const ArraySettings settings = array_of(config);
    const ArrayConfig &a = settings.array;
    const EhCurve curve = curve_of(config);
    const auto choices = schemes_of(config);
    const long samples = samples_of(config, "run", 100000);
    const long points = config.get_long("distributions", "points", 200);
    if (points < 2)
        config.fail("distributions", "points", "must be >= 2");
    const double beta = beta_of(config);
    const double x_max = config.get_double("distributions", "x_max", 6.0 * beta);
    if (!(x_max > 0.0))
        config.fail("distributions", "x_max", "must be > 0");

    CsvFile csv(dir / "distributions.csv", "distributions", config,
                {"scheme", "x", "empirical_cdf", "analytic_cdf"});
    std::ostringstream summary;
    for (const auto &choice : choices)
    {
        ExperimentSpec spec;
        spec.array = a;
        spec.scheme = SchemeConfig{choice.scheme, beta, shift_for(choice.shift, a)};
        spec.curve = curve;
        spec.samples = samples;
        spec.seed = seed_of(config);
        spec.phi_policy = settings.random_phi ? PhiPolicy::UniformRandomPerSample : PhiPolicy::Fixed;
        spec.threads = threads_of(config);
        std::vector<double> rf = simulate_rf(spec);
        std::sort(rf.begin(), rf.end());

        // The closed forms hold for a fixed azimuth; SA shares the AA-IS block energy.
        std::optional<EnergyDistribution> dist;
        if (!settings.random_phi)
        {
            const PhaseInputs in{spec.scheme.shift, a.phi, a.kappa, r_sum(a.correlation, a.antennas)};
            dist = choice.scheme == Scheme::AaSs ? dist_aa_ss(beta, in) : dist_aa_is(beta, in);
        }
        for (long i = 0; i < points; ++i)
        {
            const double x = x_max * static_cast<double>(i) / static_cast<double>(points - 1);
            const auto count = std::upper_bound(rf.begin(), rf.end(), x) - rf.begin();
            const double ecdf = static_cast<double>(count) / static_cast<double>(rf.size());
            csv.row({choice.label, num(x), num(ecdf), dist ? num(dist->cdf(x)) : std::string()});
        }
        if (dist)
        {
            // Two-component laws are costly to evaluate; bound KS from a grid instead.
            const auto F = [&](double x) { return dist->cdf(x); };
            const bool exact = dist->components.size() == 1;
            const double ks = exact ? ks_statistic(rf, F) : ks_statistic_bound(rf, F);
            summary << choice.label << (exact ? ": KS " : ": KS <= ") << num(ks) << " (1% critical "
                    << num(ks_critical_1pct(samples)) << ")\n";
        }
    }
    CommandOutput out;
    out.files.push_back(csv.write());
    out.summary = summary.str();
    return out;
}

// ---- optimize -------------------------------------------------------------------

CommandOutput cmd_optimize(const Config &config)
{
    const auto dir = output_dir(config);
    const std::string name = config.get_string("optimize", "objective", "max-f-avg");
    const auto objective = parse_objective(name);
    if (!objective)
        config.fail("optimize", "objective", "expected max-f-avg, min-f-avg or max-f-tilde-avg");
    SearchOptions options;
    options.restarts = static_cast<int>(config.get_long("optimize", "restarts", 16));
    options.grid = static_cast<int>(config.get_long("optimize", "grid", 720));
    options.max_sweeps = static_cast<int>(config.get_long("optimize", "max_sweeps", 1000));
    options.seed = seed_of(config);
    options.threads = threads_of(config);
    if (options.restarts < 1)
        config.fail("optimize", "restarts", "must be >= 1");
    if (options.grid < 2)
        config.fail("optimize", "grid", "must be >= 2");
    if (options.max_sweeps < 1)
        config.fail("optimize", "max_sweeps", "must be >= 1");
    const auto Ms = config.get_list("optimize", "antennas", {8});

    CsvFile csv(dir / "optimize.csv", "optimize", config,
                {"objective", "antennas", "value", "reference", "restart", "sweeps", "psi_over_pi"});
    std::ostringstream summary;
    for (double Md : Ms)
    {
        if (Md < 1 || Md > 32 || Md != std::floor(Md))
            config.fail("optimize", "antennas", "antenna counts must be integers in [1, 32]");
        const int M = static_cast<int>(Md);
        const SearchResult r = search_phase(*objective, M, options);
        double reference = 0.0;
        switch (*objective)
        {
        case Objective::MaxFAvg: reference = f_averaged(max_energy_shift(M).psi()); break;
        case Objective::MinFAvg: reference = f_averaged(min_var_shift(M).psi()); break;
        case Objective::MaxFTildeAvg: reference = f_tilde_averaged(min_var_shift(M).psi()); break;
        }
        std::string psi;
        for (Eigen::Index t = 0; t < r.shift.size(); ++t)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", r.shift[t] / pi + 0.0);
            psi += (t ? " " : "") + std::string(buf);
        }
        csv.row({std::string(objective_name(*objective)), std::to_string(M), num(r.value), num(reference),
                 std::to_string(r.restart), std::to_string(r.sweeps), psi});
        summary << objective_name(*objective) << " M=" << M << ": " << num(r.value) << " psi/pi = [" << psi << "]\n";
    }
    CommandOutput out;
    out.files.push_back(csv.write());
    out.summary = summary.str();
    return out;
}

// ---- validate -------------------------------------------------------------------

CommandOutput cmd_validate(const Config &config)
{
    const auto dir = output_dir(config);
    ValidationSpec base;
    const long M = config.get_long("validate", "antennas", 4);
    if (M < 2 || M > 64)
        config.fail("validate", "antennas", "must lie in [2, 64]");
    base.antennas = static_cast<int>(M);
    base.trials = static_cast<int>(config.get_long("validate", "trials", 100));
    if (base.trials < 1)
        config.fail("validate", "trials", "must be >= 1");
    base.samples = samples_of(config, "validate", 200000);
    base.histogram.bins = static_cast<int>(config.get_long("validate", "bins", 240));
    base.histogram.lo = config.get_double("validate", "lo", 0.0);
    base.histogram.hi = config.get_double("validate", "hi", 6.0);
    if (base.histogram.bins < 1)
        config.fail("validate", "bins", "must be >= 1");
    if (!(base.histogram.lo < base.histogram.hi))
        config.fail("validate", "hi", "histogram range needs lo < hi");
    base.beta = config.get_double("validate", "beta", 1.0);
    if (!(base.beta > 0.0))
        config.fail("validate", "beta", "must be > 0");
    const std::string target = config.get_string("validate", "target", "uniform");
    if (target != "uniform" && target != "gram")
        config.fail("validate", "target", "expected 'uniform' or 'gram'");
    base.target = target == "gram" ? TargetPolicy::Gram : TargetPolicy::Uniform;
    base.gram_dim = static_cast<int>(config.get_long("validate", "gram_dim", 0));
    if (base.gram_dim < 0)
        config.fail("validate", "gram_dim", "must be >= 0");
    base.analytic_reference = config.get_bool("validate", "analytic", false);
    base.threads = threads_of(config);
    const std::string psi_policy = config.get_string("validate", "psi", "zero");
    if (psi_policy != "zero" && psi_policy != "random")
        config.fail("validate", "psi", "expected 'zero' or 'random'");
    const auto kappas = config.get_list("validate", "kappas", {0.0});
    const auto phis = config.get_list("validate", "phis", {0.0});
    for (double k : kappas)
        if (k < 0.0)
            config.fail("validate", "kappas", "kappa must be >= 0");
    for (double p : phis)
        if (p < 0.0 || p > two_pi)
            config.fail("validate", "phis", "phi must lie in [0, 2pi]");

    const std::uint64_t seed = seed_of(config);
    CsvFile csv(dir / "validate.csv", "validate", config,
                {"antennas", "kappa", "phi", "mean_distance", "max_distance", "mean_distance_analytic"});
    double worst = 0.0;
    double worst_kappa = 0.0, worst_phi = 0.0;
    std::uint64_t point = 0;
    for (double kappa : kappas)
        for (double phi : phis)
        {
            ValidationSpec spec = base;
            spec.kappa = kappa;
            spec.phi = phi;
            spec.seed = derive_seed(seed, point++);
            if (psi_policy == "random")
            {
                RngStream rng(spec.seed, 0xfeed);
                spec.psi = Vector::Zero(spec.antennas);
                for (int t = 1; t < spec.antennas; ++t)
                    spec.psi(t) = rng.uniform(0.0, two_pi);
            }
            const ValidationResult r = validate_theorem2(spec);
            csv.row({std::to_string(spec.antennas), num(kappa), num(phi), num(r.mean_distance), num(r.max_distance),
                     spec.analytic_reference ? num(r.mean_distance_analytic) : std::string()});
            if (r.mean_distance > worst)
            {
                worst = r.mean_distance;
                worst_kappa = kappa;
                worst_phi = phi;
            }
        }
    CommandOutput out;
    out.files.push_back(csv.write());
    out.summary = "validate: max mean Bhattacharyya distance " + num(worst) + " at kappa=" + num(worst_kappa) +
                  " phi=" + num(worst_phi) + "\n";
    return out;
}

// ---- scenario -------------------------------------------------------------------

double radians(double deg) { return deg * pi / 180.0; }

std::vector<Cluster> clusters_of(const Config &config)
{
    std::vector<Cluster> out;
    for (const auto &word : config.get_words("scenario", "clusters", {}))
    {
        std::vector<double> f;
        std::stringstream ss(word);
        std::string part;
        while (std::getline(ss, part, ':'))
        {
            try
            {
                std::size_t used = 0;
                f.push_back(std::stod(part, &used));
                if (used != part.size())
                    throw std::invalid_argument(part);
            }
            catch (const std::exception &)
            {
                config.fail("scenario", "clusters", "bad number in '" + word + "'");
            }
        }
        if (f.size() != 5 || f[4] < 1 || f[4] != std::floor(f[4]))
            config.fail("scenario", "clusters", "expected azimuth_deg:spread_deg:r_min:r_max:count, got '" + word + "'");
        out.push_back({radians(f[0]), radians(f[1]), f[2], f[3], static_cast<int>(f[4])});
    }
    if (out.empty())
        config.fail("scenario", "clusters", "no clusters given");
    return out;
}

BeaconPlan plan_named(const std::string &name, const ArrayConfig &array, const Config &config)
{
    const int M = array.antennas;
    if (name == "sa")
        return single_group_plan(name, M, Scheme::Sa, PhaseShift::zeros(M));
    if (name == "aa-is")
        return single_group_plan(name, M, Scheme::AaIs, aa_is_shift(M, r_sum(array.correlation, M)));
    if (name == "aa-ss-max-energy")
        return single_group_plan(name, M, Scheme::AaSs, max_energy_shift(M));
    if (name == "aa-ss-min-var")
        return single_group_plan(name, M, Scheme::AaSs, min_var_shift(M));
    if (name == "pair-max-energy")
    {
        if (M < 2)
            config.fail("scenario", "plans", "pair plans need at least 2 antennas");
        return BeaconPlan{name, 0.0, {BeaconGroup{0, 2, Scheme::AaSs, max_energy_shift(2)}}};
    }
    if (name == "split-min-var-max-energy")
    {
        if (M < 2)
            config.fail("scenario", "plans", "split plans need at least 2 antennas");
        const int half = M / 2;
        return BeaconPlan{name,
                          0.0,
                          {BeaconGroup{0, half, Scheme::AaSs, min_var_shift(half)},
                           BeaconGroup{half, M - half, Scheme::AaSs, max_energy_shift(M - half)}}};
    }
    config.fail("scenario", "plans", "unknown plan '" + name + "'");
}

CommandOutput cmd_scenario(const Config &config)
{
    const auto dir = output_dir(config);
    ArraySettings settings = array_of(config);
    const ArrayConfig &array = settings.array;
    const EhCurve curve = curve_of(config);

    PathLoss pathloss;
    pathloss.intercept_dbm = config.get_double("scenario", "pathloss_intercept", 30.0);
    pathloss.exponent = config.get_double("scenario", "pathloss_exponent", 27.0);
    const std::uint64_t seed = seed_of(config);
    const std::uint64_t deployment_seed = config.get_u64("scenario", "deployment_seed", seed);

    Deployment deployment;
    const std::string layout = config.get_string("scenario", "layout", "disk");
    if (layout == "disk")
    {
        UniformDisk disk;
        disk.radius = config.get_double("scenario", "radius", 10.0);
        disk.count = static_cast<int>(config.get_long("scenario", "count", 80));
        disk.min_distance = config.get_double("scenario", "min_distance", 1.0);
        if (disk.count < 1)
            config.fail("scenario", "count", "must be >= 1");
        if (!(disk.min_distance > 0.0) || !(disk.radius > disk.min_distance))
            config.fail("scenario", "radius", "needs 0 < min_distance < radius");
        deployment = generate(disk, pathloss, deployment_seed);
    }
    else if (layout == "clusters")
    {
        const auto clusters = clusters_of(config);
        for (const auto &c : clusters)
            if (!(c.r_min > 0.0) || c.r_max < c.r_min || c.spread < 0.0)
                config.fail("scenario", "clusters", "cluster needs 0 < r_min <= r_max and spread >= 0");
        deployment = generate(clusters, pathloss, deployment_seed);
    }
    else
        config.fail("scenario", "layout", "expected 'disk' or 'clusters'");

    std::vector<BeaconPlan> templates;
    for (const auto &name : config.get_words("scenario", "plans", {"sa", "aa-is", "aa-ss-max-energy", "aa-ss-min-var"}))
        templates.push_back(plan_named(name, array, config));
    std::vector<double> rotations;
    for (double deg : config.get_list("scenario", "rotations_deg", {0.0}))
        rotations.push_back(radians(deg));

    EvaluationOptions options;
    options.samples = samples_of(config, "scenario", 5000);
    options.seed = seed;
    options.threads = threads_of(config);

    const auto candidates = with_rotations(templates, rotations);
    const SweepResult sweep = sweep_plans(deployment, candidates, array, curve, options);

    CsvFile plans(dir / "scenario_plans.csv", "scenario", config,
                  {"plan", "rotation_deg", "min_energy_mw", "min_energy_dbm", "worst_device"});
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        const auto &r = sweep.results[i];
        plans.row({candidates[i].name, num(candidates[i].rotation * 180.0 / pi), num(r.min_energy),
                   num(mw_to_dbm(r.min_energy)), std::to_string(r.worst_device)});
    }

    // Best rotation per template.
    std::vector<std::size_t> best_of(templates.size(), 0);
    for (std::size_t t = 0; t < templates.size(); ++t)
    {
        std::size_t best = t * rotations.size();
        for (std::size_t k = 0; k < rotations.size(); ++k)
        {
            const std::size_t i = t * rotations.size() + k;
            if (sweep.results[i].min_energy > sweep.results[best].min_energy)
                best = i;
        }
        best_of[t] = best;
    }

    std::vector<std::string> header{"device", "distance_m", "azimuth_deg", "beta_mw"};
    for (const auto &t : templates)
        header.push_back(t.name + "_mw");
    CsvFile devices(dir / "scenario_devices.csv", "scenario", config, header);
    for (std::size_t d = 0; d < deployment.devices.size(); ++d)
    {
        const Device &dev = deployment.devices[d];
        std::vector<std::string> row{std::to_string(d), num(dev.distance), num(dev.azimuth * 180.0 / pi),
                                     num(beta_at(pathloss, dev.distance))};
        for (std::size_t b : best_of)
            row.push_back(num(sweep.results[b].per_device[d]));
        devices.row(row);
    }

    CommandOutput out;
    out.files.push_back(plans.write());
    out.files.push_back(devices.write());
    std::ostringstream summary;
    const std::size_t best = static_cast<std::size_t>(sweep.best_index);
    summary << "scenario: best plan " << candidates[best].name << " at rotation "
            << num(candidates[best].rotation * 180.0 / pi) << " deg, min energy "
            << num(mw_to_dbm(sweep.results[best].min_energy)) << " dBm\n";
    for (std::size_t t = 0; t < templates.size(); ++t)
        summary << "  " << templates[t].name << ": " << num(mw_to_dbm(sweep.results[best_of[t]].min_energy))
                << " dBm at " << num(candidates[best_of[t]].rotation * 180.0 / pi) << " deg\n";
    out.summary = summary.str();
    return out;
}

} // namespace

CommandOutput run_command(const std::string &kind, const Config &config)
{
    const std::string declared = config.get_string("run", "kind", kind);
    if (declared != kind)
        config.fail("run", "kind", "configuration is for '" + declared + "', not '" + kind + "'");
    if (kind == "curves")
        return cmd_curves(config);
    if (kind == "distributions")
        return cmd_distributions(config);
    if (kind == "optimize")
        return cmd_optimize(config);
    if (kind == "validate")
        return cmd_validate(config);
    if (kind == "scenario")
        return cmd_scenario(config);
    throw Error(Errc::Config, "unknown subcommand '" + kind + "'");
}

} // namespace wetbench
