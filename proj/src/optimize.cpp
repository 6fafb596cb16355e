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

#include "wetbench/optimize.hpp"

#include <thread>
#include <vector>

#include "wetbench/analytic.hpp"

namespace wetbench
{

PhaseShift max_energy_shift(int antennas)
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    Vector psi(antennas);
    for (int t = 0; t < antennas; ++t)
        psi(t) = (t % 2) * pi;
    return PhaseShift(psi);
}

PhaseShift min_var_shift(int antennas)
{
    if (antennas < 1)
        throw Error(Errc::OutOfRange, "need at least one antenna");
    return PhaseShift::zeros(antennas);
}

PhaseShift aa_is_shift(int antennas, double r_sum)
{
    const double M = antennas;
    if (antennas < 1 || !(r_sum >= 0.0 && r_sum <= M * M * (1.0 + 1e-12)))
        throw Error(Errc::OutOfRange, "R_sum must lie in [0, M^2]");
    return r_sum < M ? max_energy_shift(antennas) : min_var_shift(antennas);
}

std::string_view objective_name(Objective objective) noexcept
{
    switch (objective)
    {
    case Objective::MaxFAvg: return "max-f-avg";
    case Objective::MinFAvg: return "min-f-avg";
    case Objective::MaxFTildeAvg: return "max-f-tilde-avg";
    }
    return "?";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept
{
    if (name == "max-f-avg" || name == "MaxFAvg")
        return Objective::MaxFAvg;
    if (name == "min-f-avg" || name == "MinFAvg")
        return Objective::MinFAvg;
    if (name == "max-f-tilde-avg" || name == "MaxFTildeAvg")
        return Objective::MaxFTildeAvg;
    return std::nullopt;
}

namespace
{

struct Trial
{
    Vector psi;
    double value = 0.0;
    int sweeps = 0;
};

class Search
{
public:
    Search(Objective objective, int antennas, int grid) : objective_(objective), M_(antennas), grid_(grid) {}

    /// Objective in "larger is better" orientation.
    double score(const Vector &psi) const
    {
        switch (objective_)
        {
        case Objective::MaxFAvg: return f_averaged(psi);
        case Objective::MinFAvg: return -f_averaged(psi);
        case Objective::MaxFTildeAvg: return f_tilde_averaged(psi);
        }
        return 0.0;
    }

    Trial run(Vector psi, int max_sweeps) const
    {
        double best = score(psi);
        const double step = two_pi / grid_;
        int sweeps = 0;
        for (;;)
        {
            if (++sweeps > max_sweeps)
                throw Error(Errc::BudgetExceeded, "phase search exceeded its sweep budget");
            bool moved = false;
            for (int t = 1; t < M_; ++t)
            {
                // Every objective is a sum of cosines of phase differences, so
                // as a function of psi_t alone it is c + a cos x + b sin x.
                Vector probe = psi;
                probe(t) = 0.0;
                const double at0 = score(probe);
                probe(t) = pi;
                const double at_pi = score(probe);
                probe(t) = 0.5 * pi;
                const double at_half = score(probe);
                const double c = 0.5 * (at0 + at_pi);
                const double a = 0.5 * (at0 - at_pi);
                const double b = at_half - c;

                double best_x = psi(t);
                double best_value = best;
                for (int g = 0; g < grid_; ++g)
                {
                    const double x = g * step;
                    const double value = c + a * std::cos(x) + b * std::sin(x);
                    if (value > best_value + 1e-12 * (1.0 + std::abs(best_value)))
                    {
                        best_value = value;
                        best_x = x;
                    }
                }
                if (best_x != psi(t))
                {
                    probe = psi;
                    probe(t) = best_x;
                    const double exact = score(probe);
                    if (exact > best)
                    {
                        psi = probe;
                        best = exact;
                        moved = true;
                    }
                }
            }
            if (!moved)
                break;
        }
        return {std::move(psi), best, sweeps};
    }

private:
    Objective objective_;
    int M_;
    int grid_;
};

} // namespace

SearchResult search_phase(Objective objective, int antennas, const SearchOptions &options)
{
    if (antennas < 1 || antennas > 32)
        throw Error(Errc::OutOfRange, "phase search supports 1 <= M <= 32");
    if (options.restarts < 1 || options.grid < 2 || options.max_sweeps < 1)
        throw Error(Errc::OutOfRange, "search needs restarts >= 1, grid >= 2, max_sweeps >= 1");

    const Search search(objective, antennas, options.grid);
    std::vector<Trial> trials(options.restarts);

    auto work = [&](int r) {
        Vector start = Vector::Zero(antennas);
        if (r > 0)
        {
            RngStream rng(options.seed, static_cast<std::uint64_t>(r));
            std::uniform_int_distribution<int> pick(0, options.grid - 1);
            for (int t = 1; t < antennas; ++t)
                start(t) = pick(rng.engine()) * two_pi / options.grid;
        }
        trials[r] = search.run(start, options.max_sweeps);
    };

    const int threads = std::max(1, std::min(options.threads, options.restarts));
    if (threads == 1)
    {
        for (int r = 0; r < options.restarts; ++r)
            work(r);
    }
    else
    {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try
                {
                    for (int r = w; r < options.restarts; r += threads)
                        work(r);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
        for (auto &th : pool)
            th.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    int winner = 0;
    for (int r = 1; r < options.restarts; ++r)
        if (trials[r].value > trials[winner].value)
            winner = r;

    const Trial &best = trials[winner];
    double value = 0.0;
    switch (objective)
    {
    case Objective::MaxFAvg:
    case Objective::MinFAvg: value = f_averaged(best.psi); break;
    case Objective::MaxFTildeAvg: value = f_tilde_averaged(best.psi); break;
    }
    return {PhaseShift(best.psi), value, winner, best.sweeps};
}

} // namespace wetbench
