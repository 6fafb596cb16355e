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

// wetbench: command-line driver for the experiment subcommands.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wetbench/commands.hpp"

extern char **environ;

namespace
{

std::vector<std::string> environment()
{
    std::vector<std::string> out;
    for (char **e = environ; e && *e; ++e)
        out.emplace_back(*e);
    return out;
}

std::string env_or(const char *name, const std::string &fallback)
{
    const char *v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

} // namespace

int main(int argc, char **argv)
{
    using namespace wetbench;

    CLI::App app{"wetbench: CSI-free multi-antenna RF wireless energy transfer experiments"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path = env_or("WETBENCH_CONFIG", "");
    std::string preset = env_or("WETBENCH_PRESET", "");
    std::string seed = env_or("WETBENCH_SEED", "");
    std::string threads = env_or("WETBENCH_THREADS", "");
    std::string out_dir = env_or("WETBENCH_OUT", "");
    bool list_presets = false;

    app.add_option("--config", config_path, "Experiment configuration file");
    app.add_option("--preset", preset, "Embedded preset to start from");
    app.add_option("--seed", seed, "Random seed (unsigned 64-bit)");
    app.add_option("--threads", threads, "Worker threads; results do not depend on it");
    app.add_option("--out", out_dir, "Output directory for CSV files");
    app.add_flag("--list-presets", list_presets, "Print the embedded preset names and exit");

    for (const auto &name : command_names())
        app.add_subcommand(name, "Run the " + name + " experiment");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (list_presets)
    {
        for (const auto &name : preset_names())
            std::cout << name << "\n";
        return exit_ok;
    }
    if (app.get_subcommands().empty())
    {
        std::cerr << app.help();
        return exit_usage;
    }
    const std::string kind = app.get_subcommands().front()->get_name();

    try
    {
        Config config;
        if (!preset.empty())
        {
            const auto text = preset_text(preset);
            if (!text)
                throw Error(Errc::Config, "unknown preset '" + preset + "'");
            config.merge_text(*text, "preset " + preset);
        }
        if (!config_path.empty())
        {
            std::ifstream in(config_path);
            if (!in)
                throw Error(Errc::Io, "cannot read configuration '" + config_path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            config.merge_text(text.str(), config_path);
        }
        config.merge_environment(environment());
        if (!seed.empty())
            config.set("run", "seed", seed, "--seed");
        if (!threads.empty())
            config.set("run", "threads", threads, "--threads");
        if (!out_dir.empty())
            config.set("run", "out", out_dir, "--out");

        const CommandOutput result = run_command(kind, config);
        std::cout << result.summary;
        for (const auto &file : result.files)
            std::cout << "wrote " << file.string() << "\n";
        return exit_ok;
    }
    catch (const Error &e)
    {
        std::cerr << "wetbench: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    catch (const std::exception &e)
    {
        std::cerr << "wetbench: internal error: " << e.what() << "\n";
        return exit_numerical;
    }
}
