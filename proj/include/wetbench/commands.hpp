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

#ifndef WETBENCH_COMMANDS_HPP
#define WETBENCH_COMMANDS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "wetbench/config.hpp"

namespace wetbench
{

/// Process exit codes of the command-line driver.
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_config = 2,
    exit_io = 3,
    exit_numerical = 4
};

int exit_code_for(Errc code) noexcept;

struct CommandOutput
{
    std::vector<std::filesystem::path> files;
    std::string summary;   // human readable, deterministic
};

/// Subcommands: curves, distributions, optimize, validate, scenario.
const std::vector<std::string> &command_names();

/// Runs one subcommand. Reads run.seed, run.threads and run.out from the
/// configuration; writes CSV files under run.out (created if missing).
CommandOutput run_command(const std::string &kind, const Config &config);

} // namespace wetbench

#endif
