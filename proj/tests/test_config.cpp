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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "wetbench/commands.hpp"

using namespace wetbench;

namespace
{

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Errc code_of(const std::function<void()> &fn)
{
    try
    {
        fn();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::Io;
}

} // namespace

TEST_CASE("parsing and typed access")
{
    Config c;
    c.merge_text("# comment\n[array]\nantennas = 6 ; trailing\nkappa=2.5\n\n[run]\nseed = 18446744073709551615\n"
                 "samples = 2e5\n[scheme]\nschemes = SA, AA-SS\n[curves]\nvalues = 0:4:2, 9\n",
                 "test.ini");
    CHECK(c.get_long("array", "antennas", 0) == 6);
    CHECK(c.get_double("array", "kappa", 0.0) == 2.5);
    CHECK(c.get_u64("run", "seed", 0) == 18446744073709551615ULL);
    CHECK(c.get_long("run", "samples", 0) == 200000);
    CHECK(c.get_words("scheme", "schemes", {}) == std::vector<std::string>{"SA", "AA-SS"});
    CHECK(c.get_list("curves", "values", {}) == std::vector<double>{0, 2, 4, 9});
    CHECK(c.get_double("array", "phi", 1.25) == 1.25);
    CHECK_FALSE(c.has("array", "phi"));
}

TEST_CASE("errors cite their origin")
{
    Config c;
    try
    {
        c.merge_text("[array]\nantennas = 4\nbogus = 1\n", "cfg.ini");
        FAIL("unknown key accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == Errc::Config);
        CHECK(std::string(e.what()).find("cfg.ini:3") != std::string::npos);
    }
    CHECK(code_of([] { Config().merge_text("[nowhere]\n", "x"); }) == Errc::Config);
    CHECK(code_of([] { Config().merge_text("antennas = 3\n", "x"); }) == Errc::Config);
    CHECK(code_of([] { Config().merge_text("[array]\nantennas\n", "x"); }) == Errc::Config);

    Config bad;
    bad.merge_text("[array]\nkappa = lots\n[curves]\nvalues = 5:1:1\n", "b.ini");
    CHECK(code_of([&] { bad.get_double("array", "kappa", 0.0); }) == Errc::Config);
    CHECK(code_of([&] { bad.get_list("curves", "values", {}); }) == Errc::Config);
}

TEST_CASE("layering and environment overrides")
{
    Config c;
    c.merge_text("[array]\nantennas = 4\n", "preset");
    c.merge_text("[array]\nantennas = 6\nkappa = 1\n", "file");
    c.merge_environment({"PATH=/bin", "WETBENCH_ARRAY_KAPPA=7", "WETBENCH_SEED=5", "WETBENCH_OPTIMIZE_GRID=90"});
    CHECK(c.get_long("array", "antennas", 0) == 6);
    CHECK(c.get_double("array", "kappa", 0) == 7.0);
    CHECK(c.get_long("optimize", "grid", 0) == 90);
    CHECK_FALSE(c.has("run", "seed"));
    CHECK(code_of([] { Config().merge_environment({"WETBENCH_ARRAY_BOGUS=1"}); }) == Errc::Config);
    CHECK(code_of([] { Config().merge_environment({"WETBENCH_NOPE=1"}); }) == Errc::Config);
}

TEST_CASE("hash ignores thread count and output directory")
{
    Config a;
    a.merge_text("[run]\nseed = 3\nthreads = 1\nout = x\n[array]\nkappa = 2\n", "a");
    Config b;
    b.merge_text("[array]\nkappa = 2\n[run]\nthreads = 8\nseed = 3\nout = y\n", "b");
    CHECK(a.hash() == b.hash());
    b.set("array", "kappa", "3", "flag");
    CHECK(a.hash() != b.hash());
}

TEST_CASE("embedded presets parse")
{
    const auto names = preset_names();
    for (const char *n : {"paper-table2", "paper-appendixB", "paper-fig10-A", "paper-fig10-B", "paper-fig10-C"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    for (const auto &n : names)
    {
        Config c;
        const auto text = preset_text(n);
        REQUIRE(text.has_value());
        CHECK_NOTHROW(c.merge_text(*text, n));
        CHECK(c.has("run", "kind"));
    }
    CHECK_FALSE(preset_text("missing").has_value());
}

TEST_CASE("exit code mapping")
{
    CHECK(exit_code_for(Errc::Config) == exit_config);
    CHECK(exit_code_for(Errc::OutOfRange) == exit_config);
    CHECK(exit_code_for(Errc::Io) == exit_io);
    CHECK(exit_code_for(Errc::NonConvergence) == exit_numerical);
    CHECK(exit_code_for(Errc::FactorizationFailure) == exit_numerical);
    CHECK(exit_code_for(Errc::BudgetExceeded) == exit_numerical);
}

TEST_CASE("commands write deterministic CSV")
{
    const auto dir = std::filesystem::temp_directory_path() / "wetbench_test_config";
    std::filesystem::remove_all(dir);
    Config c;
    c.merge_text("[optimize]\nobjective = min-f-avg\nantennas = 3, 5\nrestarts = 2\ngrid = 48\n", "t");
    c.set("run", "out", (dir / "one").string(), "t");
    const CommandOutput a = run_command("optimize", c);
    c.set("run", "threads", "4", "t");
    c.set("run", "out", (dir / "four").string(), "t");
    const CommandOutput b = run_command("optimize", c);
    REQUIRE(a.files.size() == 1);
    const std::string text = slurp(a.files[0]);
    CHECK(text == slurp(b.files[0]));
    CHECK(text.rfind("# wetbench optimize\n# config_hash=0x", 0) == 0);
    CHECK(text.find("\nobjective,antennas,value,reference,restart,sweeps,psi_over_pi\n") != std::string::npos);
    CHECK(a.summary == b.summary);

    Config wrong;
    wrong.merge_text("[run]\nkind = scenario\n", "w");
    CHECK(code_of([&] { run_command("optimize", wrong); }) == Errc::Config);
    CHECK(code_of([&] { run_command("plot", c); }) == Errc::Config);
    std::filesystem::remove_all(dir);
}
