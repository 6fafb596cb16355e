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

#ifndef WETBENCH_CONFIG_HPP
#define WETBENCH_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wetbench/error.hpp"

namespace wetbench
{

/// Sectioned key = value experiment configuration.
///
///   # comment
///   [array]
///   antennas = 8
///
/// Keys are validated against a fixed schema; unknown sections or keys are
/// rejected with the line they came from. Later assignments override
/// earlier ones, which is how presets, files, environment variables and
/// command-line flags are layered.
class Config
{
public:
    struct Entry
    {
        std::string value;
        std::string origin;   // "file:line", "env NAME", "--flag", ...
    };

    /// Parses text and merges it over the current contents.
    void merge_text(std::string_view text, const std::string &source);

    /// Sets one key with validation against the schema.
    void set(const std::string &section, const std::string &key, std::string value, std::string origin);

    /// Applies WETBENCH_<SECTION>_<KEY> variables from the given environment
    /// (NAME=VALUE strings).
    void merge_environment(const std::vector<std::string> &environment);

    bool has(const std::string &section, const std::string &key) const;
    const Entry *find(const std::string &section, const std::string &key) const;

    std::string get_string(const std::string &section, const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &section, const std::string &key, double fallback) const;
    long get_long(const std::string &section, const std::string &key, long fallback) const;
    std::uint64_t get_u64(const std::string &section, const std::string &key, std::uint64_t fallback) const;
    bool get_bool(const std::string &section, const std::string &key, bool fallback) const;

    /// Comma separated doubles; "a:b:step" expands to an inclusive range.
    std::vector<double> get_list(const std::string &section, const std::string &key,
                                 const std::vector<double> &fallback) const;
    std::vector<std::string> get_words(const std::string &section, const std::string &key,
                                       const std::vector<std::string> &fallback) const;

    /// Canonical "section.key=value" lines, sorted, without the keys that do
    /// not affect results (threads, output directory).
    std::string canonical() const;

    /// 64-bit FNV-1a of canonical().
    std::uint64_t hash() const;

    /// Throws Errc::Config citing the entry's origin.
    [[noreturn]] void fail(const std::string &section, const std::string &key, const std::string &message) const;

private:
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

/// Names of the embedded presets.
std::vector<std::string> preset_names();

/// Embedded preset text, or nullopt if unknown.
std::optional<std::string_view> preset_text(std::string_view name);

/// Known keys of a section; empty if the section is unknown.
const std::vector<std::string> &schema_keys(const std::string &section);

} // namespace wetbench

#endif
