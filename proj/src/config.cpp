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

#include "wetbench/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace wetbench
{

namespace
{

const std::map<std::string, std::vector<std::string>> &schema()
{
    static const std::map<std::string, std::vector<std::string>> table{
        {"run", {"kind", "seed", "threads", "out", "samples"}},
        {"array", {"antennas", "kappa", "phi", "phi0", "correlation", "tau", "rho"}},
        {"harvester", {"g_max", "a", "b", "xi0_dbm", "outage_on"}},
        {"scheme", {"schemes", "beta_dbm", "shift"}},
        {"curves", {"quantity", "parameter", "values", "antennas"}},
        {"distributions", {"points", "x_max"}},
        {"optimize", {"objective", "antennas", "restarts", "grid", "max_sweeps"}},
        {"validate",
         {"antennas", "kappas", "phis", "psi", "trials", "samples", "bins", "lo", "hi", "target", "gram_dim",
          "analytic", "beta"}},
        {"scenario",
         {"layout", "radius", "count", "min_distance", "clusters", "pathloss_intercept", "pathloss_exponent",
          "rotations_deg", "plans", "samples", "deployment_seed"}},
    };
    return table;
}

std::string trim(std::string_view s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
    {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

bool parse_double(const std::string &s, double &out)
{
    const char *first = s.data();
    const char *last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

} // namespace

const std::vector<std::string> &schema_keys(const std::string &section)
{
    static const std::vector<std::string> none;
    const auto it = schema().find(section);
    return it == schema().end() ? none : it->second;
}

void Config::set(const std::string &section, const std::string &key, std::string value, std::string origin)
{
    const auto it = schema().find(section);
    if (it == schema().end())
        throw Error(Errc::Config, origin + ": unknown section [" + section + "]");
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw Error(Errc::Config, origin + ": unknown key '" + key + "' in section [" + section + "]");
    if (value.empty())
        throw Error(Errc::Config, origin + ": empty value for " + section + "." + key);
    sections_[section][key] = Entry{std::move(value), std::move(origin)};
}

void Config::merge_text(std::string_view text, const std::string &source)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::string section;
    int number = 0;
    while (std::getline(in, line))
    {
        ++number;
        const std::string origin = source + ":" + std::to_string(number);
        const auto hash = line.find_first_of("#;");
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty())
            continue;
        if (body.front() == '[')
        {
            if (body.back() != ']')
                throw Error(Errc::Config, origin + ": malformed section header");
            section = lower(trim(body.substr(1, body.size() - 2)));
            if (schema().find(section) == schema().end())
                throw Error(Errc::Config, origin + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::Config, origin + ": expected 'key = value'");
        if (section.empty())
            throw Error(Errc::Config, origin + ": key outside of a section");
        set(section, lower(trim(body.substr(0, eq))), trim(body.substr(eq + 1)), origin);
    }
}

void Config::merge_environment(const std::vector<std::string> &environment)
{
    constexpr std::string_view prefix = "WETBENCH_";
    for (const auto &entry : environment)
    {
        if (entry.rfind(prefix, 0) != 0)
            continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            continue;
        const std::string name = entry.substr(0, eq);
        const std::string rest = lower(name.substr(prefix.size()));
        const std::string value = entry.substr(eq + 1);
        // Flag shortcuts are handled by the caller.
        if (rest == "seed" || rest == "threads" || rest == "out" || rest == "preset" || rest == "config")
            continue;
        bool matched = false;
        for (const auto &[section, keys] : schema())
        {
            if (rest.rfind(section + "_", 0) != 0)
                continue;
            set(section, rest.substr(section.size() + 1), value, "env " + name);
            matched = true;
            break;
        }
        if (!matched)
            throw Error(Errc::Config, "env " + name + ": does not name a configuration key");
    }
}

bool Config::has(const std::string &section, const std::string &key) const { return find(section, key) != nullptr; }

const Config::Entry *Config::find(const std::string &section, const std::string &key) const
{
    const auto s = sections_.find(section);
    if (s == sections_.end())
        return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

void Config::fail(const std::string &section, const std::string &key, const std::string &message) const
{
    const Entry *e = find(section, key);
    const std::string where = e ? e->origin + ": " : std::string();
    throw Error(Errc::Config, where + section + "." + key + ": " + message);
}

std::string Config::get_string(const std::string &section, const std::string &key, const std::string &fallback) const
{
    const Entry *e = find(section, key);
    return e ? e->value : fallback;
}

double Config::get_double(const std::string &section, const std::string &key, double fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    double v = 0.0;
    if (!parse_double(e->value, v))
        fail(section, key, "expected a number, got '" + e->value + "'");
    return v;
}

long Config::get_long(const std::string &section, const std::string &key, long fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    double v = 0.0;
    // Accept 2e5-style integers.
    if (!parse_double(e->value, v) || v != std::floor(v) || std::abs(v) > 9e15)
        fail(section, key, "expected an integer, got '" + e->value + "'");
    return static_cast<long>(v);
}

std::uint64_t Config::get_u64(const std::string &section, const std::string &key, std::uint64_t fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    std::uint64_t v = 0;
    const char *first = e->value.data();
    const char *last = first + e->value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        fail(section, key, "expected an unsigned 64-bit integer, got '" + e->value + "'");
    return v;
}

bool Config::get_bool(const std::string &section, const std::string &key, bool fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    const std::string v = lower(e->value);
    if (v == "true" || v == "yes" || v == "on" || v == "1")
        return true;
    if (v == "false" || v == "no" || v == "off" || v == "0")
        return false;
    fail(section, key, "expected a boolean, got '" + e->value + "'");
}

std::vector<double> Config::get_list(const std::string &section, const std::string &key,
                                     const std::vector<double> &fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    std::vector<double> out;
    for (const auto &item : split(e->value, ','))
    {
        const auto parts = split(item, ':');
        if (parts.size() == 1)
        {
            double v = 0.0;
            if (!parse_double(parts[0], v))
                fail(section, key, "bad list element '" + item + "'");
            out.push_back(v);
            continue;
        }
        double a = 0.0, b = 0.0, step = 0.0;
        if (parts.size() != 3 || !parse_double(parts[0], a) || !parse_double(parts[1], b) ||
            !parse_double(parts[2], step) || !(step > 0.0) || b < a)
            fail(section, key, "bad range '" + item + "', expected start:stop:step with step > 0");
        const long n = static_cast<long>(std::floor((b - a) / step + 1e-9));
        if (n > 1000000)
            fail(section, key, "range '" + item + "' is too long");
        for (long i = 0; i <= n; ++i)
            out.push_back(a + static_cast<double>(i) * step);
    }
    if (out.empty())
        fail(section, key, "list is empty");
    return out;
}

std::vector<std::string> Config::get_words(const std::string &section, const std::string &key,
                                           const std::vector<std::string> &fallback) const
{
    const Entry *e = find(section, key);
    if (!e)
        return fallback;
    auto out = split(e->value, ',');
    if (out.empty())
        fail(section, key, "list is empty");
    return out;
}

std::string Config::canonical() const
{
    std::string out;
    for (const auto &[section, keys] : sections_)
        for (const auto &[key, entry] : keys)
        {
            if (section == "run" && (key == "threads" || key == "out"))
                continue;
            out += section + "." + key + "=" + entry.value + "\n";
        }
    return out;
}

std::uint64_t Config::hash() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical())
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace wetbench
