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

#ifndef WETBENCH_ERROR_HPP
#define WETBENCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wetbench
{

enum class Errc
{
    OutOfRange,
    NotPositiveSemidefinite,
    FactorizationFailure,
    NegativeInput,
    NonPositive,
    NonConvergence,
    EdgeMismatch,
    Infeasible,
    BudgetExceeded,
    EmptyCandidateSet,
    InvalidPlan,
    Config,
    Io
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept
{
    switch (code)
    {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Errc::FactorizationFailure: return "FactorizationFailure";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::NonPositive: return "NonPositive";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::EdgeMismatch: return "EdgeMismatch";
    case Errc::Infeasible: return "Infeasible";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyCandidateSet: return "EmptyCandidateSet";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::Config: return "ConfigError";
    case Errc::Io: return "IoError";
    }
    return "Unknown";
}

} // namespace wetbench

#endif
