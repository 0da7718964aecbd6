// Copyright 2026 The qfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfilter/types.hpp"

namespace qfilter {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitResidual = 1,
    kExitInvalid = 2,
    kExitNoFeasible = 3,
};

/// Parses "re", "imj", "re+imj" or "re-imj" ("i" is accepted for "j").
std::optional<cplx> parse_complex(std::string_view text);

/// Runs the qfilter command line; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qfilter
