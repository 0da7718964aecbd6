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

#include <optional>

#include "qfilter/oracle.hpp"
#include "qfilter/types.hpp"

namespace qfilter {

/// Best configuration for any diagonal filter.
///
/// Closed forms are used where they exist: symmetric real filters (A0B0 and
/// B0A1), asymmetric real and phase-symmetric complex filters (A0B0 only).
/// Everything else, including an explicit A1B1 or A0B1 request, goes through
/// the oracle and comes back with method "oracle".
/// Throws Error(InvalidFilter) for magnitudes above 1 and
/// Error(NoFeasiblePoint) when nothing feasible is found.
Solution solve_filter(const FilterSpec &spec, std::optional<CouplingPair> coupling = std::nullopt,
                      const OracleConfig &cfg = {});

}  // namespace qfilter
