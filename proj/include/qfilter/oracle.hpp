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
#include <vector>

#include "qfilter/types.hpp"

namespace qfilter {

struct OracleConfig {
    /// Grid resolution along each search axis, >= 8.
    int grid_points_per_axis = 64;
    /// Zoomed passes after the initial full-box pass, >= 1.
    int refinement_rounds = 12;
    /// Each zoomed pass spans this fraction of the previous window, in (0, 1).
    double shrink_factor = 0.25;
    /// Refinement stops early once every normalized window is below this.
    double target_window = 1e-10;

    void validate() const;
};

struct OracleRun {
    Solution best;
    /// Best P_L after each pass (initial pass first); non-decreasing.
    std::vector<double> history;
    /// Window width after the last pass, relative to the starting box.
    double final_window = 1.0;
    int passes = 0;
};

/// Grid-and-refine maximization of P_L for one coupling template.
///
/// Searches |x| (and arg x for complex filters) together with tau_b as a
/// fraction of its largest feasible value; y follows from the fixed product
/// x*y, and tau_a is the largest value allowed by the row norms and the
/// overlap bound of every A/B row pair. Every point it returns is feasible, so
/// the result is a lower bound on the true optimum.
///
/// Throws Error(DegenerateTemplate) or Error(NoFeasiblePoint).
OracleRun oracle_search(const FilterSpec &spec, CouplingPair coupling, const OracleConfig &cfg = {});

Solution oracle_max_pl(const FilterSpec &spec, CouplingPair coupling, const OracleConfig &cfg = {});

struct OracleSweep {
    /// Per-coupling optimum, unset where the template is degenerate.
    std::vector<std::pair<CouplingPair, std::optional<Solution>>> per_coupling;
    std::optional<Solution> best;
};

/// oracle_max_pl over every coupling, keeping the maximum.
OracleSweep oracle_all_couplings(const FilterSpec &spec, const OracleConfig &cfg = {});

struct CertifyReport {
    double gap = 0.0;
    bool ok = false;
    Solution oracle;
};

/// gap = analytic.p_l - oracle.p_l for the analytic coupling; ok iff
/// -1e-6 <= gap <= 1e-3.
CertifyReport oracle_certify(const FilterSpec &spec, const Solution &analytic, const OracleConfig &cfg = {});

}  // namespace qfilter
