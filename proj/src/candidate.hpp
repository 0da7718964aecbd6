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

#include <cmath>
#include <optional>
#include <string>

#include "qfilter/filtercore.hpp"

namespace qfilter::detail {

/// Turns squared attenuation factors into a Solution if the resulting
/// transfer block is feasible. Infeasible candidates are dropped, never
/// clamped; only rounding above 1 by less than kFeasibilitySlack is trimmed.
inline std::optional<Solution> make_candidate(const FilterSpec &spec, CouplingPair coupling, double tau_a2,
                                              double tau_b2, cplx x, cplx y, std::string branch) {
    auto finite = [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
    if (!std::isfinite(tau_a2) || !std::isfinite(tau_b2) || !finite(x) || !finite(y)) {
        return std::nullopt;
    }
    if (tau_a2 < 0.0 || tau_b2 < 0.0 || tau_a2 > 1.0 + kFeasibilitySlack || tau_b2 > 1.0 + kFeasibilitySlack) {
        return std::nullopt;
    }
    Solution sol;
    sol.coupling = coupling;
    sol.tau_a = std::min(1.0, std::sqrt(tau_a2));
    sol.tau_b = std::min(1.0, std::sqrt(tau_b2));
    sol.x = x;
    sol.y = y;
    sol.branch = std::move(branch);

    const SubmatrixAB u = build_submatrix(spec, sol);
    if (!matrix_rows_feasible(u.entries)) {
        return std::nullopt;
    }
    const double scale = coupling_template(spec, coupling).pl_scale;
    sol.p_l = sol.tau_a * sol.tau_a * sol.tau_b * sol.tau_b * scale;
    sol.saturated = saturated_constraints(u, sol.tau_a, sol.tau_b);
    return sol;
}

inline double sq(double v) { return v * v; }

}  // namespace qfilter::detail
