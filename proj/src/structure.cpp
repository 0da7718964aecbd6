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

#include "qfilter/structure.hpp"

#include <cmath>

namespace qfilter {

StructureReport check_structure(const Mat4 &u, const StructureOptions &opts) {
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("check_structure: tol must be positive");
    }
    StructureReport report;
    const double tol = opts.tol;

    for (int i = 0; i < 4; ++i) {
        const double mag = std::abs(u(i, i));
        if (mag <= tol) {
            (opts.relax_diagonal ? report.warnings : report.violations).push_back({i, i, mag});
        }
    }

    for (auto [r, c] : {std::pair{0, 2}, {2, 0}, {1, 3}, {3, 1}}) {
        const double mag = std::abs(u(r, c));
        if (mag > tol) {
            report.violations.push_back({r, c, mag});
        }
    }

    // Cross pairs, each with its two entries U[A,B] and U[B,A].
    struct Active {
        CouplingPair pair;
        double strength;
    };
    std::vector<Active> active;
    for (auto c : kAllCouplings) {
        const auto [a, b] = coupled_modes(c);
        const double s = std::max(std::abs(u(a, b)), std::abs(u(b, a)));
        if (s > tol) {
            active.push_back({c, s});
        }
    }
    if (!active.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < active.size(); ++i) {
            if (active[i].strength > active[best].strength) {
                best = i;
            }
        }
        report.coupled_pair = active[best].pair;
        for (size_t i = 0; i < active.size(); ++i) {
            if (i == best) {
                continue;
            }
            const auto [a, b] = coupled_modes(active[i].pair);
            for (auto [r, c] : {std::pair{a, b}, {b, a}}) {
                const double mag = std::abs(u(r, c));
                if (mag > tol) {
                    report.violations.push_back({r, c, mag});
                }
            }
        }
    }

    report.admissible = report.violations.empty();
    return report;
}

StructureReport check_structure_for(const Mat4 &u, const FilterSpec &spec, double tol) {
    const bool has_zero = std::abs(spec.m00) <= tol || std::abs(spec.m01) <= tol || std::abs(spec.m10) <= tol;
    return check_structure(u, StructureOptions{tol, has_zero});
}

}  // namespace qfilter
