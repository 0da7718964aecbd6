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
#include <string>
#include <vector>

#include "qfilter/types.hpp"

namespace qfilter {

struct StructureViolation {
    int row = 0;
    int col = 0;
    double magnitude = 0.0;
};

struct StructureReport {
    bool admissible = false;
    /// Unset for a product-form matrix with no cross coupling.
    std::optional<CouplingPair> coupled_pair;
    std::vector<StructureViolation> violations;
    /// Vanishing diagonal entries tolerated under StructureOptions::relax_diagonal.
    std::vector<StructureViolation> warnings;
};

struct StructureOptions {
    double tol = 1e-10;
    /// Downgrade vanishing diagonal entries to warnings. Filters with a zero
    /// coefficient do not need all four diagonal entries.
    bool relax_diagonal = false;
};

/// Checks the only admissible shape of a transfer block that implements a
/// diagonal filter with all four coefficients nonzero:
///   (a) the four diagonal entries are nonzero,
///   (b) U[A0,A1], U[A1,A0], U[B0,B1], U[B1,B0] vanish,
///   (c) at most one cross pair {U[Aj,Bk], U[Bk,Aj]} is nonzero.
/// When several cross pairs are active the one with the largest entry is taken
/// as the coupled pair and the others are reported.
StructureReport check_structure(const Mat4 &u, const StructureOptions &opts = {});

inline StructureReport check_structure(const Mat4 &u, double tol) {
    return check_structure(u, StructureOptions{tol, false});
}

/// check_structure with the diagonal requirement relaxed exactly when the
/// filter has a vanishing coefficient.
StructureReport check_structure_for(const Mat4 &u, const FilterSpec &spec, double tol = 1e-10);

}  // namespace qfilter
