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

/// Optimal A0-B0 coupling for the symmetric real filter diag(a, b, b, 1).
///
/// Four regimes, split by the sign of a - b^2:
///   case-i    a <= b^2, 2b^2 - a <= 1      P_L = 1
///   case-ii   a <= b^2, 2b^2 - a >  1      P_L = (2b^2 - a)^-2
///   case-iii  a >  b^2, b + s <= 1         P_L = 1
///   case-iv   a >  b^2, b + s >  1         P_L = (b + s)^-4
/// with s = sqrt(a - b^2). The branch label is "identity" for a = b = 1 and
/// "product" when a = b^2 within 1e-12 (x = y = 0).
Solution optimize_a0b0(double a, double b);

struct A0B0Bounds {
    /// Only defined for a > b^2.
    std::optional<double> scalar;
    double product = 0.0;

    double tightest() const { return scalar ? std::min(*scalar, product) : product; }
};

/// Upper bounds on P_L for the A0-B0 coupling, from the scalar-product
/// constraint (a > b^2 only) and from the product of the two row norms.
A0B0Bounds a0b0_upper_bounds(double a, double b);

/// Upper bound on P_L for the A1-B1 coupling; reaches 1 only at a = b^2.
double bound_a1b1(double a, double b);

/// One candidate from the B0-A1 enumeration, kept or discarded after the
/// feasibility check.
struct B0A1Candidate {
    Solution solution;
    bool feasible = false;
};

/// Every B0-A1 candidate before filtering, for inspection and tests.
std::vector<B0A1Candidate> b0a1_candidates(double a, double b);

/// Best feasible B0-A1 configuration. Throws Error(DegenerateTemplate) for b = 0.
Solution optimize_b0a1(double a, double b);

struct SymmetricComparison {
    Solution a0b0;
    std::optional<Solution> b0a1;
    double a1b1_bound = 0.0;
    /// A0B0, B0A1, or unset on a tie within 1e-12.
    std::optional<CouplingPair> winner;
    const Solution &best() const;
};

SymmetricComparison compare_symmetric(double a, double b);

/// Maximum over the A0-B0 and B0-A1 couplings. Ties go to A0-B0.
Solution optimize_symmetric(double a, double b);

/// True when some A0-B0 configuration reaches P_L = 1.
bool unit_probability_region(double a, double b);

}  // namespace qfilter
