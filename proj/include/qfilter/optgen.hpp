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

#include "qfilter/types.hpp"

namespace qfilter {

/// Phase-normalized form a e^{i phi}, b, b, 1 of a filter with |m01| = |m10|.
struct CanonicalComplex {
    double a = 0.0;
    double b = 0.0;
    double phi = 0.0;
    /// Mode phase shifts on A0 and B0 that take the filter to canonical form.
    double phase_a0 = 0.0;
    double phase_b0 = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phi);

/// Throws Error(AsymmetricMagnitudes) when |m01| != |m10| beyond 1e-12.
CanonicalComplex canonicalize_complex(const FilterSpec &spec);

/// Optimal A0-B0 coupling for the real filter diag(a, b_a, b_b, 1).
///
/// With b = sqrt(b_a b_b) the candidates are: both attenuations at 1
/// ("asym-unit", two root assignments), tau_a = 1 ("asym-taua1"), tau_b = 1
/// ("asym-taub1") and both free ("asym-free"); the best feasible one wins.
/// Inputs with b_a > b_b are solved with the qubits relabeled and mapped back
/// (branch suffix ":swapped").
Solution optimize_asym_a0b0(double a, double b_a, double b_b);

/// Optimal A0-B0 coupling for diag(a e^{i phi}, b, b, 1) in canonical form.
Solution optimize_complex_a0b0(double a, double b, double phi);

/// Optimal coincidence-basis controlled-phase success probability.
double cp_probability(double phi);

/// optimize_complex_a0b0 for an arbitrary complex filter with |m01| = |m10|;
/// the returned Solution is expressed in the original (non-canonical) phases.
Solution solve_complex_symmetric(const FilterSpec &spec);

}  // namespace qfilter
