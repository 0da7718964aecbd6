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

#include <set>
#include <string>
#include <vector>

#include "qfilter/types.hpp"

namespace qfilter {

/// 4x4 transfer block over the signal modes (A0, B0, A1, B1).
///
/// Entry (j, k) is the amplitude for a photon entering mode j to leave in
/// mode k, i.e. c_j,in^dagger = sum_k U(j, k) c_k,out^dagger. Under this
/// convention a sequence of optical elements multiplies left to right.
struct SubmatrixAB {
    Mat4 entries = Mat4::Identity();
    CouplingPair coupling = CouplingPair::A0B0;
};

/// Flat index of the two-qubit basis state |j k> in (0,0),(0,1),(1,0),(1,1) order.
inline constexpr int pair_index(int j, int k) { return 2 * j + k; }

/// Two-photon coincidence amplitudes.
///
/// w(pair_index(m, n), pair_index(j, k)) is the amplitude from input
/// |1_Aj, 1_Bk> to output |1_Am, 1_Bn>: rows are outputs, columns inputs.
struct CoincidenceMap {
    Mat4 w = Mat4::Zero();
};

/// Coincidence amplitudes of any transfer matrix with at least four modes;
/// only the signal-signal block is read.
CoincidenceMap coincidence_map(const MatX &u);
CoincidenceMap coincidence_map(const Mat4 &u);
inline CoincidenceMap coincidence_map(const SubmatrixAB &u) { return coincidence_map(u.entries); }

struct ExtractedFilter {
    double p_l = 0.0;
    /// m[pair_index(j, k)], normalized so that m[3] == 1.
    std::array<cplx, 4> m{};
    /// arg of the |11> -> |11> amplitude.
    double global_phase = 0.0;
    double max_off_diagonal = 0.0;
};

/// Reads off (P_L, m) from a diagonal coincidence map.
/// Throws Error(NotDiagonal) or Error(DegenerateM11).
ExtractedFilter extract_filter(const CoincidenceMap &w, double tol);

/// True iff the 2x2 block extends to a unitary (row norms and scalar-product bound).
bool submatrix_feasible(const Mat2 &v);

/// Same test on two arbitrary rows of a larger matrix.
bool rows_feasible(const Eigen::RowVectorXcd &v0, const Eigen::RowVectorXcd &v1);

/// All row pairs of u pass rows_feasible.
bool matrix_rows_feasible(const Mat4 &u);

/// Largest singular value.
double spectral_norm(const MatX &u);

/// Embeds u as the top-left block of an 8x8 unitary (four vacuum ancillas).
///
///   Q = [ U              -(I - U U^+)^1/2 ]
///       [ (I - U^+ U)^1/2        U^+       ]
///
/// Both square roots come from one SVD of u so the off-diagonal blocks
/// intertwine exactly. The identity dilates to the identity. Throws Error(Infeasible) if a singular value exceeds
/// 1 + 1e-10.
MatX complete_to_unitary(const Mat4 &u);
inline MatX complete_to_unitary(const SubmatrixAB &u) { return complete_to_unitary(u.entries); }

/// max |Q Q^+ - I|.
double unitarity_residual(const MatX &q);

/// Template coefficients of a coupling for a given filter.
///
/// For every template, A rows scale with tau_a and B rows with tau_b.
/// `product` is the value x*y must take; `pl_scale` converts tau_a^2 tau_b^2
/// into P_L. Throws Error(DegenerateTemplate) when the template divides by a
/// vanishing coefficient.
struct CouplingTemplate {
    CouplingPair coupling;
    /// Diagonal entries of the coupled A row and B row at tau = 1.
    cplx coupled_a_diag;
    cplx coupled_b_diag;
    /// Diagonal entries of the two uncoupled modes at tau = 1.
    cplx free_a_diag;
    cplx free_b_diag;
    cplx product;
    double pl_scale;
};

CouplingTemplate coupling_template(const FilterSpec &spec, CouplingPair coupling);

/// Transfer block implied by a Solution for `spec`.
SubmatrixAB build_submatrix(const FilterSpec &spec, CouplingPair coupling, double tau_a,
                            double tau_b, cplx x, cplx y);
SubmatrixAB build_submatrix(const FilterSpec &spec, const Solution &sol);

/// Constraints holding with equality (within kSaturationTol): "norm:<mode>"
/// for a unit-norm row, "scalar:<mode>/<mode>" for a saturated row-pair
/// bound, "tau_a"/"tau_b" for a unit attenuation factor.
std::set<std::string> saturated_constraints(const SubmatrixAB &u, double tau_a, double tau_b);

struct VerifyReport {
    bool ok = false;
    double max_residual = 0.0;
    double unitarity_residual = 0.0;
    ExtractedFilter recovered;
    std::string details;
};

/// End-to-end check: template -> feasibility -> dilation -> coincidence
/// simulation -> extraction, compared against (spec, sol.p_l) at 1e-10.
/// Infeasible or non-diagonal circuits throw, naming the failing constraint.
VerifyReport verify_solution(const FilterSpec &spec, const Solution &sol);

}  // namespace qfilter
