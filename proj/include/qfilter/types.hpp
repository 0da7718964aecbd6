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

#include <array>
#include <complex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qfilter {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using MatX = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

/// Slack applied to every feasibility inequality.
inline constexpr double kFeasibilitySlack = 1e-12;
/// Threshold below which a constraint counts as saturated (equality holds).
inline constexpr double kSaturationTol = 1e-9;

/// Signal modes in storage order. Qubit A lives on (A0, A1), qubit B on (B0, B1).
enum class Mode : int { A0 = 0, B0 = 1, A1 = 2, B1 = 3 };

inline constexpr int mode_index(Mode m) { return static_cast<int>(m); }
inline constexpr int a_mode(int logical) { return logical == 0 ? 0 : 2; }
inline constexpr int b_mode(int logical) { return logical == 0 ? 1 : 3; }
inline constexpr bool is_a_mode(int idx) { return idx == 0 || idx == 2; }

std::string_view mode_name(int idx);
std::optional<int> parse_mode_name(std::string_view name);

enum class ErrorKind {
    NotDiagonal,
    DegenerateM11,
    Infeasible,
    DegenerateTemplate,
    NoFeasiblePoint,
    AsymmetricMagnitudes,
    NotAdmissible,
    InvalidFilter,
    Parse,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// The single pair of modes (one per qubit) allowed to interfere.
enum class CouplingPair { A0B0, A1B1, B0A1, A0B1 };

inline constexpr std::array<CouplingPair, 4> kAllCouplings = {
    CouplingPair::A0B0, CouplingPair::A1B1, CouplingPair::B0A1, CouplingPair::A0B1};

std::string_view coupling_name(CouplingPair c);
std::optional<CouplingPair> parse_coupling(std::string_view name);

/// Row/column indices (A-mode, B-mode) of the coupled pair.
std::pair<int, int> coupled_modes(CouplingPair c);
/// Inverse of coupled_modes; nullopt when (a_idx, b_idx) is not an A/B pair.
std::optional<CouplingPair> coupling_from_modes(int a_idx, int b_idx);

enum class FilterClass { SymmetricReal, AsymmetricReal, ComplexSymmetric, ComplexGeneral };

std::string_view filter_class_name(FilterClass c);

/// Diagonal two-qubit filter diag(m00, m01, m10, 1) in the basis |00>,|01>,|10>,|11>.
/// The first index is qubit A, the second qubit B.
struct FilterSpec {
    cplx m00{1.0};
    cplx m01{1.0};
    cplx m10{1.0};

    static FilterSpec symmetric(double a, double b) { return {a, b, b}; }
    static FilterSpec asymmetric(double a, double b_a, double b_b) { return {a, b_a, b_b}; }

    cplx coefficient(int j, int k) const;
    bool magnitudes_valid() const;
    bool all_real() const;
    FilterClass classify() const;

    bool operator==(const FilterSpec &) const = default;
};

/// Output of an optimizer: one coupling template plus its free parameters.
///
/// The parameters plug into the coupling template built by `build_submatrix`.
/// x is the off-diagonal entry in the coupled A row and y the one in the
/// coupled B row (absolute values, not relative to the diagonal), so x*y is
/// fixed by the filter; tau_a scales the rows of qubit A and tau_b those of
/// qubit B.
struct Solution {
    CouplingPair coupling = CouplingPair::A0B0;
    double tau_a = 1.0;
    double tau_b = 1.0;
    cplx x{0.0};
    cplx y{0.0};
    double p_l = 1.0;
    std::string branch;
    std::set<std::string> saturated;
    std::string method = "analytic";
};

}  // namespace qfilter
