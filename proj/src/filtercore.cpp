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

#include "qfilter/filtercore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qfilter {

CoincidenceMap coincidence_map(const Mat4 &u) {
    CoincidenceMap out;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            const int aj = a_mode(j);
            const int bk = b_mode(k);
            for (int m = 0; m < 2; ++m) {
                for (int n = 0; n < 2; ++n) {
                    const int am = a_mode(m);
                    const int bn = b_mode(n);
                    out.w(pair_index(m, n), pair_index(j, k)) = u(aj, am) * u(bk, bn) + u(aj, bn) * u(bk, am);
                }
            }
        }
    }
    return out;
}

CoincidenceMap coincidence_map(const MatX &u) {
    if (u.rows() < 4 || u.cols() < 4) {
        throw std::invalid_argument("coincidence_map needs at least the four signal modes");
    }
    return coincidence_map(Mat4(u.topLeftCorner<4, 4>()));
}

ExtractedFilter extract_filter(const CoincidenceMap &w, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("extract_filter: tol must be positive");
    }
    ExtractedFilter out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r != c) {
                out.max_off_diagonal = std::max(out.max_off_diagonal, std::abs(w.w(r, c)));
            }
        }
    }
    if (out.max_off_diagonal > tol) {
        std::ostringstream msg;
        msg << "largest off-diagonal coincidence amplitude " << out.max_off_diagonal << " exceeds " << tol;
        throw Error(ErrorKind::NotDiagonal, msg.str());
    }
    const cplx w11 = w.w(3, 3);
    if (std::abs(w11) <= tol) {
        throw Error(ErrorKind::DegenerateM11, "the |11> amplitude vanishes");
    }
    out.p_l = std::norm(w11);
    out.global_phase = std::arg(w11);
    for (int i = 0; i < 4; ++i) {
        out.m[i] = w.w(i, i) / w11;
    }
    return out;
}

bool rows_feasible(const Eigen::RowVectorXcd &v0, const Eigen::RowVectorXcd &v1) {
    const double n0 = v0.squaredNorm();
    const double n1 = v1.squaredNorm();
    if (n0 > 1.0 + kFeasibilitySlack || n1 > 1.0 + kFeasibilitySlack) {
        return false;
    }
    // sum_k v0_k conj(v1_k), the overlap the completed rows must cancel.
    const cplx overlap = v1.dot(v0);
    const double rhs = std::max(0.0, 1.0 - n0) * std::max(0.0, 1.0 - n1);
    return std::norm(overlap) <= rhs + kFeasibilitySlack;
}

bool submatrix_feasible(const Mat2 &v) { return rows_feasible(v.row(0), v.row(1)); }

bool matrix_rows_feasible(const Mat4 &u) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!rows_feasible(u.row(i), u.row(j))) {
                return false;
            }
        }
    }
    return true;
}

double spectral_norm(const MatX &u) {
    Eigen::JacobiSVD<MatX> svd(u);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

MatX complete_to_unitary(const Mat4 &u) {
    Eigen::JacobiSVD<Mat4> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector4d sigma = svd.singularValues();
    if (sigma(0) > 1.0 + 1e-10) {
        std::ostringstream msg;
        msg << "largest singular value " << sigma(0) << " exceeds 1";
        throw Error(ErrorKind::Infeasible, msg.str());
    }
    Eigen::Vector4d defect;
    for (int i = 0; i < 4; ++i) {
        const double s = std::min(sigma(i), 1.0);
        defect(i) = std::sqrt(std::max(0.0, (1.0 - s) * (1.0 + s)));
    }
    const Mat4 &left = svd.matrixU();
    const Mat4 &right = svd.matrixV();
    const Mat4 d_row = left * defect.cast<cplx>().asDiagonal() * left.adjoint();
    const Mat4 d_col = right * defect.cast<cplx>().asDiagonal() * right.adjoint();

    MatX q(8, 8);
    q.topLeftCorner<4, 4>() = u;
    q.topRightCorner<4, 4>() = -d_row;
    q.bottomLeftCorner<4, 4>() = d_col;
    q.bottomRightCorner<4, 4>() = u.adjoint();
    return q;
}

double unitarity_residual(const MatX &q) {
    const MatX diff = q * q.adjoint() - MatX::Identity(q.rows(), q.cols());
    return diff.cwiseAbs().maxCoeff();
}

CouplingTemplate coupling_template(const FilterSpec &spec, CouplingPair coupling) {
    auto require_nonzero = [&](cplx v, const char *name) {
        if (std::abs(v) <= 1e-300) {
            throw Error(ErrorKind::DegenerateTemplate,
                        std::string(coupling_name(coupling)) + " template divides by " + name + " = 0");
        }
    };
    const cplx m00 = spec.m00;
    const cplx m01 = spec.m01;
    const cplx m10 = spec.m10;
    switch (coupling) {
        case CouplingPair::A0B0:
            return {coupling, m01, m10, 1.0, 1.0, m00 - m01 * m10, 1.0};
        case CouplingPair::A1B1:
            require_nonzero(m00, "m00");
            return {coupling, m10 / m00, m01 / m00, 1.0, 1.0, 1.0 / m00 - m01 * m10 / (m00 * m00),
                    1.0 / std::norm(m00)};
        case CouplingPair::B0A1:
            require_nonzero(m01, "m01");
            return {coupling, 1.0, m00 / m01, m01, 1.0, m10 - m00 / m01, 1.0};
        case CouplingPair::A0B1:
            require_nonzero(m10, "m10");
            return {coupling, m00 / m10, 1.0, 1.0, m10, m01 - m00 / m10, 1.0};
    }
    throw std::logic_error("unknown coupling");
}

SubmatrixAB build_submatrix(const FilterSpec &spec, CouplingPair coupling, double tau_a, double tau_b,
                            cplx x, cplx y) {
    const CouplingTemplate t = coupling_template(spec, coupling);
    const auto [pa, pb] = coupled_modes(coupling);
    // The uncoupled modes are the partners of the coupled ones on each qubit.
    const int fa = pa == 0 ? 2 : 0;
    const int fb = pb == 1 ? 3 : 1;

    SubmatrixAB out;
    out.coupling = coupling;
    out.entries = Mat4::Zero();
    out.entries(pa, pa) = tau_a * t.coupled_a_diag;
    out.entries(pa, pb) = tau_a * x;
    out.entries(pb, pa) = tau_b * y;
    out.entries(pb, pb) = tau_b * t.coupled_b_diag;
    out.entries(fa, fa) = tau_a * t.free_a_diag;
    out.entries(fb, fb) = tau_b * t.free_b_diag;
    return out;
}

SubmatrixAB build_submatrix(const FilterSpec &spec, const Solution &sol) {
    return build_submatrix(spec, sol.coupling, sol.tau_a, sol.tau_b, sol.x, sol.y);
}

std::set<std::string> saturated_constraints(const SubmatrixAB &u, double tau_a, double tau_b) {
    std::set<std::string> out;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(u.entries.row(i).squaredNorm() - 1.0) <= kSaturationTol) {
            out.insert("norm:" + std::string(mode_name(i)));
        }
    }
    const auto [a, b] = coupled_modes(u.coupling);
    const double na = u.entries.row(a).squaredNorm();
    const double nb = u.entries.row(b).squaredNorm();
    const double slack = (1.0 - na) * (1.0 - nb) - std::norm(u.entries.row(b).dot(u.entries.row(a)));
    if (std::abs(slack) <= kSaturationTol) {
        out.insert("scalar:" + std::string(mode_name(a)) + "/" + std::string(mode_name(b)));
    }
    if (std::abs(tau_a - 1.0) <= kSaturationTol) {
        out.insert("tau_a");
    }
    if (std::abs(tau_b - 1.0) <= kSaturationTol) {
        out.insert("tau_b");
    }
    return out;
}

VerifyReport verify_solution(const FilterSpec &spec, const Solution &sol) {
    const SubmatrixAB u = build_submatrix(spec, sol);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!rows_feasible(u.entries.row(i), u.entries.row(j))) {
                std::ostringstream msg;
                msg << "rows " << mode_name(i) << "/" << mode_name(j) << " violate the norm or scalar-product bound";
                throw Error(ErrorKind::Infeasible, msg.str());
            }
        }
    }
    const MatX q = complete_to_unitary(u);

    VerifyReport report;
    report.unitarity_residual = unitarity_residual(q);
    report.recovered = extract_filter(coincidence_map(q), 1e-10);

    const std::array<cplx, 4> target = {spec.m00, spec.m01, spec.m10, 1.0};
    double residual = std::abs(report.recovered.p_l - sol.p_l);
    std::ostringstream details;
    for (int i = 0; i < 4; ++i) {
        const double d = std::abs(report.recovered.m[i] - target[i]);
        if (d > 1e-10) {
            details << "m" << i / 2 << i % 2 << " off by " << d << "; ";
        }
        residual = std::max(residual, d);
    }
    if (std::abs(report.recovered.p_l - sol.p_l) > 1e-10) {
        details << "P_L recovered " << report.recovered.p_l << " vs claimed " << sol.p_l << "; ";
    }
    report.max_residual = residual;
    report.ok = residual <= 1e-10 && report.unitarity_residual < 1e-12;
    report.details = details.str();
    return report;
}

}  // namespace qfilter
