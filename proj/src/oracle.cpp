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

#include "qfilter/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qfilter/filtercore.hpp"

namespace qfilter {

void OracleConfig::validate() const {
    if (grid_points_per_axis < 8 || refinement_rounds < 1 || !(shrink_factor > 0.0 && shrink_factor < 1.0) ||
        !(target_window > 0.0)) {
        throw std::invalid_argument("invalid OracleConfig");
    }
}

namespace {

struct Point {
    double p_l = -1.0;
    double tau_a = 0.0;
    double tau_b = 0.0;
    cplx x{0.0};
    cplx y{0.0};
};

/// P_L of one (x, tau_b fraction) point with tau_a pushed to its limit.
class Objective {
  public:
    Objective(const FilterSpec &spec, CouplingPair coupling)
        : tmpl_(coupling_template(spec, coupling)) {
        // P_L scale read off the coincidence map at unit attenuation; w11 does
        // not depend on how the fixed product x*y is split.
        const cplx x0 = 1.0;
        const SubmatrixAB u = build_submatrix(spec, coupling, 1.0, 1.0, x0, tmpl_.product / x0);
        scale_ = std::norm(coincidence_map(u).w(3, 3));
    }

    Point evaluate(cplx x, double lambda) const {
        Point out;
        cplx y;
        if (std::abs(x) == 0.0) {
            if (std::abs(tmpl_.product) != 0.0) {
                return out;
            }
            y = 0.0;
        } else {
            y = tmpl_.product / x;
        }
        // Rows at unit attenuation: coupled A row (cad, x), coupled B row
        // (y, cbd), plus one single-entry row per qubit.
        const double na = std::norm(tmpl_.coupled_a_diag) + std::norm(x);
        const double nb = std::norm(y) + std::norm(tmpl_.coupled_b_diag);
        const double na_free = std::norm(tmpl_.free_a_diag);
        const double nb_free = std::norm(tmpl_.free_b_diag);
        const double overlap = std::norm(tmpl_.coupled_a_diag * std::conj(y) + x * std::conj(tmpl_.coupled_b_diag));

        double tb2_max = 1.0;
        if (nb > 0.0) {
            tb2_max = std::min(tb2_max, 1.0 / nb);
        }
        if (nb_free > 0.0) {
            tb2_max = std::min(tb2_max, 1.0 / nb_free);
        }
        const double tb2 = lambda * lambda * tb2_max;

        double ta2 = 1.0;
        if (na > 0.0) {
            ta2 = std::min(ta2, 1.0 / na);
        }
        if (na_free > 0.0) {
            ta2 = std::min(ta2, 1.0 / na_free);
        }
        // tau_a^2 tau_b^2 |o|^2 <= (1 - tau_a^2 na)(1 - tau_b^2 nb) is linear in tau_a^2.
        const double k = std::max(0.0, 1.0 - tb2 * nb);
        const double den = tb2 * overlap + na * k;
        if (den > 0.0) {
            ta2 = std::min(ta2, k / den);
        }
        out.tau_a = std::sqrt(ta2);
        out.tau_b = std::sqrt(tb2);
        out.p_l = ta2 * tb2 * scale_;
        out.x = x;
        out.y = y;
        return out;
    }

    double x_extent() const { return 4.0 * std::max(1.0, std::sqrt(std::abs(tmpl_.product))); }

  private:
    CouplingTemplate tmpl_;
    double scale_ = 1.0;
};

struct Axis {
    double lo;
    double hi;
    double full_lo;
    double full_hi;

    double width() const { return hi - lo; }

    void zoom(double center, double factor) {
        const double w = width() * factor;
        lo = center - 0.5 * w;
        hi = center + 0.5 * w;
        if (lo < full_lo) {
            hi += full_lo - lo;
            lo = full_lo;
        }
        if (hi > full_hi) {
            lo -= hi - full_hi;
            hi = full_hi;
        }
        lo = std::max(lo, full_lo);
    }

    double at(int i, int n) const { return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1); }
};

}  // namespace

OracleRun oracle_search(const FilterSpec &spec, CouplingPair coupling, const OracleConfig &cfg) {
    cfg.validate();
    const Objective objective(spec, coupling);
    const bool complex_search = !spec.all_real();
    const int n = cfg.grid_points_per_axis;

    // Past 4 sqrt(max(1, |x y|)) the A row norm alone caps tau_a^2 below 1/16.
    Axis mag{0.0, objective.x_extent(), 0.0, objective.x_extent()};
    Axis phase{-std::numbers::pi, std::numbers::pi, -std::numbers::pi, std::numbers::pi};
    Axis frac{0.0, 1.0, 0.0, 1.0};
    const double full_mag = mag.width();
    const double full_phase = phase.width();

    Point best;
    double best_mag = 0.0;
    double best_phase = 0.0;
    double best_frac = 0.0;
    OracleRun run;

    const int phase_points = complex_search ? n : 1;
    double window = 1.0;
    for (int pass = 0; pass <= cfg.refinement_rounds; ++pass) {
        for (int i = 0; i < n; ++i) {
            const double r = mag.at(i, n);
            for (int p = 0; p < phase_points; ++p) {
                const double theta = complex_search ? phase.at(p, n) : 0.0;
                const cplx x = complex_search ? std::polar(r, theta) : cplx(r, 0.0);
                for (int k = 0; k < n; ++k) {
                    const double lambda = frac.at(k, n);
                    const Point pt = objective.evaluate(x, lambda);
                    if (pt.p_l > best.p_l) {
                        best = pt;
                        best_mag = r;
                        best_phase = theta;
                        best_frac = lambda;
                    }
                }
            }
        }
        run.history.push_back(best.p_l);
        run.passes = pass + 1;
        window = std::max({mag.width() / full_mag, complex_search ? phase.width() / full_phase : 0.0, frac.width()});
        if (pass == cfg.refinement_rounds || window < cfg.target_window) {
            break;
        }
        mag.zoom(best_mag, cfg.shrink_factor);
        if (complex_search) {
            phase.zoom(best_phase, cfg.shrink_factor);
        }
        frac.zoom(best_frac, cfg.shrink_factor);
    }
    run.final_window = window;

    if (!(best.p_l > 0.0)) {
        throw Error(ErrorKind::NoFeasiblePoint,
                    "oracle found no point with positive P_L for " + std::string(coupling_name(coupling)));
    }

    Solution& sol = run.best;
    sol.coupling = coupling;
    sol.tau_a = std::min(1.0, best.tau_a);
    sol.tau_b = std::min(1.0, best.tau_b);
    sol.x = best.x;
    sol.y = best.y;
    sol.p_l = best.p_l;
    sol.branch = "oracle";
    sol.method = "oracle";
    sol.saturated = saturated_constraints(build_submatrix(spec, sol), sol.tau_a, sol.tau_b);
    return run;
}

Solution oracle_max_pl(const FilterSpec &spec, CouplingPair coupling, const OracleConfig &cfg) {
    return oracle_search(spec, coupling, cfg).best;
}

OracleSweep oracle_all_couplings(const FilterSpec &spec, const OracleConfig &cfg) {
    OracleSweep out;
    for (auto c : kAllCouplings) {
        std::optional<Solution> sol;
        try {
            sol = oracle_max_pl(spec, c, cfg);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateTemplate && e.kind() != ErrorKind::NoFeasiblePoint) {
                throw;
            }
        }
        if (sol && (!out.best || sol->p_l > out.best->p_l)) {
            out.best = sol;
        }
        out.per_coupling.emplace_back(c, std::move(sol));
    }
    return out;
}

CertifyReport oracle_certify(const FilterSpec &spec, const Solution &analytic, const OracleConfig &cfg) {
    CertifyReport report;
    report.oracle = oracle_max_pl(spec, analytic.coupling, cfg);
    report.gap = analytic.p_l - report.oracle.p_l;
    report.ok = report.gap >= -1e-6 && report.gap <= 1e-3;
    return report;
}

}  // namespace qfilter
