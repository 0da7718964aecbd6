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

#include "qfilter/optsym.hpp"

#include <cmath>
#include <stdexcept>

#include "candidate.hpp"
#include "qfilter/filtercore.hpp"

namespace qfilter {

using detail::make_candidate;
using detail::sq;

namespace {

constexpr double kRegionSlack = 1e-12;
constexpr double kTieTol = 1e-12;

void check_unit_box(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw Error(ErrorKind::InvalidFilter, "symmetric filter parameters must lie in [0, 1]");
    }
}

Solution require(std::optional<Solution> sol, const char *what) {
    if (!sol) {
        throw std::logic_error(std::string("closed-form configuration failed its feasibility check: ") + what);
    }
    return *sol;
}

}  // namespace

bool unit_probability_region(double a, double b) {
    const double b2 = b * b;
    if (a <= b2) {
        return 2.0 * b2 - a <= 1.0 + kRegionSlack;
    }
    return b + std::sqrt(a - b2) <= 1.0 + kRegionSlack;
}

Solution optimize_a0b0(double a, double b) {
    check_unit_box(a, b);
    const FilterSpec spec = FilterSpec::symmetric(a, b);
    const double b2 = b * b;

    if (std::abs(a - b2) <= 1e-12) {
        return require(make_candidate(spec, CouplingPair::A0B0, 1.0, 1.0, 0.0, 0.0,
                                      (a == 1.0 && b == 1.0) ? "identity" : "product"),
                       "product");
    }

    if (a < b2) {
        // x = -y = sqrt(b^2 - a); the coupled block is a rotation scaled by
        // sqrt(2b^2 - a).
        const double x = std::sqrt(b2 - a);
        const double nu2 = 2.0 * b2 - a;
        if (nu2 <= 1.0 + kRegionSlack) {
            return require(make_candidate(spec, CouplingPair::A0B0, 1.0, 1.0, x, -x, "case-i"), "case-i");
        }
        const double tau2 = 1.0 / nu2;
        return require(make_candidate(spec, CouplingPair::A0B0, tau2, tau2, x, -x, "case-ii"), "case-ii");
    }

    const double s = std::sqrt(a - b2);
    if (b + s <= 1.0 + kRegionSlack) {
        return require(make_candidate(spec, CouplingPair::A0B0, 1.0, 1.0, s, s, "case-iii"), "case-iii");
    }
    const double tau2 = 1.0 / sq(b + s);
    return require(make_candidate(spec, CouplingPair::A0B0, tau2, tau2, s, s, "case-iv"), "case-iv");
}

A0B0Bounds a0b0_upper_bounds(double a, double b) {
    check_unit_box(a, b);
    const double b2 = b * b;
    A0B0Bounds out;
    if (a > b2) {
        out.scalar = 1.0 / std::pow(b + std::sqrt(a - b2), 4);
    }
    out.product = 1.0 / sq(b2 + std::abs(b2 - a));
    return out;
}

double bound_a1b1(double a, double b) {
    check_unit_box(a, b);
    if (a == 0.0) {
        return 0.0;
    }
    const double b2 = b * b;
    if (std::abs(a - b2) <= 1e-12) {
        return 1.0;
    }
    double bound = sq(a) / sq(b2 + std::abs(b2 - a));
    if (a > b2) {
        bound = std::min(bound, sq(a) / std::pow(b + std::sqrt(a - b2), 4));
    }
    return bound;
}

std::vector<B0A1Candidate> b0a1_candidates(double a, double b) {
    check_unit_box(a, b);
    if (b == 0.0) {
        throw Error(ErrorKind::DegenerateTemplate, "B0A1 template needs b > 0");
    }
    const FilterSpec spec = FilterSpec::symmetric(a, b);
    const double b2 = b * b;
    std::vector<B0A1Candidate> out;

    // Below, xb is the coupling in the B0 row and ya the one in the A1 row,
    // so xb * ya = b - a/b. Solution::x holds the A-row entry.
    auto push = [&](double tau_a2, double tau_b2, double xb, double ya, const char *label) {
        auto sol = make_candidate(spec, CouplingPair::B0A1, tau_a2, tau_b2, ya, xb, label);
        B0A1Candidate cand;
        cand.feasible = sol.has_value();
        if (sol) {
            cand.solution = *sol;
        } else {
            cand.solution.coupling = CouplingPair::B0A1;
            cand.solution.tau_a = std::sqrt(std::max(0.0, tau_a2));
            cand.solution.tau_b = std::sqrt(std::max(0.0, tau_b2));
            cand.solution.x = ya;
            cand.solution.y = xb;
            cand.solution.p_l = tau_a2 * tau_b2;
            cand.solution.branch = label;
        }
        out.push_back(std::move(cand));
    };

    if (std::abs(a - b2) <= 1e-12) {
        push(1.0, 1.0, 0.0, 0.0, "b0a1-product");
    }

    if (a > b2) {
        // A row norm saturated, overlap cancelled: xb + ya a/b = 0.
        const double xb = std::sqrt(a) / b * std::sqrt(a - b2);
        const double ya = -std::sqrt((a - b2) / a);
        const double tau_a2 = a / (2.0 * a - b2);
        const double tau_b2 = std::min(1.0, b2 / (a * (2.0 * a - b2)));
        push(tau_a2, tau_b2, xb, ya, "b0a1-branch1");
    } else if (a < b2 && a > 0.0) {
        // Interior stationary point of the saturated overlap bound.
        const double xb = std::sqrt(a) / b * std::sqrt(b2 - a);
        const double ya = std::sqrt((b2 - a) / a);
        const double denom = sq(std::sqrt(b2 - a) + std::sqrt(a));
        push(a / denom, b2 / a / denom, xb, ya, "b0a1-branch2");
    }

    // tau_b = 1 with the overlap bound saturated; two stationary roots in x.
    auto tau_b_unit = [&](double x2, double p_l, const char *label) {
        if (!(x2 > 0.0) || !std::isfinite(x2)) {
            return;
        }
        const double xb = std::sqrt(x2);
        const double ya = (b - a / b) / xb;
        push(p_l, 1.0, xb, ya, label);
    };
    {
        const double den = 2.0 * a + b - b2;
        tau_b_unit((a + b) * (a - b2) / (b * den), sq(a + b) / sq(den), "b0a1-taub1-root1");
    }
    {
        const double den = b2 + b - 2.0 * a;
        tau_b_unit((b - a) * (b2 - a) / (b * den), sq(a - b) / sq(den), "b0a1-taub1-root2");
    }
    return out;
}

Solution optimize_b0a1(double a, double b) {
    std::optional<Solution> best;
    for (const auto &cand : b0a1_candidates(a, b)) {
        if (cand.feasible && (!best || cand.solution.p_l > best->p_l)) {
            best = cand.solution;
        }
    }
    if (!best) {
        throw Error(ErrorKind::NoFeasiblePoint, "no feasible B0A1 candidate");
    }
    return *best;
}

const Solution &SymmetricComparison::best() const {
    if (winner == CouplingPair::B0A1 && b0a1) {
        return *b0a1;
    }
    return a0b0;
}

SymmetricComparison compare_symmetric(double a, double b) {
    SymmetricComparison out;
    out.a0b0 = optimize_a0b0(a, b);
    out.a1b1_bound = bound_a1b1(a, b);
    if (b > 0.0) {
        try {
            out.b0a1 = optimize_b0a1(a, b);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NoFeasiblePoint && e.kind() != ErrorKind::DegenerateTemplate) {
                throw;
            }
        }
    }
    if (!out.b0a1) {
        out.winner = CouplingPair::A0B0;
        return out;
    }
    const double diff = out.b0a1->p_l - out.a0b0.p_l;
    if (std::abs(diff) <= kTieTol) {
        out.winner.reset();
    } else {
        out.winner = diff > 0.0 ? CouplingPair::B0A1 : CouplingPair::A0B0;
    }
    return out;
}

Solution optimize_symmetric(double a, double b) { return compare_symmetric(a, b).best(); }

}  // namespace qfilter
