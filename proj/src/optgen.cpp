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

#include "qfilter/optgen.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "candidate.hpp"
#include "qfilter/filtercore.hpp"

namespace qfilter {

using detail::make_candidate;
using detail::sq;

double wrap_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double out = std::remainder(phi, two_pi);
    if (out <= -std::numbers::pi) {
        out += two_pi;
    }
    return out;
}

CanonicalComplex canonicalize_complex(const FilterSpec &spec) {
    const double b01 = std::abs(spec.m01);
    const double b10 = std::abs(spec.m10);
    if (std::abs(b01 - b10) > 1e-12) {
        throw Error(ErrorKind::AsymmetricMagnitudes, "|m01| and |m10| differ");
    }
    CanonicalComplex out;
    out.a = std::abs(spec.m00);
    out.b = b01;
    const double arg00 = out.a > 0.0 ? std::arg(spec.m00) : 0.0;
    const double arg01 = b01 > 0.0 ? std::arg(spec.m01) : 0.0;
    const double arg10 = b10 > 0.0 ? std::arg(spec.m10) : 0.0;
    out.phi = wrap_phase(arg00 - arg01 - arg10);
    out.phase_a0 = wrap_phase(-arg01);
    out.phase_b0 = wrap_phase(-arg10);
    return out;
}

namespace {

Solution asym_ordered(double a, double b_a, double b_b) {
    const FilterSpec spec = FilterSpec::asymmetric(a, b_a, b_b);
    const double b2 = b_a * b_b;
    const double b = std::sqrt(b2);
    const double d = a - b2;
    const double sgn = d >= 0.0 ? 1.0 : -1.0;
    const double span = 2.0 * b2 - a;

    std::vector<Solution> feasible;
    auto consider = [&](double tau_a2, double tau_b2, cplx x, cplx y, const char *label) {
        if (auto sol = make_candidate(spec, CouplingPair::A0B0, tau_a2, tau_b2, x, y, label)) {
            feasible.push_back(*sol);
        }
    };

    if (std::abs(d) <= 1e-12) {
        consider(1.0, 1.0, 0.0, 0.0, "product");
    }

    // Unit attenuation: x^2 and y^2 are the roots of the saturated overlap
    // bound together with x y = a - b^2.
    {
        const double q = 1.0 - b_a * b_a - b_b * b_b + sq(span);
        double disc = q * q - 4.0 * d * d;
        if (disc < 0.0 && disc > -1e-12) {
            disc = 0.0;
        }
        if (disc >= 0.0 && q >= 0.0) {
            const double root = std::sqrt(disc);
            const double big = 0.5 * (q + root);
            const double small = std::max(0.0, 0.5 * (q - root));
            consider(1.0, 1.0, std::sqrt(big), sgn * std::sqrt(small), "asym-unit");
            consider(1.0, 1.0, std::sqrt(small), sgn * std::sqrt(big), "asym-unit");
        }
    }

    // tau of one qubit fixed at 1; the other follows from the saturated
    // overlap bound at the stationary points of the relative coupling r.
    auto one_unit = [&](double b_fixed, double r2) -> std::optional<double> {
        if (!(r2 > 0.0) || !std::isfinite(r2)) {
            return std::nullopt;
        }
        const double num = b_fixed * b_fixed * r2 * (1.0 - b_fixed * b_fixed * (1.0 + r2));
        const double den = b2 * b2 * r2 + d * d - b_fixed * b_fixed * r2 * sq(span);
        return num / den;
    };
    if (b > 0.0) {
        for (double r2 : {d * (1.0 - b_a) / (b_a * (b2 + a * b_a - 2.0 * b2 * b_a)),
                          -d * (1.0 + b_a) / (b_a * (b2 - a * b_a + 2.0 * b2 * b_a))}) {
            if (auto tau_b2 = one_unit(b_a, r2)) {
                const double x = b_a * std::sqrt(r2);
                consider(1.0, *tau_b2, x, d / x, "asym-taua1");
            }
        }
        for (double r2 : {d * (1.0 - b_b) / (b_b * (b2 + a * b_b - 2.0 * b2 * b_b)),
                          -d * (1.0 + b_b) / (b_b * (b2 - a * b_b + 2.0 * b2 * b_b))}) {
            if (auto tau_a2 = one_unit(b_b, r2)) {
                const double y = b_b * std::sqrt(r2);
                consider(*tau_a2, 1.0, d / y, y, "asym-taub1");
            }
        }

        // Both attenuations free.
        const double rel = std::sqrt(std::abs(d)) / b;
        const double x = b_a * rel;
        const double y = sgn * b_b * rel;
        if (d <= 0.0) {
            consider(std::min(1.0, b2 / (b_a * b_a * span)), std::min(1.0, b2 / (b_b * b_b * span)), x, y,
                     "asym-free");
        } else {
            const double den = sq(std::sqrt(d) + b);
            consider(b_b / b_a / den, b_a / b_b / den, x, y, "asym-free");
        }
    }

    if (feasible.empty()) {
        throw Error(ErrorKind::NoFeasiblePoint, "no closed-form A0B0 candidate is feasible");
    }
    const Solution *best = &feasible.front();
    for (const auto &s : feasible) {
        if (s.p_l > best->p_l) {
            best = &s;
        }
    }
    return *best;
}

}  // namespace

Solution optimize_asym_a0b0(double a, double b_a, double b_b) {
    for (double v : {a, b_a, b_b}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorKind::InvalidFilter, "asymmetric filter parameters must lie in [0, 1]");
        }
    }
    if (b_a <= b_b) {
        return asym_ordered(a, b_a, b_b);
    }
    // Relabel the qubits: m01 <-> m10, then swap the roles back.
    Solution swapped = asym_ordered(a, b_b, b_a);
    Solution out = swapped;
    out.tau_a = swapped.tau_b;
    out.tau_b = swapped.tau_a;
    out.x = swapped.y;
    out.y = swapped.x;
    out.branch += ":swapped";
    out.saturated = saturated_constraints(build_submatrix(FilterSpec::asymmetric(a, b_a, b_b), out), out.tau_a,
                                          out.tau_b);
    return out;
}

Solution optimize_complex_a0b0(double a, double b, double phi) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0) || !std::isfinite(phi)) {
        throw Error(ErrorKind::InvalidFilter, "complex filter needs 0 <= a, b <= 1 and finite phi");
    }
    phi = wrap_phase(phi);
    const FilterSpec spec{std::polar(a, phi), b, b};
    const double b2 = b * b;
    const double cos_phi = std::cos(phi);
    const double half_sin = std::sin(0.5 * phi);
    const double s = std::sqrt(sq(a - b2) + 4.0 * a * b2 * half_sin * half_sin);
    // s + a cos(phi) - b^2, rationalized where the two terms would cancel.
    const double lag = b2 - a * cos_phi;
    const double inner = lag > 0.0 ? sq(a * std::sin(phi)) / (s + lag) : s - lag;
    const double load = b2 + b * std::sqrt(std::max(0.0, 2.0 * inner)) + s;
    const cplx x = std::sqrt(std::polar(a, phi) - b2);

    std::optional<Solution> sol;
    if (load <= 1.0 + 1e-12) {
        sol = make_candidate(spec, CouplingPair::A0B0, 1.0, 1.0, x, x, "complex-unit");
    } else {
        const double tau2 = 1.0 / load;
        sol = make_candidate(spec, CouplingPair::A0B0, tau2, tau2, x, x, "complex-attenuated");
    }
    if (!sol) {
        throw std::logic_error("symmetric complex configuration failed its feasibility check");
    }
    return *sol;
}

double cp_probability(double phi) {
    const double h = std::abs(std::sin(wrap_phase(phi) / 2.0));
    const double root = std::sqrt(std::max(0.0, h - h * h));
    return 1.0 / sq(1.0 + 2.0 * h + 2.0 * root);
}

Solution solve_complex_symmetric(const FilterSpec &spec) {
    const CanonicalComplex canon = canonicalize_complex(spec);
    Solution sol = optimize_complex_a0b0(canon.a, canon.b, canon.phi);
    // Undo the mode phases: the A0 row picks up arg(m01), the B0 row arg(m10).
    sol.x *= std::polar(1.0, -canon.phase_a0);
    sol.y *= std::polar(1.0, -canon.phase_b0);
    sol.saturated = saturated_constraints(build_submatrix(spec, sol), sol.tau_a, sol.tau_b);
    return sol;
}

}  // namespace qfilter
