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

#include <doctest.h>

#include <cmath>

#include "qfilter/filtercore.hpp"
#include "qfilter/optsym.hpp"
#include "qfilter/structure.hpp"

using namespace qfilter;

namespace {

double case_value(double a, double b) {
    const double b2 = b * b;
    if (a <= b2) {
        const double nu2 = 2.0 * b2 - a;
        return nu2 <= 1.0 ? 1.0 : 1.0 / (nu2 * nu2);
    }
    const double s = std::sqrt(a - b2);
    return b + s <= 1.0 ? 1.0 : 1.0 / std::pow(a + 2.0 * b * s, 2);
}

}  // namespace

TEST_CASE("A0B0 cases") {
    SUBCASE("case i") {
        const Solution s = optimize_a0b0(0.2, 0.5);
        CHECK(s.branch == "case-i");
        CHECK(s.p_l == 1.0);
        CHECK(s.coupling == CouplingPair::A0B0);
        CHECK((s.x * s.y).real() == doctest::Approx(0.2 - 0.25));
        CHECK(s.x.real() >= 0.0);
    }
    SUBCASE("case iii at the boundary") {
        const Solution s = optimize_a0b0(0.5, 0.5);
        CHECK(s.branch == "case-iii");
        CHECK(s.p_l == 1.0);
        // Arm transmittances b -/+ sqrt(a - b^2).
        const double s_ = std::sqrt(0.25);
        CHECK(0.5 - s_ == doctest::Approx(0.0));
        CHECK(0.5 + s_ == doctest::Approx(1.0));
    }
    SUBCASE("case iv") {
        const Solution s = optimize_a0b0(1.0, 0.5);
        CHECK(s.branch == "case-iv");
        CHECK(s.p_l == doctest::Approx(1.0 / std::pow(1.0 + std::sqrt(0.75), 2)).epsilon(1e-12));
        CHECK(s.p_l == doctest::Approx(0.287187).epsilon(1e-6));
        CHECK(s.tau_a * s.tau_a == doctest::Approx(0.535898).epsilon(1e-6));
        CHECK(s.tau_b * s.tau_b == doctest::Approx(0.535898).epsilon(1e-6));
        CHECK(std::pow(s.tau_a * s.tau_b, 2) == doctest::Approx(s.p_l).epsilon(1e-12));
    }
    SUBCASE("case ii") {
        const Solution s = optimize_a0b0(0.2, 0.9);
        CHECK(s.branch == "case-ii");
        CHECK(s.p_l == doctest::Approx(1.0 / std::pow(2 * 0.81 - 0.2, 2)));
    }
    SUBCASE("identity") {
        const Solution s = optimize_a0b0(1.0, 1.0);
        CHECK(s.branch == "identity");
        CHECK(s.p_l == 1.0);
        CHECK(s.x == cplx(0.0));
        CHECK(s.y == cplx(0.0));
    }
    SUBCASE("product filter") {
        const Solution s = optimize_a0b0(0.36, 0.6);
        CHECK(s.branch == "product");
        CHECK(s.p_l == 1.0);
    }
    SUBCASE("parity-check family b = 0") {
        const Solution s = optimize_a0b0(0.7, 0.0);
        CHECK(s.p_l == 1.0);
        CHECK(s.branch == "case-iii");
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(optimize_a0b0(1.2, 0.5), Error);
        CHECK_THROWS_AS(optimize_a0b0(0.5, -0.1), Error);
    }
}

TEST_CASE("A0B0 bounds") {
    const A0B0Bounds b1 = a0b0_upper_bounds(1.0, 0.5);
    REQUIRE(b1.scalar);
    CHECK(*b1.scalar == doctest::Approx(1.0 / std::pow(0.5 + std::sqrt(0.75), 4)));
    CHECK(*b1.scalar == doctest::Approx(optimize_a0b0(1.0, 0.5).p_l).epsilon(1e-12));
    CHECK(b1.product == doctest::Approx(1.0));
    const A0B0Bounds b2 = a0b0_upper_bounds(0.2, 0.9);
    CHECK(!b2.scalar);
    CHECK(b2.product == doctest::Approx(1.0 / (1.42 * 1.42)));
    CHECK(b2.product == doctest::Approx(0.495933).epsilon(1e-6));
    CHECK(a0b0_upper_bounds(1.0, 1.0).product == 1.0);
}

TEST_CASE("A1B1 bound") {
    CHECK(bound_a1b1(0.25, 0.5) == doctest::Approx(1.0));
    CHECK(bound_a1b1(1.0, 0.5) == doctest::Approx(1.0 / std::pow(0.5 + std::sqrt(0.75), 4)));
    CHECK(bound_a1b1(0.2, 0.9) == doctest::Approx(0.04 / (1.42 * 1.42)));
    CHECK(bound_a1b1(0.2, 0.9) == doctest::Approx(0.019837).epsilon(1e-5));
}

TEST_CASE("B0A1 candidates") {
    SUBCASE("product filter") {
        const Solution s = optimize_b0a1(0.25, 0.5);
        CHECK(s.p_l == doctest::Approx(1.0));
        CHECK(std::abs(s.x) < 1e-12);
        CHECK(std::abs(s.y) < 1e-12);
    }
    SUBCASE("branch 1 at (1, 0.5)") {
        const Solution s = optimize_b0a1(1.0, 0.5);
        CHECK(s.p_l == doctest::Approx(0.25 / 3.0625).epsilon(1e-9));
        CHECK(s.coupling == CouplingPair::B0A1);
    }
    SUBCASE("tau_b = 1 root wins at (0.85, 0.9)") {
        const Solution s = optimize_b0a1(0.85, 0.9);
        CHECK(s.p_l == doctest::Approx(std::pow(1.75 / 1.79, 2)).epsilon(1e-12));
        CHECK(s.p_l > 0.9551);
        bool saw_branch1 = false;
        for (const auto &c : b0a1_candidates(0.85, 0.9)) {
            if (c.solution.branch == "b0a1-branch1" && c.feasible) {
                saw_branch1 = true;
                CHECK(c.solution.p_l < s.p_l);
                CHECK(c.solution.p_l == doctest::Approx(0.9551).epsilon(1e-3));
            }
        }
        CHECK(saw_branch1);
    }
    SUBCASE("b = 0 is degenerate") {
        try {
            optimize_b0a1(0.5, 0.0);
            FAIL("expected DegenerateTemplate");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::DegenerateTemplate);
        }
    }
}

TEST_CASE("symmetric comparison") {
    const Solution s1 = optimize_symmetric(1.0, 0.5);
    CHECK(s1.coupling == CouplingPair::A0B0);
    CHECK(s1.p_l == doctest::Approx(0.287187).epsilon(1e-6));
    const SymmetricComparison c = compare_symmetric(0.85, 0.9);
    REQUIRE(c.winner);
    CHECK(*c.winner == CouplingPair::B0A1);
    CHECK(c.a0b0.p_l == doctest::Approx(1.0 / (1.21 * 1.21)).epsilon(1e-12));
    CHECK(c.best().p_l - c.a0b0.p_l >= 0.25);
    const SymmetricComparison tie = compare_symmetric(0.25, 0.5);
    CHECK(!tie.winner);
    CHECK(tie.best().coupling == CouplingPair::A0B0);
}

TEST_CASE("grid invariants") {
    const int n = 100;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const double a = static_cast<double>(i) / n;
            const double b = static_cast<double>(j) / n;
            const Solution s = optimize_a0b0(a, b);
            const A0B0Bounds bounds = a0b0_upper_bounds(a, b);
            CHECK(s.p_l <= bounds.tightest() + 1e-12);
            CHECK(std::abs(s.p_l - case_value(a, b)) <= 1e-12);
            if (s.branch == "case-ii" || s.branch == "case-iv") {
                CHECK(std::abs(s.p_l - bounds.tightest()) <= 1e-12);
            }
            if (unit_probability_region(a, b)) {
                CHECK(s.p_l == 1.0);
            } else {
                CHECK(s.p_l < 1.0 - 1e-9);
            }
            const Solution best = optimize_symmetric(a, b);
            CHECK(best.p_l >= s.p_l);
            if (b > 0.0) {
                CHECK(best.p_l >= optimize_b0a1(a, b).p_l);
            }
            CHECK(bound_a1b1(a, b) <= best.p_l + 1e-9);
            const VerifyReport r = verify_solution(FilterSpec::symmetric(a, b), best);
            CHECK(r.ok);
            CHECK(check_structure(build_submatrix(FilterSpec::symmetric(a, b), best).entries).admissible);
        }
    }
}

TEST_CASE("continuity across the case boundaries") {
    for (double b : {0.75, 0.8, 0.9, 0.95}) {
        // 2b^2 - a = 1
        const double a = 2.0 * b * b - 1.0;
        if (a > 0.0 && a <= 1.0) {
            CHECK(std::abs(optimize_a0b0(a - 1e-10, b).p_l - optimize_a0b0(a + 1e-10, b).p_l) < 1e-9);
        }
    }
    for (double b : {0.2, 0.4, 0.6}) {
        // b + sqrt(a - b^2) = 1  =>  a = b^2 + (1 - b)^2
        const double a = b * b + (1.0 - b) * (1.0 - b);
        CHECK(std::abs(optimize_a0b0(a - 1e-10, b).p_l - optimize_a0b0(a + 1e-10, b).p_l) < 1e-9);
    }
}
