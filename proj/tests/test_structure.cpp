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

#include <random>

#include "qfilter/filtercore.hpp"
#include "qfilter/structure.hpp"
#include "violations.hpp"

using namespace qfilter;

TEST_CASE("template-shaped matrix is admissible") {
    const SubmatrixAB u =
        build_submatrix(FilterSpec::symmetric(0.29, 0.5), CouplingPair::A0B0, 0.9, 0.9, 0.2, 0.2);
    const StructureReport r = check_structure(u.entries);
    CHECK(r.admissible);
    REQUIRE(r.coupled_pair);
    CHECK(*r.coupled_pair == CouplingPair::A0B0);
    CHECK(r.violations.empty());
}

TEST_CASE("intra-qubit coupling is rejected") {
    Mat4 u = Mat4::Identity();
    u(0, 2) = 0.3;
    const StructureReport r = check_structure(u);
    CHECK(!r.admissible);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].row == 0);
    CHECK(r.violations[0].col == 2);
    CHECK(r.violations[0].magnitude == doctest::Approx(0.3));
}

TEST_CASE("two coupled pairs are rejected") {
    Mat4 u = Mat4::Identity();
    for (auto c : {CouplingPair::A0B0, CouplingPair::A1B1}) {
        const auto [a, b] = coupled_modes(c);
        u(a, a) = u(b, b) = u(a, b) = u(b, a) = 0.4;
    }
    const StructureReport r = check_structure(u);
    CHECK(!r.admissible);
    CHECK(r.violations.size() == 2);
}

TEST_CASE("product-form matrix has no coupled pair") {
    Mat4 u = Mat4::Identity() * 0.7;
    const StructureReport r = check_structure(u);
    CHECK(r.admissible);
    CHECK(!r.coupled_pair);
}

TEST_CASE("vanishing diagonal entries") {
    Mat4 u = Mat4::Identity();
    u(1, 1) = 0.0;
    CHECK(!check_structure(u).admissible);
    const StructureReport relaxed = check_structure(u, StructureOptions{1e-10, true});
    CHECK(relaxed.admissible);
    REQUIRE(relaxed.warnings.size() == 1);
    CHECK(relaxed.warnings[0].row == 1);
    CHECK(check_structure_for(u, FilterSpec{0.5, 0.0, 0.5}).admissible);
    CHECK(!check_structure_for(u, FilterSpec{0.5, 0.3, 0.5}).admissible);
}

TEST_CASE("every coupling template is recognized") {
    const FilterSpec s = FilterSpec::symmetric(0.5, 0.7);
    for (auto c : kAllCouplings) {
        const CouplingTemplate t = coupling_template(s, c);
        const SubmatrixAB u = build_submatrix(s, c, 0.8, 0.6, 0.5, t.product / 0.5);
        const StructureReport r = check_structure(u.entries);
        CHECK(r.admissible);
        REQUIRE(r.coupled_pair);
        CHECK(*r.coupled_pair == c);
    }
}

TEST_CASE("admissible matrices have diagonal coincidence maps") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Mat4 u = random_admissible(rng);
        REQUIRE(check_structure(u).admissible);
        Mat4 w = coincidence_map(u).w;
        w.diagonal().setZero();
        CHECK(w.cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("single violations are located") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        const InjectedViolation v = random_single_violation(rng);
        const StructureReport r = check_structure(v.matrix);
        CHECK(!r.admissible);
        CHECK_MESSAGE(reports_entry(r, v.row, v.col), "condition " << v.condition << " at " << v.row << "," << v.col);
    }
}
