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

#include <random>

#include "qfilter/structure.hpp"

namespace qfilter {

/// Random matrix of admissible shape with one random cross pair active.
inline Mat4 random_admissible(std::mt19937_64 &rng, CouplingPair *pair = nullptr) {
    std::uniform_real_distribution<double> mag(0.3, 1.0);
    std::uniform_real_distribution<double> phase(-3.14159, 3.14159);
    std::uniform_int_distribution<int> pick(0, 3);
    Mat4 u = Mat4::Zero();
    for (int i = 0; i < 4; ++i) {
        u(i, i) = std::polar(mag(rng), phase(rng));
    }
    const CouplingPair c = kAllCouplings[pick(rng)];
    const auto [a, b] = coupled_modes(c);
    u(a, b) = std::polar(mag(rng), phase(rng));
    u(b, a) = std::polar(mag(rng), phase(rng));
    if (pair) {
        *pair = c;
    }
    return u;
}

struct InjectedViolation {
    Mat4 matrix;
    char condition;
    int row;
    int col;
};

/// Admissible matrix with exactly one of the three shape conditions broken
/// at one entry: (a) a zero diagonal entry, (b) an intra-qubit entry, (c) an
/// entry of a second, weaker cross pair.
inline InjectedViolation random_single_violation(std::mt19937_64 &rng) {
    CouplingPair main;
    InjectedViolation out{random_admissible(rng, &main), 'a', 0, 0};
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> small(0.01, 0.25);
    switch (pick(rng) % 3) {
    case 0: {
        const int i = pick(rng);
        out.matrix(i, i) = 0.0;
        out.condition = 'a';
        out.row = out.col = i;
        break;
    }
    case 1: {
        constexpr std::pair<int, int> intra[4] = {{0, 2}, {2, 0}, {1, 3}, {3, 1}};
        const auto [r, c] = intra[pick(rng)];
        out.matrix(r, c) = small(rng);
        out.condition = 'b';
        out.row = r;
        out.col = c;
        break;
    }
    default: {
        CouplingPair other = main;
        while (other == main) {
            other = kAllCouplings[pick(rng)];
        }
        const auto [a, b] = coupled_modes(other);
        const bool forward = pick(rng) % 2 == 0;
        out.row = forward ? a : b;
        out.col = forward ? b : a;
        out.matrix(out.row, out.col) = small(rng);
        out.condition = 'c';
        break;
    }
    }
    return out;
}

inline bool reports_entry(const StructureReport &r, int row, int col) {
    for (const auto &v : r.violations) {
        if (v.row == row && v.col == col) {
            return true;
        }
    }
    return false;
}

}  // namespace qfilter
