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

#include "qfilter/types.hpp"

#include <cctype>
#include <cmath>

namespace qfilter {

namespace {
constexpr std::array<std::string_view, 4> kModeNames = {"A0", "B0", "A1", "B1"};
}

std::string_view mode_name(int idx) {
    if (idx >= 0 && idx < 4) {
        return kModeNames[idx];
    }
    return "ancilla";
}

std::optional<int> parse_mode_name(std::string_view name) {
    for (int i = 0; i < 4; ++i) {
        if (kModeNames[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotDiagonal:
            return "NotDiagonal";
        case ErrorKind::DegenerateM11:
            return "DegenerateM11";
        case ErrorKind::Infeasible:
            return "Infeasible";
        case ErrorKind::DegenerateTemplate:
            return "DegenerateTemplate";
        case ErrorKind::NoFeasiblePoint:
            return "NoFeasiblePoint";
        case ErrorKind::AsymmetricMagnitudes:
            return "AsymmetricMagnitudes";
        case ErrorKind::NotAdmissible:
            return "NotAdmissible";
        case ErrorKind::InvalidFilter:
            return "InvalidFilter";
        case ErrorKind::Parse:
            return "Parse";
    }
    return "Unknown";
}

std::string_view coupling_name(CouplingPair c) {
    switch (c) {
        case CouplingPair::A0B0:
            return "A0B0";
        case CouplingPair::A1B1:
            return "A1B1";
        case CouplingPair::B0A1:
            return "B0A1";
        case CouplingPair::A0B1:
            return "A0B1";
    }
    return "?";
}

std::optional<CouplingPair> parse_coupling(std::string_view name) {
    for (auto c : kAllCouplings) {
        auto canon = coupling_name(c);
        if (name.size() != canon.size()) {
            continue;
        }
        bool same = true;
        for (size_t i = 0; i < name.size(); ++i) {
            if (std::toupper(static_cast<unsigned char>(name[i])) != canon[i]) {
                same = false;
                break;
            }
        }
        if (same) {
            return c;
        }
    }
    // "A1B0" and "B1A0" name the same pairs in the other order.
    if (name == "A1B0" || name == "a1b0") {
        return CouplingPair::B0A1;
    }
    if (name == "B1A0" || name == "b1a0") {
        return CouplingPair::A0B1;
    }
    return std::nullopt;
}

std::pair<int, int> coupled_modes(CouplingPair c) {
    switch (c) {
        case CouplingPair::A0B0:
            return {0, 1};
        case CouplingPair::A1B1:
            return {2, 3};
        case CouplingPair::B0A1:
            return {2, 1};
        case CouplingPair::A0B1:
            return {0, 3};
    }
    return {0, 1};
}

std::optional<CouplingPair> coupling_from_modes(int a_idx, int b_idx) {
    for (auto c : kAllCouplings) {
        if (coupled_modes(c) == std::pair{a_idx, b_idx}) {
            return c;
        }
    }
    return std::nullopt;
}

std::string_view filter_class_name(FilterClass c) {
    switch (c) {
        case FilterClass::SymmetricReal:
            return "symmetric-real";
        case FilterClass::AsymmetricReal:
            return "asymmetric-real";
        case FilterClass::ComplexSymmetric:
            return "complex-symmetric";
        case FilterClass::ComplexGeneral:
            return "complex-general";
    }
    return "?";
}

cplx FilterSpec::coefficient(int j, int k) const {
    if (j == 0 && k == 0) {
        return m00;
    }
    if (j == 0 && k == 1) {
        return m01;
    }
    if (j == 1 && k == 0) {
        return m10;
    }
    return 1.0;
}

bool FilterSpec::magnitudes_valid() const {
    constexpr double slack = 1e-12;
    for (auto m : {m00, m01, m10}) {
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag()) || std::abs(m) > 1.0 + slack) {
            return false;
        }
    }
    return true;
}

bool FilterSpec::all_real() const { return m00.imag() == 0.0 && m01.imag() == 0.0 && m10.imag() == 0.0; }

FilterClass FilterSpec::classify() const {
    auto in_unit = [](cplx m) { return m.imag() == 0.0 && m.real() >= 0.0 && m.real() <= 1.0; };
    if (in_unit(m00) && in_unit(m01) && in_unit(m10)) {
        return m01 == m10 ? FilterClass::SymmetricReal : FilterClass::AsymmetricReal;
    }
    if (std::abs(std::abs(m01) - std::abs(m10)) <= 1e-12) {
        return FilterClass::ComplexSymmetric;
    }
    return FilterClass::ComplexGeneral;
}

}  // namespace qfilter
