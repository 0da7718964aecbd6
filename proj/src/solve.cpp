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

#include "qfilter/solve.hpp"

#include "qfilter/optgen.hpp"
#include "qfilter/optsym.hpp"

namespace qfilter {

namespace {

Solution by_oracle(const FilterSpec &spec, std::optional<CouplingPair> coupling, const OracleConfig &cfg) {
    if (coupling) {
        return oracle_max_pl(spec, *coupling, cfg);
    }
    OracleSweep sweep = oracle_all_couplings(spec, cfg);
    if (!sweep.best) {
        throw Error(ErrorKind::NoFeasiblePoint, "oracle found no feasible configuration for any coupling");
    }
    return *sweep.best;
}

}  // namespace

Solution solve_filter(const FilterSpec &spec, std::optional<CouplingPair> coupling, const OracleConfig &cfg) {
    if (!spec.magnitudes_valid()) {
        throw Error(ErrorKind::InvalidFilter, "filter coefficients must have magnitude <= 1");
    }
    const FilterClass cls = spec.classify();
    const bool any_a0b0 = !coupling || *coupling == CouplingPair::A0B0;

    switch (cls) {
    case FilterClass::SymmetricReal: {
        const double a = spec.m00.real();
        const double b = spec.m01.real();
        if (!coupling) {
            return optimize_symmetric(a, b);
        }
        if (*coupling == CouplingPair::A0B0) {
            return optimize_a0b0(a, b);
        }
        if (*coupling == CouplingPair::B0A1) {
            return optimize_b0a1(a, b);
        }
        break;
    }
    case FilterClass::AsymmetricReal:
        if (any_a0b0) {
            try {
                return optimize_asym_a0b0(spec.m00.real(), spec.m01.real(), spec.m10.real());
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::NoFeasiblePoint || coupling) {
                    throw;
                }
            }
        }
        break;
    case FilterClass::ComplexSymmetric:
        if (any_a0b0) {
            return solve_complex_symmetric(spec);
        }
        break;
    case FilterClass::ComplexGeneral:
        break;
    }
    return by_oracle(spec, coupling, cfg);
}

}  // namespace qfilter
