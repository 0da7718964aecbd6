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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfilter/filtercore.hpp"

namespace qfilter {

/// Beam splitter with an optional coupling phase:
///   [[ t,               r e^{i theta} ],
///    [ -r e^{-i theta}, t             ]].
/// r is kept next to t because sqrt(1 - t^2) loses all precision for t near 1.
struct BeamSplitter {
    int mode_i = 0;
    int mode_j = 1;
    double t = 1.0;
    double r = 0.0;
    double theta = 0.0;
    bool operator==(const BeamSplitter &) const = default;
};

/// Beam splitter of amplitude transmittance t into a vacuum ancilla that is
/// discarded afterwards.
struct Attenuator {
    int mode = 0;
    double t = 1.0;
    int ancilla = 4;
    bool operator==(const Attenuator &) const = default;
};

struct PhaseShifter {
    int mode = 0;
    double phi = 0.0;
    bool operator==(const PhaseShifter &) const = default;
};

using Element = std::variant<BeamSplitter, Attenuator, PhaseShifter>;

/// Elements act in list order on the four signal modes plus the ancillas.
struct Circuit {
    static constexpr int kSignalModes = 4;
    int n_ancilla_modes = 0;
    std::vector<Element> elements;

    int total_modes() const { return kSignalModes + n_ancilla_modes; }

    /// Full (signal + ancilla) unitary of the element sequence.
    MatX unitary() const;
    /// Signal-to-signal block; equals the top-left 4x4 of unitary().
    Mat4 transfer_matrix() const;

    int count_beam_splitters() const;
    int count_attenuators() const;
    int count_phase_shifters() const;

    bool operator==(const Circuit &) const = default;
};

/// Factors an admissible transfer block into beam splitters, attenuators and
/// phase shifters.
///
/// The coupled 2x2 block is split by SVD into rotation, per-arm attenuation,
/// rotation (a Mach-Zehnder layout). Equal singular values collapse it to one
/// beam splitter followed by equal attenuation on both arms. Real blocks use
/// real rotations with negative amplitudes moved into pi phase shifters.
/// Throws Error(NotAdmissible) or Error(Infeasible).
Circuit decompose(const SubmatrixAB &u);

/// A circuit plus the metadata written alongside it.
struct CircuitDocument {
    Circuit circuit;
    std::optional<FilterSpec> target_filter;
    std::optional<double> p_l;
    std::string coupling;
    std::string branch;
    std::string method;

    bool operator==(const CircuitDocument &) const = default;
};

inline constexpr const char *kCircuitSchema = "qfilter-circuit/1";

nlohmann::json emit_circuit(const CircuitDocument &doc);
inline nlohmann::json emit_circuit(const Circuit &c) { return emit_circuit(CircuitDocument{c, {}, {}, {}, {}, {}}); }

/// Throws Error(Parse) on schema violations.
CircuitDocument parse_circuit(const nlohmann::json &j);

/// Text form used on disk.
std::string dump_circuit(const CircuitDocument &doc);
CircuitDocument load_circuit(const std::string &text);

}  // namespace qfilter
