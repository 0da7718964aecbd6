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

#include "qfilter/synth.hpp"

#include <cmath>
#include <numbers>

#include "qfilter/optgen.hpp"
#include "qfilter/structure.hpp"

namespace qfilter {

namespace {

constexpr double kDropTol = 1e-15;
constexpr double kEqualSingular = 1e-14;

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// M = diag(e^{i a}, e^{i b}) * B(t, r, theta) for a 2x2 unitary M.
struct PhasedSplitter {
    double phase_first = 0.0;
    double phase_second = 0.0;
    double t = 1.0;
    double r = 0.0;
    double theta = 0.0;
};

PhasedSplitter split_unitary(const Mat2 &m) {
    PhasedSplitter out;
    out.t = std::min(1.0, std::abs(m(0, 0)));
    out.r = std::min(1.0, std::abs(m(0, 1)));
    if (out.t > 1e-12) {
        out.phase_first = std::arg(m(0, 0));
        out.phase_second = std::arg(m(1, 1));
        out.theta = out.r > 1e-12 ? wrap_phase(std::arg(m(0, 1)) - out.phase_first) : 0.0;
    } else {
        out.phase_first = std::arg(m(0, 1));
        out.phase_second = std::arg(-m(1, 0));
        out.theta = 0.0;
    }
    return out;
}

class Builder {
  public:
    void beam_splitter(int i, int j, double t, double r, double theta) {
        if (r <= kDropTol && t >= 1.0 - kDropTol) {
            return;
        }
        circuit_.elements.push_back(BeamSplitter{i, j, t, r, wrap_phase(theta)});
    }

    void attenuator(int mode, double t) {
        if (t >= 1.0 - kDropTol) {
            return;
        }
        circuit_.elements.push_back(Attenuator{mode, std::max(0.0, t), Circuit::kSignalModes + circuit_.n_ancilla_modes});
        ++circuit_.n_ancilla_modes;
    }

    void phase_shifter(int mode, double phi) {
        phi = wrap_phase(phi);
        if (std::abs(phi) <= kDropTol) {
            return;
        }
        circuit_.elements.push_back(PhaseShifter{mode, phi});
    }

    /// A complex amplitude on one uncoupled mode.
    void single_mode(int mode, cplx d) {
        attenuator(mode, std::abs(d));
        if (std::abs(d) > 0.0) {
            phase_shifter(mode, std::arg(d));
        }
    }

    Circuit take() { return std::move(circuit_); }

  private:
    Circuit circuit_;
};

/// Rotation [[c, s], [-s, c]] as a beam splitter; a negative cosine is
/// returned as -1 for the caller to fold into the neighbouring diagonal.
double emit_rotation(Builder &out, int p, int q, const Eigen::Matrix2d &rot) {
    double sign = 1.0;
    double c = rot(0, 0);
    double s = rot(0, 1);
    if (c < 0.0) {
        sign = -1.0;
        c = -c;
        s = -s;
    }
    out.beam_splitter(p, q, c, std::abs(s), s < 0.0 ? std::numbers::pi : 0.0);
    return sign;
}

void emit_real_block(Builder &out, int p, int q, const Eigen::Matrix2d &v) {
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2d left = svd.matrixU();
    Eigen::Matrix2d right = svd.matrixV();
    Eigen::Vector2d diag = svd.singularValues();
    // Make both orthogonal factors proper rotations; the reflections move
    // into the signs of the diagonal.
    if (left.determinant() < 0.0) {
        left.col(1) *= -1.0;
        diag(1) *= -1.0;
    }
    if (right.determinant() < 0.0) {
        right.col(1) *= -1.0;
        diag(1) *= -1.0;
    }
    const Eigen::Matrix2d first = left;
    const Eigen::Matrix2d second = right.transpose();

    auto arm = [&](int mode, double d) {
        out.attenuator(mode, std::abs(d));
        if (d < 0.0) {
            out.phase_shifter(mode, std::numbers::pi);
        }
    };

    const bool equal = std::abs(std::abs(diag(0)) - std::abs(diag(1))) <= kEqualSingular;
    if (equal && diag(0) * diag(1) >= 0.0) {
        // One rotation followed by uniform attenuation.
        const double d = std::abs(diag(0)) > 0.0 ? diag(0) : diag(1);
        const double sign = emit_rotation(out, p, q, first * second);
        arm(p, sign * d);
        arm(q, sign * d);
        return;
    }
    const double s1 = emit_rotation(out, p, q, first);
    Builder tail;
    const double s2 = emit_rotation(tail, p, q, second);
    arm(p, s1 * s2 * diag(0));
    arm(q, s1 * s2 * diag(1));
    for (const auto &e : tail.take().elements) {
        const auto &bs = std::get<BeamSplitter>(e);
        out.beam_splitter(bs.mode_i, bs.mode_j, bs.t, bs.r, bs.theta);
    }
}

void emit_complex_block(Builder &out, int p, int q, const Mat2 &v) {
    Eigen::JacobiSVD<Mat2> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat2 left = svd.matrixU();
    const Mat2 right_adj = svd.matrixV().adjoint();
    const Eigen::Vector2d sigma = svd.singularValues();

    if (std::abs(sigma(0) - sigma(1)) <= kEqualSingular) {
        const PhasedSplitter m = split_unitary(left * right_adj);
        out.phase_shifter(p, m.phase_first);
        out.phase_shifter(q, m.phase_second);
        out.beam_splitter(p, q, m.t, m.r, m.theta);
        out.attenuator(p, sigma(0));
        out.attenuator(q, sigma(0));
        return;
    }
    // V = W S Z^+ with Z^+ = Phi' B2, so V = (W Phi') S B2 = Phi1 B1 S B2.
    const PhasedSplitter second = split_unitary(right_adj);
    Mat2 phases = Mat2::Zero();
    phases(0, 0) = std::polar(1.0, second.phase_first);
    phases(1, 1) = std::polar(1.0, second.phase_second);
    const PhasedSplitter first = split_unitary(left * phases);
    out.phase_shifter(p, first.phase_first);
    out.phase_shifter(q, first.phase_second);
    out.beam_splitter(p, q, first.t, first.r, first.theta);
    out.attenuator(p, sigma(0));
    out.attenuator(q, sigma(1));
    out.beam_splitter(p, q, second.t, second.r, second.theta);
}

MatX element_matrix(const Element &e, int n) {
    MatX m = MatX::Identity(n, n);
    std::visit(Overloaded{
                   [&](const BeamSplitter &bs) {
                       m(bs.mode_i, bs.mode_i) = bs.t;
                       m(bs.mode_i, bs.mode_j) = std::polar(bs.r, bs.theta);
                       m(bs.mode_j, bs.mode_i) = -std::polar(bs.r, -bs.theta);
                       m(bs.mode_j, bs.mode_j) = bs.t;
                   },
                   [&](const Attenuator &at) {
                       const double r = std::sqrt(std::max(0.0, 1.0 - at.t * at.t));
                       m(at.mode, at.mode) = at.t;
                       m(at.mode, at.ancilla) = r;
                       m(at.ancilla, at.mode) = -r;
                       m(at.ancilla, at.ancilla) = at.t;
                   },
                   [&](const PhaseShifter &ps) { m(ps.mode, ps.mode) = std::polar(1.0, ps.phi); },
               },
               e);
    return m;
}

}  // namespace

MatX Circuit::unitary() const {
    const int n = total_modes();
    MatX u = MatX::Identity(n, n);
    for (const auto &e : elements) {
        u = u * element_matrix(e, n);
    }
    return u;
}

Mat4 Circuit::transfer_matrix() const {
    // Every attenuator owns a fresh ancilla that never feeds back, so the
    // signal block of the product is the product of the signal blocks.
    Mat4 u = Mat4::Identity();
    for (const auto &e : elements) {
        Mat4 block = Mat4::Identity();
        std::visit(Overloaded{
                       [&](const BeamSplitter &bs) {
                           block(bs.mode_i, bs.mode_i) = bs.t;
                           block(bs.mode_i, bs.mode_j) = std::polar(bs.r, bs.theta);
                           block(bs.mode_j, bs.mode_i) = -std::polar(bs.r, -bs.theta);
                           block(bs.mode_j, bs.mode_j) = bs.t;
                       },
                       [&](const Attenuator &at) { block(at.mode, at.mode) = at.t; },
                       [&](const PhaseShifter &ps) { block(ps.mode, ps.mode) = std::polar(1.0, ps.phi); },
                   },
                   e);
        u = u * block;
    }
    return u;
}

int Circuit::count_beam_splitters() const {
    return static_cast<int>(
        std::count_if(elements.begin(), elements.end(), [](const Element &e) { return std::holds_alternative<BeamSplitter>(e); }));
}

int Circuit::count_attenuators() const {
    return static_cast<int>(
        std::count_if(elements.begin(), elements.end(), [](const Element &e) { return std::holds_alternative<Attenuator>(e); }));
}

int Circuit::count_phase_shifters() const {
    return static_cast<int>(
        std::count_if(elements.begin(), elements.end(), [](const Element &e) { return std::holds_alternative<PhaseShifter>(e); }));
}

Circuit decompose(const SubmatrixAB &u) {
    const StructureReport report = check_structure(u.entries, StructureOptions{1e-10, true});
    if (!report.admissible) {
        const auto &v = report.violations.front();
        throw Error(ErrorKind::NotAdmissible, "forbidden coupling at (" + std::string(mode_name(v.row)) + ", " +
                                                  std::string(mode_name(v.col)) + ")");
    }
    if (spectral_norm(u.entries) > 1.0 + 1e-10) {
        throw Error(ErrorKind::Infeasible, "transfer block is not a contraction");
    }

    Builder out;
    std::array<bool, 4> handled{};
    if (report.coupled_pair) {
        const auto [p, q] = coupled_modes(*report.coupled_pair);
        Mat2 v;
        v << u.entries(p, p), u.entries(p, q), u.entries(q, p), u.entries(q, q);
        if (v.imag().isZero(0.0)) {
            emit_real_block(out, p, q, v.real());
        } else {
            emit_complex_block(out, p, q, v);
        }
        handled[p] = handled[q] = true;
    }
    for (int m = 0; m < 4; ++m) {
        if (!handled[m]) {
            out.single_mode(m, u.entries(m, m));
        }
    }
    return out.take();
}

namespace {

nlohmann::json complex_json(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

cplx complex_from(const nlohmann::json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorKind::Parse, "complex values are [re, im] pairs");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::string signal_name(int mode) {
    if (mode < 0 || mode >= Circuit::kSignalModes) {
        throw Error(ErrorKind::Parse, "element references a non-signal mode");
    }
    return std::string(mode_name(mode));
}

int signal_index(const nlohmann::json &j) {
    const auto idx = parse_mode_name(j.get<std::string>());
    if (!idx) {
        throw Error(ErrorKind::Parse, "unknown signal mode " + j.dump());
    }
    return *idx;
}

}  // namespace

nlohmann::json emit_circuit(const CircuitDocument &doc) {
    nlohmann::json j;
    j["schema"] = kCircuitSchema;
    j["modes"] = {{"signal", {"A0", "B0", "A1", "B1"}}, {"ancilla", doc.circuit.n_ancilla_modes}};
    auto elements = nlohmann::json::array();
    for (const auto &e : doc.circuit.elements) {
        std::visit(Overloaded{
                       [&](const BeamSplitter &bs) {
                           elements.push_back({{"kind", "beam_splitter"},
                                               {"params",
                                                {{"modes", {signal_name(bs.mode_i), signal_name(bs.mode_j)}},
                                                 {"t", bs.t},
                                                 {"r", bs.r},
                                                 {"theta", bs.theta}}}});
                       },
                       [&](const Attenuator &at) {
                           elements.push_back(
                               {{"kind", "attenuator"},
                                {"params", {{"mode", signal_name(at.mode)}, {"t", at.t}, {"ancilla", at.ancilla}}}});
                       },
                       [&](const PhaseShifter &ps) {
                           elements.push_back(
                               {{"kind", "phase_shifter"}, {"params", {{"mode", signal_name(ps.mode)}, {"phi", ps.phi}}}});
                       },
                   },
                   e);
    }
    j["elements"] = std::move(elements);
    if (doc.target_filter) {
        j["target_filter"] = {{"m00", complex_json(doc.target_filter->m00)},
                              {"m01", complex_json(doc.target_filter->m01)},
                              {"m10", complex_json(doc.target_filter->m10)},
                              {"m11", complex_json(1.0)}};
    } else {
        j["target_filter"] = nullptr;
    }
    j["p_l"] = doc.p_l ? nlohmann::json(*doc.p_l) : nlohmann::json(nullptr);
    if (!doc.coupling.empty()) {
        j["coupling"] = doc.coupling;
    }
    if (!doc.branch.empty()) {
        j["branch"] = doc.branch;
    }
    if (!doc.method.empty()) {
        j["method"] = doc.method;
    }
    return j;
}

CircuitDocument parse_circuit(const nlohmann::json &j) {
    try {
        if (j.contains("schema") && j.at("schema") != kCircuitSchema) {
            throw Error(ErrorKind::Parse, "unsupported schema " + j.at("schema").dump());
        }
        CircuitDocument doc;
        const auto &modes = j.at("modes");
        doc.circuit.n_ancilla_modes = modes.at("ancilla").get<int>();
        if (doc.circuit.n_ancilla_modes < 0) {
            throw Error(ErrorKind::Parse, "negative ancilla count");
        }
        const int total = doc.circuit.total_modes();
        for (const auto &e : j.at("elements")) {
            const auto kind = e.at("kind").get<std::string>();
            const auto &params = e.at("params");
            if (kind == "beam_splitter") {
                BeamSplitter bs;
                bs.mode_i = signal_index(params.at("modes").at(0));
                bs.mode_j = signal_index(params.at("modes").at(1));
                bs.t = params.at("t").get<double>();
                bs.r = params.contains("r") ? params.at("r").get<double>()
                                            : std::sqrt(std::max(0.0, 1.0 - bs.t * bs.t));
                bs.theta = params.value("theta", 0.0);
                if (bs.mode_i == bs.mode_j || bs.t < 0.0 || bs.t > 1.0 || bs.r < 0.0 || bs.r > 1.0) {
                    throw Error(ErrorKind::Parse, "invalid beam splitter");
                }
                doc.circuit.elements.emplace_back(bs);
            } else if (kind == "attenuator") {
                Attenuator at;
                at.mode = signal_index(params.at("mode"));
                at.t = params.at("t").get<double>();
                at.ancilla = params.at("ancilla").get<int>();
                if (at.t < 0.0 || at.t > 1.0 || at.ancilla < Circuit::kSignalModes || at.ancilla >= total) {
                    throw Error(ErrorKind::Parse, "invalid attenuator");
                }
                doc.circuit.elements.emplace_back(at);
            } else if (kind == "phase_shifter") {
                PhaseShifter ps;
                ps.mode = signal_index(params.at("mode"));
                ps.phi = params.at("phi").get<double>();
                doc.circuit.elements.emplace_back(ps);
            } else {
                throw Error(ErrorKind::Parse, "unknown element kind " + kind);
            }
        }
        if (j.contains("target_filter") && !j.at("target_filter").is_null()) {
            const auto &t = j.at("target_filter");
            doc.target_filter = FilterSpec{complex_from(t.at("m00")), complex_from(t.at("m01")),
                                           complex_from(t.at("m10"))};
        }
        if (j.contains("p_l") && !j.at("p_l").is_null()) {
            doc.p_l = j.at("p_l").get<double>();
        }
        doc.coupling = j.value("coupling", "");
        doc.branch = j.value("branch", "");
        doc.method = j.value("method", "");
        return doc;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

std::string dump_circuit(const CircuitDocument &doc) { return emit_circuit(doc).dump(2) + "\n"; }

CircuitDocument load_circuit(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return parse_circuit(j);
}

}  // namespace qfilter
