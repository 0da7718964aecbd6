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

#include "qfilter/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qfilter/filtercore.hpp"
#include "qfilter/oracle.hpp"
#include "qfilter/solve.hpp"
#include "qfilter/structure.hpp"
#include "qfilter/sweep.hpp"
#include "qfilter/synth.hpp"

namespace qfilter {

namespace {

std::optional<double> parse_real(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string complex_text(cplx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gj", v.real(), v.imag());
    return buf;
}

struct FilterFlags {
    std::string m00 = "1";
    std::string m01 = "1";
    std::string m10 = "1";
    double phi = 0.0;

    void attach(CLI::App &cmd) {
        cmd.add_option("--m00", m00, "coefficient of |00>");
        cmd.add_option("--m01", m01, "coefficient of |01>");
        cmd.add_option("--m10", m10, "coefficient of |10>");
        cmd.add_option("--phi", phi, "extra phase on m00 in radians");
    }

    FilterSpec spec() const {
        auto get = [](const std::string &text, const char *name) {
            auto v = parse_complex(text);
            if (!v) {
                throw Error(ErrorKind::Parse, std::string("cannot parse ") + name + " = '" + text + "'");
            }
            return *v;
        };
        FilterSpec s{get(m00, "m00"), get(m01, "m01"), get(m10, "m10")};
        if (phi != 0.0) {
            s.m00 *= std::polar(1.0, phi);
        }
        if (!s.magnitudes_valid()) {
            throw Error(ErrorKind::InvalidFilter, "filter coefficients must have magnitude <= 1");
        }
        return s;
    }
};

int exit_code_for(const Error &e) {
    switch (e.kind()) {
    case ErrorKind::NoFeasiblePoint:
        return kExitNoFeasible;
    case ErrorKind::Infeasible:
    case ErrorKind::NotDiagonal:
    case ErrorKind::DegenerateM11:
    case ErrorKind::NotAdmissible:
        return kExitResidual;
    default:
        return kExitInvalid;
    }
}

std::optional<CouplingPair> coupling_flag(const std::string &text, bool allow_all) {
    if (text == (allow_all ? "all" : "auto")) {
        return std::nullopt;
    }
    auto c = parse_coupling(text);
    if (!c) {
        throw Error(ErrorKind::Parse, "unknown coupling '" + text + "'");
    }
    return c;
}

int cmd_solve(const FilterFlags &flags, const std::string &coupling, const std::string &out_path, std::ostream &out) {
    const FilterSpec spec = flags.spec();
    const Solution sol = solve_filter(spec, coupling_flag(coupling, false));
    const SubmatrixAB u = build_submatrix(spec, sol);
    CircuitDocument doc{decompose(u), spec, sol.p_l, std::string(coupling_name(sol.coupling)), sol.branch,
                        sol.method};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << dump_circuit(doc);
        if (!f) {
            throw Error(ErrorKind::Parse, "cannot write " + out_path);
        }
    }
    out << "P_L=" << fixed(sol.p_l, 6) << " coupling=" << coupling_name(sol.coupling) << " branch=" << sol.branch
        << "\n";
    return kExitOk;
}

int cmd_sweep(const SweepOptions &opts, const std::string &out_path, std::ostream &out) {
    const std::string csv = sweep_csv(opts);
    if (out_path.empty()) {
        out << csv;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << csv;
    if (!f) {
        throw Error(ErrorKind::Parse, "cannot write " + out_path);
    }
    return kExitOk;
}

int cmd_verify(const std::string &path, std::ostream &out) {
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorKind::Parse, "cannot read " + path);
    }
    std::stringstream text;
    text << f.rdbuf();
    const CircuitDocument doc = load_circuit(text.str());

    const Mat4 transfer = doc.circuit.transfer_matrix();
    const StructureReport structure =
        doc.target_filter ? check_structure_for(transfer, *doc.target_filter)
                          : check_structure(transfer, StructureOptions{1e-10, true});
    if (!structure.admissible) {
        const auto &v = structure.violations.front();
        out << "structure violation at (" << mode_name(v.row) << ", " << mode_name(v.col)
            << ") magnitude=" << v.magnitude << "\n";
        return kExitResidual;
    }

    const MatX full = doc.circuit.unitary();
    const double unitarity = unitarity_residual(full);
    const CoincidenceMap w = coincidence_map(full);
    ExtractedFilter rec;
    try {
        rec = extract_filter(w, 1e-9);
    } catch (const Error &e) {
        out << e.what() << "\n";
        return kExitResidual;
    }

    double residual = std::max(unitarity, rec.max_off_diagonal);
    if (doc.target_filter) {
        const FilterSpec &t = *doc.target_filter;
        residual = std::max({residual, std::abs(rec.m[0] - t.m00), std::abs(rec.m[1] - t.m01),
                             std::abs(rec.m[2] - t.m10)});
    }
    if (doc.p_l) {
        residual = std::max(residual, std::abs(rec.p_l - *doc.p_l));
    }
    out << "P_L=" << fixed(rec.p_l, 12) << " m00=" << complex_text(rec.m[0]) << " m01=" << complex_text(rec.m[1])
        << " m10=" << complex_text(rec.m[2]) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", residual);
    out << "residual=" << buf << "\n";
    return residual < 1e-9 ? kExitOk : kExitResidual;
}

int cmd_oracle(const FilterFlags &flags, const std::string &coupling, int resolution, int rounds, std::ostream &out) {
    const FilterSpec spec = flags.spec();
    OracleConfig cfg;
    if (resolution > 0) {
        cfg.grid_points_per_axis = resolution;
    }
    if (rounds > 0) {
        cfg.refinement_rounds = rounds;
    }
    cfg.validate();

    std::vector<CouplingPair> couplings;
    if (auto c = coupling_flag(coupling, true)) {
        couplings.push_back(*c);
    } else {
        couplings.assign(kAllCouplings.begin(), kAllCouplings.end());
    }

    std::optional<Solution> best;
    for (CouplingPair c : couplings) {
        out << coupling_name(c) << " ";
        Solution sol;
        try {
            sol = oracle_max_pl(spec, c, cfg);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateTemplate && e.kind() != ErrorKind::NoFeasiblePoint) {
                throw;
            }
            out << (e.kind() == ErrorKind::DegenerateTemplate ? "degenerate" : "infeasible") << "\n";
            continue;
        }
        out << "p_l=" << fixed(sol.p_l, 9);
        try {
            const Solution analytic = solve_filter(spec, c, cfg);
            if (analytic.method == "analytic") {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%+.3e", analytic.p_l - sol.p_l);
                out << " analytic=" << fixed(analytic.p_l, 9) << " gap=" << buf;
                if (analytic.p_l - sol.p_l < -1e-6) {
                    out << " oracle-exceeds-analytic";
                }
            }
        } catch (const Error &) {
        }
        out << "\n";
        if (!best || sol.p_l > best->p_l) {
            best = sol;
        }
    }
    if (!best) {
        out << "no feasible configuration\n";
        return kExitNoFeasible;
    }
    out << "best " << coupling_name(best->coupling) << " p_l=" << fixed(best->p_l, 9) << "\n";
    return kExitOk;
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    if (text.back() != 'j' && text.back() != 'i') {
        auto re = parse_real(text);
        return re ? std::optional<cplx>(*re) : std::nullopt;
    }
    text.remove_suffix(1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_part = [](std::string_view s) -> std::optional<double> {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_real(s);
    };
    if (split == std::string_view::npos) {
        auto im = imag_part(text);
        return im ? std::optional<cplx>(cplx(0.0, *im)) : std::nullopt;
    }
    auto re = parse_real(text.substr(0, split));
    auto im = imag_part(text.substr(split));
    if (!re || !im) {
        return std::nullopt;
    }
    return cplx(*re, *im);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Optimal linear-optical two-qubit diagonal filters", "qfilter"};
    app.require_subcommand(1);

    FilterFlags solve_flags;
    std::string solve_coupling = "auto";
    std::string solve_out;
    auto *solve = app.add_subcommand("solve", "optimize one filter and write its circuit");
    solve_flags.attach(*solve);
    solve->add_option("--coupling", solve_coupling, "auto|a0b0|a1b1|b0a1|a0b1");
    solve->add_option("--out", solve_out, "circuit JSON path");

    SweepOptions sweep_opts;
    std::string sweep_mode = "fig2";
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "evaluate a parameter grid to CSV");
    sweep->add_option("--grid", sweep_opts.grid, "points per axis")->check(CLI::Range(2, 100000));
    sweep->add_option("--mode", sweep_mode, "fig2|fig3|complex")
        ->check(CLI::IsMember({"fig2", "fig3", "complex"}));
    sweep->add_option("--phi", sweep_opts.phi, "phase for complex mode");
    sweep->add_flag("--include-edges", sweep_opts.include_edges, "include a=0 and b=0");
    sweep->add_option("--out", sweep_out, "CSV path (stdout if omitted)");

    std::string verify_path;
    auto *verify = app.add_subcommand("verify", "simulate a circuit file and check its filter");
    verify->add_option("--circuit", verify_path, "circuit JSON path")->required();

    FilterFlags oracle_flags;
    std::string oracle_coupling = "all";
    int resolution = 0;
    int rounds = 0;
    auto *oracle = app.add_subcommand("oracle", "brute-force search per coupling");
    oracle_flags.attach(*oracle);
    oracle->add_option("--coupling", oracle_coupling, "all|a0b0|a1b1|b0a1|a0b1");
    oracle->add_option("--resolution", resolution, "grid points per axis");
    oracle->add_option("--rounds", rounds, "refinement passes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_flags, solve_coupling, solve_out, out);
        }
        if (sweep->parsed()) {
            sweep_opts.mode = sweep_mode == "fig3"      ? SweepMode::Winner
                              : sweep_mode == "complex" ? SweepMode::Complex
                                                        : SweepMode::Probability;
            return cmd_sweep(sweep_opts, sweep_out, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_path, out);
        }
        return cmd_oracle(oracle_flags, oracle_coupling, resolution, rounds, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace qfilter
