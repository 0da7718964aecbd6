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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qfilter/cli.hpp"
#include "qfilter/sweep.hpp"
#include "qfilter/synth.hpp"

using namespace qfilter;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "qfilter_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string read_file(const fs::path &p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

int count_lines(const std::string &s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("complex number parsing") {
    CHECK(parse_complex("0.5") == cplx(0.5));
    CHECK(parse_complex("-0.5") == cplx(-0.5));
    CHECK(parse_complex("0.3+0.4j") == cplx(0.3, 0.4));
    CHECK(parse_complex("0.3-0.4j") == cplx(0.3, -0.4));
    CHECK(parse_complex("-0.4j") == cplx(0.0, -0.4));
    CHECK(parse_complex("j") == cplx(0.0, 1.0));
    CHECK(parse_complex("1e-3+2e-1j") == cplx(1e-3, 0.2));
    CHECK(parse_complex("+0.5") == cplx(0.5));
    CHECK(!parse_complex(""));
    CHECK(!parse_complex("abc"));
    CHECK(!parse_complex("0.3+0.4"));
}

TEST_CASE("solve summaries") {
    CHECK(run({"solve", "--m00", "1", "--m01", "0.5", "--m10", "0.5"}).out ==
          "P_L=0.287187 coupling=A0B0 branch=case-iv\n");
    CHECK(run({"solve", "--m00", "1", "--m01", "1", "--m10", "1"}).out ==
          "P_L=1.000000 coupling=A0B0 branch=identity\n");
    const Run r = run({"solve", "--m00", "0.85", "--m01", "0.9", "--m10", "0.9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coupling=B0A1") != std::string::npos);
}

TEST_CASE("solve errors") {
    CHECK(run({"solve", "--m00", "1.5"}).code == kExitInvalid);
    CHECK(run({"solve", "--m00", "x"}).code == kExitInvalid);
    CHECK(run({"solve", "--coupling", "zz"}).code == kExitInvalid);
    CHECK(run({"bogus"}).code == kExitInvalid);
    CHECK(run({}).code == kExitInvalid);
}

TEST_CASE("solve with an explicit coupling") {
    const Run a1b1 = run({"solve", "--m00", "0.5", "--m01", "0.7", "--m10", "0.7", "--coupling", "a1b1"});
    CHECK(a1b1.code == 0);
    CHECK(a1b1.out.find("coupling=A1B1 branch=oracle") != std::string::npos);
    const Run b0a1 = run({"solve", "--m00", "0.85", "--m01", "0.9", "--m10", "0.9", "--coupling", "b0a1"});
    CHECK(b0a1.out.find("coupling=B0A1") != std::string::npos);
}

TEST_CASE("solve writes a circuit that verifies") {
    const fs::path path = temp_path("solve.json");
    REQUIRE(run({"solve", "--m00", "0.3+0.2j", "--m01", "0.1", "--m10", "0.7j", "--out", path.string()}).code == 0);
    const CircuitDocument doc = load_circuit(read_file(path));
    CHECK(doc.method == "oracle");
    const Run v = run({"verify", "--circuit", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("residual=") != std::string::npos);
}

TEST_CASE("verify closure for random filters of every class") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> ph(-3.14159, 3.14159);
    const fs::path path = temp_path("closure.json");
    for (int cls = 0; cls < 3; ++cls) {
        for (int i = 0; i < 200; ++i) {
            const double a = u(rng), b = u(rng), b2 = u(rng);
            std::vector<std::string> args{"solve", "--out", path.string()};
            auto num = [](double v) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                return std::string(buf);
            };
            auto cnum = [&](cplx v) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%.17g%+.17gj", v.real(), v.imag());
                return std::string(buf);
            };
            if (cls == 0) {
                args.insert(args.end(), {"--m00", num(a), "--m01", num(b), "--m10", num(b)});
            } else if (cls == 1) {
                args.insert(args.end(), {"--m00", num(a), "--m01", num(b), "--m10", num(b2)});
            } else {
                args.insert(args.end(), {"--m00", cnum(std::polar(a, ph(rng))), "--m01", cnum(std::polar(b, ph(rng))),
                                         "--m10", cnum(std::polar(b, ph(rng)))});
            }
            const Run s = run(args);
            REQUIRE_MESSAGE(s.code == 0, s.err);
            const Run v = run({"verify", "--circuit", path.string()});
            CHECK_MESSAGE(v.code == 0, v.out);
        }
    }
}

TEST_CASE("verify catches a perturbed transmittance") {
    const fs::path path = temp_path("perturbed.json");
    REQUIRE(run({"solve", "--m00", "1", "--m01", "0.5", "--m10", "0.5", "--out", path.string()}).code == 0);
    nlohmann::json j = nlohmann::json::parse(read_file(path));
    bool done = false;
    for (auto &e : j["elements"]) {
        if (e["kind"] == "attenuator" && !done) {
            e["params"]["t"] = e["params"]["t"].get<double>() + 0.01;
            done = true;
        }
    }
    REQUIRE(done);
    std::ofstream(path) << j.dump(2);
    CHECK(run({"verify", "--circuit", path.string()}).code == kExitResidual);
}

TEST_CASE("verify of an empty circuit") {
    const fs::path path = temp_path("empty.json");
    std::ofstream(path) << dump_circuit(CircuitDocument{});
    const Run v = run({"verify", "--circuit", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("P_L=1.000000000000 m00=1+0j m01=1+0j m10=1+0j") != std::string::npos);
}

TEST_CASE("verify parse errors") {
    const fs::path path = temp_path("broken.json");
    std::ofstream(path) << "{not json";
    CHECK(run({"verify", "--circuit", path.string()}).code == kExitInvalid);
    CHECK(run({"verify", "--circuit", temp_path("missing.json").string()}).code == kExitInvalid);
}

TEST_CASE("sweeps") {
    SUBCASE("fig2 grid 3") {
        const Run r = run({"sweep", "--mode", "fig2", "--grid", "3"});
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) == 10);
        CHECK(r.out.rfind("1,1,1,A0B0,identity\n") == r.out.size() - std::string("1,1,1,A0B0,identity\n").size());
    }
    SUBCASE("fig3 grid 50 has B0A1 near (0.85, 0.9)") {
        const Run r = run({"sweep", "--mode", "fig3", "--grid", "50"});
        CHECK(r.out.find("0.86,0.9,B0A1\n") != std::string::npos);
    }
    SUBCASE("complex CZ corner") {
        const Run r = run({"sweep", "--mode", "complex", "--phi", "3.14159265358979", "--grid", "2"});
        CHECK(r.out.find("1,1,3.14159265359,0.111111111111\n") != std::string::npos);
    }
    SUBCASE("edges") {
        const Run r = run({"sweep", "--mode", "fig2", "--grid", "3", "--include-edges"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\n0,0,") != std::string::npos);
    }
    SUBCASE("bad flags") {
        CHECK(run({"sweep", "--grid", "1"}).code == kExitInvalid);
        CHECK(run({"sweep", "--mode", "fig9"}).code == kExitInvalid);
    }
    SUBCASE("file output") {
        const fs::path path = temp_path("sweep.csv");
        CHECK(run({"sweep", "--grid", "4", "--out", path.string()}).code == 0);
        CHECK(count_lines(read_file(path)) == 17);
    }
}

TEST_CASE("sweep output does not depend on the worker count") {
    for (SweepMode mode : {SweepMode::Probability, SweepMode::Winner, SweepMode::Complex}) {
        SweepOptions opts{mode, 23, 1.3, false, 1};
        const std::string serial = sweep_csv(opts);
        opts.workers = 7;
        CHECK(sweep_csv(opts) == serial);
        CHECK(sweep_csv(opts) == serial);
    }
}

TEST_CASE("sweep axis") {
    CHECK(sweep_axis(4, false) == std::vector<double>{0.25, 0.5, 0.75, 1.0});
    CHECK(sweep_axis(3, true) == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("worker count from the environment") {
    setenv("QFILTER_WORKERS", "3", 1);
    CHECK(default_worker_count() == 3);
    setenv("QFILTER_WORKERS", "zero", 1);
    CHECK(default_worker_count() >= 1);
    unsetenv("QFILTER_WORKERS");
}

TEST_CASE("oracle command") {
    const Run r = run({"oracle", "--m00", "1", "--m01", "0.5", "--m10", "0.5", "--coupling", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("best A0B0 p_l=0.287187") != std::string::npos);
    CHECK(r.out.find("gap=") != std::string::npos);

    const Run product = run({"oracle", "--m00", "0.25", "--m01", "0.5", "--m10", "0.5"});
    CHECK(product.out.find("best A0B0 p_l=1.000000") != std::string::npos);

    const Run cz = run({"oracle", "--m00", "1", "--m01", "1", "--m10", "1", "--phi", "3.141592653589793",
                        "--coupling", "a0b0", "--resolution", "32"});
    CHECK(cz.out.find("A0B0 p_l=0.11111") != std::string::npos);

    const Run degenerate = run({"oracle", "--m00", "0.5", "--m01", "0", "--m10", "0", "--coupling", "b0a1"});
    CHECK(degenerate.code == kExitNoFeasible);
    CHECK(degenerate.out.find("degenerate") != std::string::npos);
    CHECK(run({"oracle", "--resolution", "3"}).code == kExitInvalid);
}

#ifdef QFILTER_CLI_PATH
TEST_CASE("installed binary runs") {
    const std::string cmd = std::string(QFILTER_CLI_PATH) + " solve --m00 1 --m01 0.5 --m10 0.5 > " +
                            temp_path("stdout.txt").string();
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(read_file(temp_path("stdout.txt")) == "P_L=0.287187 coupling=A0B0 branch=case-iv\n");
    const std::string bad = std::string(QFILTER_CLI_PATH) + " solve --m00 2 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == kExitInvalid);
}
#endif
