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

#include "qfilter/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qfilter/optgen.hpp"
#include "qfilter/optsym.hpp"
#include "qfilter/solve.hpp"

namespace qfilter {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string probability_row(double a, double b) {
    Solution sol;
    try {
        sol = optimize_symmetric(a, b);
    } catch (const Error &) {
        sol = solve_filter(FilterSpec::symmetric(a, b));
    }
    return num(a) + "," + num(b) + "," + num(sol.p_l) + "," + std::string(coupling_name(sol.coupling)) + "," +
           sol.branch + "\n";
}

std::string winner_row(double a, double b) {
    const SymmetricComparison cmp = compare_symmetric(a, b);
    const std::string winner = cmp.winner ? std::string(coupling_name(*cmp.winner)) : "tie";
    return num(a) + "," + num(b) + "," + winner + "\n";
}

std::string complex_row(double a, double b, double phi) {
    Solution sol = optimize_complex_a0b0(a, b, phi);
    return num(a) + "," + num(b) + "," + num(phi) + "," + num(sol.p_l) + "\n";
}

}  // namespace

std::vector<double> sweep_axis(int grid, bool include_edges) {
    std::vector<double> out;
    out.reserve(grid);
    if (include_edges) {
        for (int i = 0; i < grid; ++i) {
            out.push_back(static_cast<double>(i) / (grid - 1));
        }
    } else {
        for (int i = 1; i <= grid; ++i) {
            out.push_back(static_cast<double>(i) / grid);
        }
    }
    return out;
}

int default_worker_count() {
    if (const char *env = std::getenv("QFILTER_WORKERS")) {
        char *end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
            return static_cast<int>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string sweep_csv(const SweepOptions &opts) {
    if (opts.grid < 2) {
        throw std::invalid_argument("sweep grid must be at least 2");
    }
    const std::vector<double> axis = sweep_axis(opts.grid, opts.include_edges);
    const std::size_t n = axis.size();
    std::vector<std::string> rows(n * n);
    std::vector<std::exception_ptr> errors(n * n);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t cell = next++; cell < rows.size(); cell = next++) {
            const double a = axis[cell / n];
            const double b = axis[cell % n];
            try {
                switch (opts.mode) {
                case SweepMode::Probability:
                    rows[cell] = probability_row(a, b);
                    break;
                case SweepMode::Winner:
                    rows[cell] = winner_row(a, b);
                    break;
                case SweepMode::Complex:
                    rows[cell] = complex_row(a, b, opts.phi);
                    break;
                }
            } catch (...) {
                errors[cell] = std::current_exception();
            }
        }
    };

    const int workers = std::min<int>(opts.workers > 0 ? opts.workers : default_worker_count(), rows.size());
    std::vector<std::jthread> pool;
    for (int i = 1; i < workers; ++i) {
        pool.emplace_back(work);
    }
    work();
    pool.clear();

    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::string out;
    switch (opts.mode) {
    case SweepMode::Probability:
        out = "a,b,p_l,coupling,branch\n";
        break;
    case SweepMode::Winner:
        out = "a,b,winner\n";
        break;
    case SweepMode::Complex:
        out = "a,b,phi,p_l\n";
        break;
    }
    for (const auto &r : rows) {
        out += r;
    }
    return out;
}

}  // namespace qfilter
