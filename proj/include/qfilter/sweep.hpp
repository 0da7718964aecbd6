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

#include <string>
#include <vector>

namespace qfilter {

/// Probability: a,b,p_l,coupling,branch of the best symmetric configuration.
/// Winner: a,b,winner with winner one of A0B0, B0A1, tie.
/// Complex: a,b,phi,p_l of the phase-symmetric filter (a e^{i phi}, b, b).
enum class SweepMode { Probability, Winner, Complex };

struct SweepOptions {
    SweepMode mode = SweepMode::Probability;
    /// Points per axis, >= 2.
    int grid = 50;
    /// Only read in Complex mode.
    double phi = 0.0;
    /// Grid on [0, 1] instead of (0, 1].
    bool include_edges = false;
    /// 0 means QFILTER_WORKERS, else the hardware concurrency.
    int workers = 0;
};

/// Axis values: i/N for i = 1..N, or i/(N-1) for i = 0..N-1 with edges.
std::vector<double> sweep_axis(int grid, bool include_edges);

/// CSV text with a header row, rows ordered by a then b, numbers at 12
/// significant digits. Identical output for any worker count.
/// Throws std::invalid_argument for grid < 2.
std::string sweep_csv(const SweepOptions &opts);

/// QFILTER_WORKERS if set to a positive integer, else the hardware concurrency.
int default_worker_count();

}  // namespace qfilter
