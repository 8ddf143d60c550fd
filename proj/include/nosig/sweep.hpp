// Copyright 2026 The nosig Authors
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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nosig/scenario.hpp"

namespace nosig {

/// Endpoint-inclusive grid: steps evenly spaced values from min to max.
struct SweepAxis {
    std::string name;
    double min = 0;
    double max = 0;
    std::size_t steps = 2;

    std::vector<double> values() const;
};

inline constexpr std::size_t DEFAULT_PHASE_STEPS = 16;

/// Phase axis minimized over the grid k * 2 pi / steps, k = 0 .. steps - 1.
struct MinimizeAxis {
    std::string name;
    std::size_t steps = DEFAULT_PHASE_STEPS;

    std::vector<double> values() const;
};

struct SweepSpec {
    ScenarioConfig base;
    std::vector<SweepAxis> axes;
    std::vector<MinimizeAxis> minimize_over;
    // 0 picks the hardware concurrency.
    std::size_t threads = 0;
};

struct SweepRow {
    std::vector<double> values;  // one per axis, in axis order
    double distance;
    Verdict verdict;
};

/// Throws BadSpec.
void validate(const SweepSpec &spec);

/// One row per grid point, lexicographic with the first axis slowest. Rows do
/// not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

/// Parameter tuples of rows with distance < tol.
std::vector<std::vector<double>> zero_set(const std::vector<SweepRow> &rows, double tol);

/// "NAME=MIN:MAX:STEPS[,...]". Throws BadSpec.
std::vector<SweepAxis> parse_axes(std::string_view text);
/// "mu,nu" with a shared step count. Throws BadSpec.
std::vector<MinimizeAxis> parse_minimize(std::string_view text, std::size_t steps = DEFAULT_PHASE_STEPS);

/// Header `name1,...,distance,verdict`, one line per row, %.17g numbers.
void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows);

}  // namespace nosig
