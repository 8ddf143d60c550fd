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

#include "nosig/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>

#include "nosig/errors.hpp"
#include "nosig/report_io.hpp"

namespace nosig {

std::vector<double> SweepAxis::values() const {
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out[k] = steps == 1 ? min : min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    if (steps > 1) {
        out.back() = max;
    }
    return out;
}

std::vector<double> MinimizeAxis::values() const {
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out[k] = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
    }
    return out;
}

void validate(const SweepSpec &spec) {
    const ScenarioKind kind = spec.base.kind;
    std::set<std::string, std::less<>> seen;
    for (const auto &axis : spec.axes) {
        if (!is_parameter(kind, axis.name)) {
            throw BadSpec("'" + axis.name + "' is not a parameter of " + std::string(to_string(kind)));
        }
        if (!seen.insert(axis.name).second) {
            throw BadSpec("parameter '" + axis.name + "' appears twice");
        }
        if (axis.steps == 0) {
            throw BadSpec("axis '" + axis.name + "' needs at least one step");
        }
        if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || axis.min > axis.max) {
            throw BadSpec("axis '" + axis.name + "' needs finite bounds with min <= max");
        }
    }
    for (const auto &axis : spec.minimize_over) {
        if (!is_phase_parameter(kind, axis.name)) {
            throw BadSpec("'" + axis.name + "' is not a machine phase of " + std::string(to_string(kind)));
        }
        if (!seen.insert(axis.name).second) {
            throw BadSpec("parameter '" + axis.name + "' appears twice");
        }
        if (axis.steps == 0) {
            throw BadSpec("minimize axis '" + axis.name + "' needs at least one step");
        }
    }
}

namespace {

// Odometer over a list of grids, last index fastest.
bool advance(std::vector<std::size_t> &index, const std::vector<std::vector<double>> &grids) {
    for (std::size_t k = index.size(); k-- > 0;) {
        if (++index[k] < grids[k].size()) {
            return true;
        }
        index[k] = 0;
    }
    return false;
}

std::size_t cardinality(const std::vector<std::vector<double>> &grids) {
    std::size_t n = 1;
    for (const auto &g : grids) {
        n *= g.size();
    }
    return n;
}

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::vector<double>> &grids) {
    std::vector<std::size_t> index(grids.size());
    for (std::size_t k = grids.size(); k-- > 0;) {
        index[k] = flat % grids[k].size();
        flat /= grids[k].size();
    }
    return index;
}

SweepRow evaluate(const SweepSpec &spec, const std::vector<std::vector<double>> &axis_grids,
                  const std::vector<std::vector<double>> &phase_grids, std::size_t flat) {
    ScenarioConfig cfg = spec.base;
    SweepRow row;
    const auto index = unflatten(flat, axis_grids);
    for (std::size_t k = 0; k < spec.axes.size(); ++k) {
        const double v = axis_grids[k][index[k]];
        set_parameter(cfg, spec.axes[k].name, v);
        row.values.push_back(v);
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> phase_index(phase_grids.size(), 0);
    do {
        ScenarioConfig point = cfg;
        for (std::size_t k = 0; k < phase_grids.size(); ++k) {
            set_parameter(point, spec.minimize_over[k].name, phase_grids[k][phase_index[k]]);
        }
        best = std::min(best, run_scenario(point).distance);
    } while (advance(phase_index, phase_grids));
    row.distance = best;
    row.verdict = best > cfg.signalling_threshold ? Verdict::signalling : Verdict::no_signalling;
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate(spec);
    // Surface config errors once, before fanning out.
    (void)resolve(spec.base);
    std::vector<std::vector<double>> axis_grids;
    for (const auto &axis : spec.axes) {
        axis_grids.push_back(axis.values());
    }
    std::vector<std::vector<double>> phase_grids;
    for (const auto &axis : spec.minimize_over) {
        phase_grids.push_back(axis.values());
    }
    const std::size_t count = cardinality(axis_grids);
    std::vector<SweepRow> rows(count);

    std::size_t threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = evaluate(spec, axis_grids, phase_grids, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::vector<std::vector<double>> zero_set(const std::vector<SweepRow> &rows, double tol) {
    std::vector<std::vector<double>> out;
    for (const auto &row : rows) {
        if (row.distance < tol) {
            out.push_back(row.values);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_double(std::string_view s, std::string_view context) {
    double v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
        throw BadSpec("bad number '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

std::size_t parse_count(std::string_view s, std::string_view context) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || v == 0) {
        throw BadSpec("bad step count '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

}  // namespace

std::vector<SweepAxis> parse_axes(std::string_view text) {
    std::vector<SweepAxis> axes;
    for (std::string_view item : split(text, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw BadSpec("axis '" + std::string(item) + "' is not NAME=MIN:MAX:STEPS");
        }
        const auto range = split(item.substr(eq + 1), ':');
        if (range.size() != 3) {
            throw BadSpec("axis '" + std::string(item) + "' is not NAME=MIN:MAX:STEPS");
        }
        SweepAxis axis;
        axis.name = std::string(trim(item.substr(0, eq)));
        axis.min = parse_double(range[0], item);
        axis.max = parse_double(range[1], item);
        axis.steps = parse_count(range[2], item);
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::vector<MinimizeAxis> parse_minimize(std::string_view text, std::size_t steps) {
    std::vector<MinimizeAxis> out;
    for (std::string_view name : split(text, ',')) {
        if (name.empty()) {
            throw BadSpec("empty name in minimize list");
        }
        out.push_back({std::string(name), steps});
    }
    return out;
}

void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    for (const auto &axis : spec.axes) {
        out << axis.name << ',';
    }
    out << "distance,verdict\n";
    for (const auto &row : rows) {
        for (double v : row.values) {
            out << format_double(v) << ',';
        }
        out << format_double(row.distance) << ',' << to_string(row.verdict) << '\n';
    }
}

}  // namespace nosig
