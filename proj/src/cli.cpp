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

#include "nosig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nosig/errors.hpp"
#include "nosig/random.hpp"
#include "nosig/report_io.hpp"
#include "nosig/scenario.hpp"
#include "nosig/sweep.hpp"

namespace nosig {

namespace {

// Flag overrides shared by run and sweep, keyed by parameter name.
struct Overrides {
    std::map<std::string, std::optional<double>> params;
    std::optional<double> threshold;
    bool no_machine = false;
    std::string preset = "default";
    std::string config_file;

    void add_to(CLI::App &cmd) {
        static const char *names[] = {"basis1_theta", "basis1_phi", "basis2_theta", "basis2_phi", "a",    "c",
                                      "alpha",        "theta",      "mu",           "nu",         "phi1", "phi2"};
        for (const char *name : names) {
            std::string flag = std::string("--") + name;
            std::replace(flag.begin(), flag.end(), '_', '-');
            cmd.add_option(flag, params[name], std::string("Set ") + name + " (radians for angles)");
        }
        cmd.add_option("--threshold", threshold, "Signalling threshold on the trace distance");
        cmd.add_flag("--no-machine", no_machine, "Disable the hypothetical machine");
        cmd.add_option("--preset", preset, "Starting configuration")
            ->check(CLI::IsMember({"default", "generic"}));
        cmd.add_option("--config", config_file, "JSON configuration file");
    }
};

Json load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw BadConfig("cannot read config file '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw BadConfig("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

// Preset, then config file, then flags. `strict` rejects flags the kind does not use.
ScenarioConfig build_config(ScenarioKind kind, const Overrides &o, const std::optional<Json> &doc, bool strict,
                            SweepSpec *sweep) {
    ScenarioConfig cfg = o.preset == "generic" ? ScenarioConfig::generic(kind) : ScenarioConfig::defaults(kind);
    if (doc) {
        apply_config_json(cfg, *doc, sweep);
    }
    for (const auto &[name, value] : o.params) {
        if (!value) {
            continue;
        }
        if (!is_parameter(kind, name)) {
            if (strict) {
                std::string flag = name;
                std::replace(flag.begin(), flag.end(), '_', '-');
                throw BadConfig("--" + flag + " is not used by " + std::string(to_string(kind)));
            }
            continue;
        }
        set_parameter(cfg, name, *value);
    }
    if (o.threshold) {
        cfg.signalling_threshold = *o.threshold;
    }
    if (o.no_machine) {
        cfg.machine.enabled = false;
    }
    return cfg;
}

ScenarioKind kind_or_throw(const std::string &name) {
    const auto kind = parse_scenario_kind(name);
    if (!kind) {
        throw CLI::ValidationError("unknown scenario '" + name + "'");
    }
    return *kind;
}

struct RunArgs {
    std::string kind;
    std::string format = "json";
    Overrides overrides;
    bool baseline = false;
    std::uint64_t seed = 0;
};

struct SweepArgs {
    std::string kind;
    std::string axes;
    std::string minimize;
    std::size_t minimize_steps = DEFAULT_PHASE_STEPS;
    std::string out_file;
    std::size_t threads = 0;
    Overrides overrides;
};

int run_command(const RunArgs &args, std::ostream &out) {
    std::vector<ScenarioKind> kinds;
    if (args.kind == "all") {
        kinds.assign(ALL_SCENARIOS.begin(), ALL_SCENARIOS.end());
    } else {
        kinds.push_back(*parse_scenario_kind(args.kind));
    }
    std::optional<Json> doc;
    if (!args.overrides.config_file.empty()) {
        doc = load_config(args.overrides.config_file);
    }
    const bool strict = kinds.size() == 1;
    std::vector<ScenarioConfig> configs;
    for (ScenarioKind kind : kinds) {
        configs.push_back(resolve(build_config(kind, args.overrides, doc, strict, nullptr)));
    }
    std::vector<SignallingReport> reports;
    Rng rng(args.seed);
    for (const auto &cfg : configs) {
        if (args.baseline) {
            reports.push_back(run_with_unitary(cfg, random_unitary(rng, bob_input_dim(cfg.kind))));
        } else {
            reports.push_back(run_scenario(cfg));
        }
    }
    if (args.format == "json") {
        if (args.kind == "all") {
            Json all = Json::array();
            for (const auto &r : reports) {
                all.push_back(to_json(r));
            }
            out << to_canonical_json(all);
        } else {
            out << to_canonical_json(to_json(reports.front()));
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << (i ? "\n" : "") << to_text(reports[i]);
        }
    }
    return EXIT_OK;
}

int sweep_command(const SweepArgs &args, std::ostream &out) {
    const ScenarioKind kind = *parse_scenario_kind(args.kind);
    std::optional<Json> doc;
    if (!args.overrides.config_file.empty()) {
        doc = load_config(args.overrides.config_file);
    }
    SweepSpec spec;
    spec.base = build_config(kind, args.overrides, doc, true, &spec);
    if (!args.axes.empty()) {
        spec.axes = parse_axes(args.axes);
    }
    if (!args.minimize.empty()) {
        spec.minimize_over = parse_minimize(args.minimize, args.minimize_steps);
    }
    if (args.threads != 0) {
        spec.threads = args.threads;
    }
    if (spec.axes.empty()) {
        throw BadSpec("a sweep needs at least one axis (--axes or the config sweep section)");
    }
    spec.base = resolve(spec.base);
    const auto rows = run_sweep(spec);
    if (args.out_file.empty() || args.out_file == "-") {
        write_csv(out, spec, rows);
        return EXIT_OK;
    }
    std::ofstream file(args.out_file, std::ios::binary);
    write_csv(file, spec, rows);
    file.close();
    if (!file) {
        throw Error("cannot write '" + args.out_file + "'");
    }
    return EXIT_OK;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const SelftestFn &selftest) {
    CLI::App app{"Signalling checks for hypothetical quantum machines", "nosig"};
    app.require_subcommand(1);

    RunArgs run;
    CLI::App *run_cmd = app.add_subcommand("run", "Run one scenario (or all) and print a report");
    run_cmd->add_option("kind", run.kind, "Scenario kind or 'all'")->required();
    run_cmd->add_option("--format", run.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_flag("--baseline", run.baseline, "Replace the machine with a random genuine unitary");
    run_cmd->add_option("--seed", run.seed, "Seed for --baseline");
    run.overrides.add_to(*run_cmd);

    SweepArgs sweep;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Evaluate a scenario over a parameter grid, CSV output");
    sweep_cmd->add_option("kind", sweep.kind, "Scenario kind")->required();
    sweep_cmd->add_option("--axes", sweep.axes, "NAME=MIN:MAX:STEPS[,...]");
    sweep_cmd->add_option("--minimize", sweep.minimize, "Phase parameters to minimize over, e.g. mu,nu");
    sweep_cmd->add_option("--minimize-steps", sweep.minimize_steps, "Grid points per minimized phase")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep.out_file, "CSV output file (default stdout)");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default: all cores)");
    sweep.overrides.add_to(*sweep_cmd);

    CLI::App *selftest_cmd = app.add_subcommand("selftest", "Run the acceptance checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (run_cmd->parsed() && run.kind != "all") {
            (void)kind_or_throw(run.kind);
        }
        if (sweep_cmd->parsed()) {
            (void)kind_or_throw(sweep.kind);
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (selftest_cmd->parsed()) {
            if (!selftest) {
                err << "selftest is not available in this build\n";
                return EXIT_USAGE;
            }
            return selftest(out) == 0 ? EXIT_OK : EXIT_SELFTEST_FAILED;
        }
        if (run_cmd->parsed()) {
            return run_command(run, out);
        }
        return sweep_command(sweep, out);
    } catch (const BadConfig &e) {
        err << "config error: " << e.what() << '\n';
        return EXIT_CONFIG;
    } catch (const BadSpec &e) {
        err << "config error: " << e.what() << '\n';
        return EXIT_CONFIG;
    } catch (const std::exception &e) {
        err << "scenario error: " << e.what() << '\n';
        return EXIT_SCENARIO;
    }
}

}  // namespace nosig
