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

#include <gtest/gtest.h>

#include <cmath>

#include "nosig/errors.hpp"
#include "nosig/random.hpp"
#include "nosig/report_io.hpp"

using namespace nosig;

TEST(FormatDouble, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(1e-20), "9.9999999999999995e-21");
}

TEST(CanonicalJson, SortedAndStable) {
    const Json doc = Json::parse(R"({"b": [1, 2.5, {"y": null, "x": true}], "a": {"k": "v"}, "c": []})");
    const std::string text = to_canonical_json(doc);
    EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
    EXPECT_EQ(to_canonical_json(Json::parse(text)), text);
}

TEST(CanonicalJson, ReportsRoundTripByteForByte) {
    Rng rng(51);
    for (ScenarioKind kind : ALL_SCENARIOS) {
        const auto report = run_scenario(random_scenario_config(rng, kind, false));
        const std::string text = to_canonical_json(to_json(report));
        EXPECT_EQ(to_canonical_json(Json::parse(text)), text) << to_string(kind);
        const Json parsed = Json::parse(text);
        EXPECT_EQ(parsed["trace_distance"].get<double>(), report.distance);
    }
}

TEST(ConfigJson, RoundTripReproducesResolvedConfig) {
    Rng rng(52);
    for (ScenarioKind kind : ALL_SCENARIOS) {
        const ScenarioConfig cfg = resolve(random_scenario_config(rng, kind, false));
        const Json echoed = Json::parse(to_canonical_json(to_json(cfg)));
        ScenarioConfig rebuilt = ScenarioConfig::defaults(kind);
        apply_config_json(rebuilt, echoed);
        EXPECT_EQ(resolve(rebuilt), cfg) << to_string(kind);
        EXPECT_EQ(run_scenario(rebuilt).distance, run_scenario(cfg).distance);
    }
}

TEST(ConfigJson, PartialDocumentsOverlayDefaults) {
    ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::z_gate);
    apply_config_json(cfg, Json::parse(R"({"basis2": {"theta": 1.5}, "signalling_threshold": 0.01})"));
    EXPECT_EQ(cfg.basis2.theta, 1.5);
    EXPECT_EQ(cfg.basis2.phi, 0);
    EXPECT_EQ(cfg.signalling_threshold, 0.01);

    ScenarioConfig flip = ScenarioConfig::defaults(ScenarioKind::not_gate);
    apply_config_json(flip, Json::parse(R"({"machine": {"memory_dim": 2, "memory": {"psi": [0, {"re": 0, "im": 1}]}}})"));
    EXPECT_EQ(flip.machine.memory.at("psi")[1], Complex(0, 1));
    EXPECT_NO_THROW(resolve(flip));
}

TEST(ConfigJson, RejectsUnknownKeysAndBadTypes) {
    ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::z_gate);
    for (const char *text : {
             R"({"colour": 1})",
             R"({"basis1": {"theta": 1, "psi": 0}})",
             R"({"machine": {"mu": "fast"}})",
             R"({"machine": {"memory_dim": 0}})",
             R"({"machine": {"memory_dim": 1.5}})",
             R"({"machine": {"memory": {"psi1": [{"re": 1}]}}})",
             R"({"not_gate": {"e": 1}})",
             R"({"scenario": "cnot"})",
             R"({"scenario": "nothing"})",
             R"({"sweep": {}})",
             R"([1, 2])",
         }) {
        ScenarioConfig copy = cfg;
        EXPECT_THROW(apply_config_json(copy, Json::parse(text)), BadConfig) << text;
    }
}

TEST(ConfigJson, SweepSection) {
    ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::not_gate);
    SweepSpec spec;
    apply_config_json(cfg,
                      Json::parse(R"({"sweep": {"axes": [{"name": "theta", "min": 0, "max": 3, "steps": 4}],
                                                "minimize": [{"name": "mu"}], "threads": 2}})"),
                      &spec);
    ASSERT_EQ(spec.axes.size(), 1u);
    EXPECT_EQ(spec.axes[0].steps, 4u);
    ASSERT_EQ(spec.minimize_over.size(), 1u);
    EXPECT_EQ(spec.minimize_over[0].steps, DEFAULT_PHASE_STEPS);
    EXPECT_EQ(spec.threads, 2u);
    EXPECT_THROW(apply_config_json(cfg, Json::parse(R"({"sweep": {"axes": [{"name": "theta"}]}})"), &spec), BadConfig);
}

TEST(ReportJson, Schema) {
    const Json r = to_json(run_scenario(ScenarioConfig::generic(ScenarioKind::deletion)));
    for (const char *key : {"scenario", "mode", "config", "trace_distance", "verdict", "closed_form_residual", "rho_left",
                            "rho_right", "tolerances"}) {
        EXPECT_TRUE(r.contains(key)) << key;
    }
    EXPECT_EQ(r.size(), 9u);
    EXPECT_TRUE(r["closed_form_residual"].is_null());
    EXPECT_EQ(r["mode"], "basis_dependence");
    EXPECT_EQ(r["rho_left"][0][0].size(), 2u);
    EXPECT_EQ(r["config"]["scenario"], "deletion");
    EXPECT_TRUE(r["config"]["machine"]["sigma"].is_array());
}

TEST(ReportText, MentionsVerdictAndDistance) {
    const auto report = run_scenario(ScenarioConfig::generic(ScenarioKind::cloning));
    const std::string text = to_text(report);
    EXPECT_NE(text.find("verdict: SIGNALLING"), std::string::npos);
    const std::size_t at = text.find("trace distance: ");
    ASSERT_NE(at, std::string::npos);
    EXPECT_NEAR(std::stod(text.substr(at + 16)), 0.5, 1e-12);
    EXPECT_NE(text.find("rho basis 2 (4x4)"), std::string::npos);
}
