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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nosig/cli.hpp"
#include "nosig/report_io.hpp"

using namespace nosig;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args, const SelftestFn &selftest = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = dispatch(args, out, err, selftest);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + name;
}

std::size_t lines(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, ZGateReport) {
    const auto r = run({"run", "z_gate", "--basis2-theta", "1.5707963", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_NEAR(doc["trace_distance"].get<double>(), 0.7071067, 1e-6);
    EXPECT_EQ(doc["verdict"], "SIGNALLING");
    EXPECT_EQ(doc["config"]["basis2"]["theta"].get<double>(), 1.5707963);
}

TEST(Cli, CnotDefaultsDoNotSignal) {
    const auto r = run({"run", "cnot"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["verdict"], "NO_SIGNALLING");
}

TEST(Cli, RunAllGivesEightReportsDeterministically) {
    const auto a = run({"run", "all", "--format", "json"});
    const auto b = run({"run", "all", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Json doc = Json::parse(a.out);
    ASSERT_EQ(doc.size(), 8u);
    EXPECT_EQ(doc[0]["scenario"], "cloning");
    EXPECT_EQ(to_canonical_json(doc), a.out);
}

TEST(Cli, GenericPresetSignalsEverywhere) {
    const auto r = run({"run", "all", "--preset", "generic"});
    ASSERT_EQ(r.code, 0);
    for (const auto &report : Json::parse(r.out)) {
        EXPECT_EQ(report["verdict"], "SIGNALLING") << report["scenario"];
    }
}

TEST(Cli, TextFormat) {
    const auto r = run({"run", "cloning", "--preset", "generic", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: SIGNALLING"), std::string::npos);
}

TEST(Cli, BaselineUnitaryDoesNotSignal) {
    const auto r = run({"run", "all", "--preset", "generic", "--baseline", "--seed", "3"});
    ASSERT_EQ(r.code, 0);
    for (const auto &report : Json::parse(r.out)) {
        EXPECT_EQ(report["verdict"], "NO_SIGNALLING") << report["scenario"];
    }
}

TEST(Cli, ConfigFile) {
    const std::string path = temp_path("nosig_cfg.json");
    std::ofstream(path) << R"({"scenario": "z_gate", "basis2": {"theta": 1.0471975511965976}})";
    const auto r = run({"run", "z_gate", "--config", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(Json::parse(r.out)["trace_distance"].get<double>(), 0.5, 1e-12);
    // Flags override the file.
    const auto flagged = run({"run", "z_gate", "--config", path, "--basis2-theta", "0"});
    EXPECT_EQ(Json::parse(flagged.out)["verdict"], "NO_SIGNALLING");
    // The file names a different scenario.
    EXPECT_EQ(run({"run", "cnot", "--config", path}).code, EXIT_CONFIG);
    std::remove(path.c_str());
}

TEST(Cli, EchoedConfigReproducesRun) {
    const auto first = run({"run", "not_gate", "--theta", "0.3", "--mu", "1", "--a", "0.6"});
    ASSERT_EQ(first.code, 0);
    const std::string path = temp_path("nosig_echo.json");
    std::ofstream(path) << Json::parse(first.out)["config"].dump();
    const auto second = run({"run", "not_gate", "--config", path});
    EXPECT_EQ(first.out, second.out);
    std::remove(path.c_str());
}

TEST(Cli, SweepRowCounts) {
    const auto r = run({"sweep", "not_gate", "--axes", "theta=0:3.14159:9", "--minimize", "mu,nu"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), 10u);
    const auto grid = run({"sweep", "not_gate", "--axes", "alpha=0:1.5:5,theta=0:3:7"});
    EXPECT_EQ(lines(grid.out), 36u);
}

TEST(Cli, SweepToFile) {
    const std::string path = temp_path("nosig_sweep.csv");
    const auto r = run({"sweep", "z_gate", "--axes", "basis2_theta=0:3:4", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "basis2_theta,distance,verdict");
    std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, EXIT_USAGE);
    EXPECT_EQ(run({"fly"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"run"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"run", "teleport"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"run", "cnot", "--format", "xml"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"run", "cnot", "--mu", "abc"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"sweep", "all", "--axes", "theta=0:1:2"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"selftest"}).code, EXIT_USAGE);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("sweep"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
    EXPECT_EQ(run({"run", "cnot", "--config", temp_path("does_not_exist.json")}).code, EXIT_CONFIG);
    const std::string path = temp_path("nosig_bad.json");
    std::ofstream(path) << "{not json";
    EXPECT_EQ(run({"run", "cnot", "--config", path}).code, EXIT_CONFIG);
    std::remove(path.c_str());
    EXPECT_EQ(run({"run", "cnot", "--mu", "1"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"run", "z_gate", "--basis2-theta", "5"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"run", "not_gate", "--a", "2"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"sweep", "z_gate", "--axes", "theta=0:1:3"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"sweep", "z_gate", "--axes", "basis2_theta=0:1"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"sweep", "z_gate"}).code, EXIT_CONFIG);
    EXPECT_EQ(run({"sweep", "z_gate", "--axes", "basis2_theta=0:1:2", "--minimize", "mu"}).code, EXIT_CONFIG);
}

TEST(Cli, OutputFailureIsAScenarioError) {
    const auto r = run({"sweep", "z_gate", "--axes", "basis2_theta=0:1:2", "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(r.code, EXIT_SCENARIO);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SelftestUsesCallback) {
    const auto ok = run({"selftest"}, [](std::ostream &out) {
        out << "PASS\n";
        return 0;
    });
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "PASS\n");
    const auto bad = run({"selftest"}, [](std::ostream &) { return 1; });
    EXPECT_EQ(bad.code, EXIT_SELFTEST_FAILED);
}
