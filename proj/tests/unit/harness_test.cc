// Copyright 2026 The infobargain Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../oracles.h"
#include "doctest.h"
#include "infobargain/harness.h"
#include "infobargain/trace.h"

namespace infobargain {
namespace {

TEST_SUITE("harness") {
  TEST_CASE("bundled grid ids are stable") {
    const auto grid = BundledGrid();
    REQUIRE(grid.size() == 87);
    for (std::size_t k = 0; k < grid.size(); ++k) CHECK(grid[k].id == static_cast<int>(k) + 1);
    const auto& c52 = FindConfig(grid, 52);
    CHECK(c52.task_type == TaskType::kBargaining);
    CHECK(c52.duration == Duration::kLongTerm);
    CHECK(c52.proposer_assignment == ProposerAssignment::kRandom);
    CHECK(c52.role_dynamics == RoleDynamics::kAlternating);
    CHECK(c52.value_setting == "bounded");
    const auto& c54 = FindConfig(grid, 54);
    CHECK(c54.role_dynamics == RoleDynamics::kFixed);
    CHECK(c54.proposer_assignment == ProposerAssignment::kSystematic);
    const auto& c82 = FindConfig(grid, 82);
    CHECK(c82.task_type == TaskType::kPersuasion);
    CHECK(c82.role_dynamics == RoleDynamics::kAlternating);
    CHECK(c82.proposer_assignment == ProposerAssignment::kRandom);
    const auto& c83 = FindConfig(grid, 83);
    CHECK(c83.role_dynamics == RoleDynamics::kFixed);
    CHECK(c83.scenario == "math_baseline");
    CHECK_THROWS_AS(FindConfig(grid, 999), ConfigurationError);
  }

  TEST_CASE("grid expansion and overrides") {
    const auto doc = nlohmann::json::parse(R"({
      "defaults": {"runs": 3},
      "blocks": [{
        "first_id": 10,
        "fixed": {"task_type": "bargaining", "duration": "long_term", "value_setting": "bounded",
                  "scenario": "math_baseline"},
        "axes": [
          {"name": "role_dynamics", "values": ["fixed", "alternating"]},
          {"name": "proposer_assignment", "values": ["random", "systematic"]}
        ]
      }],
      "overrides": [{"id": 12, "runs": 5}]
    })");
    const auto g = BuildGrid(doc);
    REQUIRE(g.size() == 4);
    CHECK(g[0].id == 10);
    CHECK(g[1].proposer_assignment == ProposerAssignment::kSystematic);
    CHECK(g[2].role_dynamics == RoleDynamics::kAlternating);
    CHECK(g[2].runs == 5);
    CHECK(g[0].runs == 3);
    auto dup = doc;
    dup["blocks"].push_back(doc["blocks"][0]);
    CHECK_THROWS_AS(BuildGrid(dup), ValidationError);
  }

  TEST_CASE("config validation and json round trip") {
    ExperimentConfig c;
    c.id = 1;
    c.role_dynamics = RoleDynamics::kFixed;
    CHECK_NOTHROW(c.Validate());
    const auto back = ConfigFromJson(ConfigToJson(c));
    CHECK(ConfigToJson(back) == ConfigToJson(c));
    c.runs = 0;
    CHECK_THROWS_AS(c.Validate(), ValidationError);
    CHECK_THROWS_AS(ConfigFromJson(nlohmann::json{{"id", 1}, {"task_type", "poker"}}), Error);
  }

  TEST_CASE("summary statistics") {
    const auto m = ComputeMeanSd({1, 2, 3, 4});
    CHECK(m.mean == 2.5);
    CHECK(m.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(ComputeMeanSd({7}).sd == 0.0);
    std::vector<RunRecord> recs(3);
    recs[0] = {0, 1, true, 1, 0, 0.5, false, ""};
    recs[1] = {1, 2, false, std::nullopt, 1, 0.1, false, ""};
    recs[2] = {2, 3, false, std::nullopt, std::nullopt, 0.0, true, "agent_failure: x"};
    const auto s = Summarize(4, recs);
    CHECK(s.failures == 1);
    CHECK(s.warnings.size() == 1);
    CHECK(s.consensus_rate == 0.5);
    CHECK(s.final_proposer_payoff.n == 2);
    CHECK(s.deal_timestep.mean == 1.0);
  }

  TEST_CASE("parallel and serial experiments agree") {
    const auto grid = BundledGrid();
    const auto f = ScriptedFactory();
    for (int id : {25, 52, 76, 82}) {
      const auto a = RunExperiment(FindConfig(grid, id), f);
      const auto b = RunExperimentSerial(FindConfig(grid, id), f);
      CHECK(SummaryToJson(a) == SummaryToJson(b));
    }
  }

  TEST_CASE("summaries are recomputable from trace files") {
    const auto dir = std::filesystem::temp_directory_path() / "infobargain_harness_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ExperimentOptions o;
    o.trace_dir = dir.string();
    const auto c = FindConfig(BundledGrid(), 76);
    const auto s = RunExperiment(c, ScriptedFactory(), o);
    std::vector<RunRecord> recs;
    for (int run = 0; run < c.runs; ++run) {
      std::ifstream in(dir / ("config76_run" + std::to_string(run) + ".jsonl"));
      REQUIRE(in.good());
      recs.push_back(RecordFromTrace(ReadTrace(in), run));
    }
    CHECK(SummaryToJson(Summarize(76, recs)) == SummaryToJson(s));
    CHECK(SummaryToJson(SummaryFromJson(SummaryToJson(s))) == SummaryToJson(s));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("summary csv") {
    const auto s = RunExperiment(FindConfig(BundledGrid(), 54), ScriptedFactory());
    std::ostringstream os;
    WriteSummariesCsv(os, {s});
    CHECK(os.str().rfind("config_id,", 0) == 0);
    CHECK(os.str().find("\n54,12,0,1,") != std::string::npos);
  }

  TEST_CASE("ground truth and hypothesis vectors") {
    const auto grid = BundledGrid();
    CHECK(GroundTruth(FindConfig(grid, 54)) == doctest::Approx(2.0 / 3.0));
    CHECK(GroundTruth(FindConfig(grid, 83)) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    const double alt = GroundTruth(FindConfig(grid, 52));
    CHECK(alt == doctest::Approx((2.0 / 3.0) / 1.99).epsilon(1e-9));
    CHECK(Hypothesis(FindConfig(grid, 82)) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  }

  TEST_CASE("pearson") {
    CHECK(Pearson({1, 2, 3}, {1, 2, 3}) == 1.0);
    CHECK(Pearson({1, 2, 3}, {-1, -2, -3}) == -1.0);
    // Frozen from a direct covariance/stdev computation.
    CHECK(Pearson({1, 2, 3, 4}, {2, 4, 5, 9}) == doctest::Approx(0.9647638212377322).epsilon(1e-14));
    CHECK(Pearson({1, 2, 3, 4}, {2, 4, 5, 9}) ==
          doctest::Approx(testing::NaivePearson({1, 2, 3, 4}, {2, 4, 5, 9})).epsilon(1e-14));
    CHECK_THROWS_AS(Pearson({1, 2}, {1, 2, 3}), ShapeError);
    CHECK_THROWS_AS(Pearson({1, 1, 1}, {1, 2, 3}), UndefinedCorrelationError);
  }

  TEST_CASE("p-values use the t distribution on n - 2 degrees of freedom") {
    // Frozen from an independent statistics package.
    CHECK(PearsonPValue(0.9, 7) == doctest::Approx(0.005751515181902881).epsilon(1e-10));
    CHECK(PearsonPValue(0.9369, 7) == doctest::Approx(0.0018564628974098135).epsilon(1e-10));
    CHECK(PearsonPValue(0.9369, 7, false) == doctest::Approx(0.0009282314487049067).epsilon(1e-10));
    CHECK(PearsonPValue(0.9369, 6, false) == doctest::Approx(0.0029233976022500045).epsilon(1e-10));
    CHECK(PearsonPValue(1.0, 7) == 0.0);
  }

  TEST_CASE("correlation report") {
    std::vector<RunSummary> s(4);
    std::vector<double> ref = {0.1, 0.2, 0.3, 0.5};
    for (int k = 0; k < 4; ++k) s[k].final_proposer_payoff.mean = ref[k] * 2 + 1;
    const auto r = CorrelationReport(s, ref, "gt");
    CHECK(r.r == doctest::Approx(1.0));
    CHECK(r.n == 4);
    CHECK(CorrelationToJson(r)["label"] == "gt");
    CHECK_THROWS_AS(CorrelationReport(s, {1, 2}, "x"), ShapeError);
    CHECK_THROWS_AS(CorrelationReport(s, {1, 1, 1, 1}, "x"), UndefinedCorrelationError);
  }

  TEST_CASE("run seeds are stable") {
    const auto c = FindConfig(BundledGrid(), 1);
    CHECK(RunSeed(c, 0) == RunSeed(c, 0));
    CHECK(RunSeed(c, 0) != RunSeed(c, 1));
  }
}

}  // namespace
}  // namespace infobargain
