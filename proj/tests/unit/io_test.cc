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

#include "doctest.h"
#include "infobargain/rng.h"
#include "infobargain/scenario_io.h"
#include "infobargain/scenarios.h"

namespace infobargain {
namespace {

TEST_SUITE("io") {
  TEST_CASE("task json round trip") {
    const auto t = GradingTask();
    const auto back = TaskFromJson(TaskToJson(t));
    CHECK(back.states == t.states);
    CHECK(back.prior == t.prior);
    CHECK(back.reward_sender == t.reward_sender);
    CHECK(back.reward_receiver == t.reward_receiver);
    const auto path = std::filesystem::temp_directory_path() / "infobargain_task.json";
    SaveTask(t, path.string());
    CHECK(TaskToJson(LoadTask(path.string())) == TaskToJson(t));
    std::filesystem::remove(path);
  }

  TEST_CASE("bundled scenario file matches the built-in task") {
    const auto file = LoadTask(INFOBARGAIN_DATA_DIR "/scenarios/grading_students.json");
    CHECK(TaskToJson(file) == TaskToJson(GradingTask()));
  }

  TEST_CASE("bad documents") {
    CHECK_THROWS_AS(LoadTask("/nonexistent/task.json"), Error);
    auto doc = TaskToJson(GradingTask());
    // Parsing keeps invalid data; validation happens at solver entry.
    doc["prior"] = {0.5, 0.6};
    CHECK(Validate(TaskFromJson(doc)).size() == 1);
    CHECK_THROWS_AS(RequireValid(TaskFromJson(doc)), ValidationError);
    doc = TaskToJson(GradingTask());
    doc.erase("reward_receiver");
    CHECK_THROWS_AS(TaskFromJson(doc), ParseError);
    CHECK_THROWS_AS(MatrixFromJson(nlohmann::json::parse("[[1, 2], [3]]")), ShapeError);
  }

  TEST_CASE("scenario tags") {
    for (const auto& tag : PersuasionScenarios()) CHECK(Validate(ScenarioTask(tag)).empty());
    for (const auto& tag : BargainingScenarios()) {
      CHECK(ScenarioFrontier(tag, "bounded").name == "bounded");
    }
    CHECK_THROWS_AS(ScenarioTask("poker"), ConfigurationError);
  }

  TEST_CASE("rng") {
    CHECK(DeriveSeed(1, 2, 3) == DeriveSeed(1, 2, 3));
    CHECK(DeriveSeed(1, 2, 3) != DeriveSeed(1, 3, 2));
    Rng a(5), b(5);
    for (int k = 0; k < 10; ++k) CHECK(a.NextU64() == b.NextU64());
    Rng c(9);
    const std::vector<double> p = {0.0, 1.0, 0.0};
    for (int k = 0; k < 10; ++k) CHECK(c.Categorical(p) == 1);
    const double u = c.Uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}  // namespace
}  // namespace infobargain
