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

#include "infobargain/scenarios.h"

namespace infobargain {
namespace {

PersuasionTask BinaryTask(std::vector<std::string> states, std::vector<std::string> actions,
                          std::string label) {
  PersuasionTask task;
  task.states = std::move(states);
  task.prior = {2.0 / 3.0, 1.0 / 3.0};
  task.actions = std::move(actions);
  task.reward_sender = Matrix::FromRows({{0.0, 1.0}, {0.0, 1.0}});
  task.reward_receiver = Matrix::FromRows({{0.0, -1.0}, {0.0, 1.0}});
  task.label = std::move(label);
  return task;
}

}  // namespace

PersuasionTask GradingTask() {
  return BinaryTask({"weak", "strong"}, {"pass", "hire"}, "grading_students");
}

PersuasionTask ScenarioTask(std::string_view scenario) {
  if (scenario == "grading_students") return GradingTask();
  if (scenario == "selling_products") {
    return BinaryTask({"poor", "good"}, {"skip", "buy"}, "selling_products");
  }
  if (scenario == "math_baseline") return BinaryTask({"0", "1"}, {"0", "1"}, "math_baseline");
  throw ConfigurationError("unknown persuasion scenario '" + std::string(scenario) + "'");
}

std::vector<std::string> PersuasionScenarios() {
  return {"grading_students", "selling_products", "math_baseline"};
}

BargainingFrontier ScenarioFrontier(std::string_view scenario, std::string_view value_setting) {
  bool known = false;
  for (const auto& s : BargainingScenarios()) known |= s == scenario;
  if (!known) {
    throw ConfigurationError("unknown bargaining scenario '" + std::string(scenario) + "'");
  }
  if (value_setting == "unbounded") return UnboundedFrontier(1.0);
  if (value_setting == "bounded") return BoundedFrontier();
  throw ConfigurationError("unknown value setting '" + std::string(value_setting) + "'");
}

std::vector<std::string> BargainingScenarios() {
  return {"math_baseline", "splitting_coins", "making_deals"};
}

}  // namespace infobargain
