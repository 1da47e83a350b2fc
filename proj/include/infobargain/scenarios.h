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

#ifndef INFOBARGAIN_SCENARIOS_H_
#define INFOBARGAIN_SCENARIOS_H_

#include <string>
#include <string_view>
#include <vector>

#include "infobargain/core.h"
#include "infobargain/engine.h"

namespace infobargain {

// Binary recommendation task: prior (2/3, 1/3) over (weak, strong); the
// sender is paid 1 for action 1; the receiver gets +1 for action 1 in the
// strong state and -1 in the weak state.
PersuasionTask GradingTask();

// Persuasion scenario tags share the binary payoffs and differ in labels:
// "math_baseline", "grading_students", "selling_products".
PersuasionTask ScenarioTask(std::string_view scenario);
std::vector<std::string> PersuasionScenarios();

// Bargaining tags: "math_baseline", "splitting_coins", "making_deals". The
// value setting picks the frontier ("unbounded" or "bounded").
BargainingFrontier ScenarioFrontier(std::string_view scenario, std::string_view value_setting);
std::vector<std::string> BargainingScenarios();

}  // namespace infobargain

#endif  // INFOBARGAIN_SCENARIOS_H_
