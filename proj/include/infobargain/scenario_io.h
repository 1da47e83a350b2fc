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

#ifndef INFOBARGAIN_SCENARIO_IO_H_
#define INFOBARGAIN_SCENARIO_IO_H_

#include <string>

#include "infobargain/core.h"
#include "json.hpp"

namespace infobargain {

// Scenario document: {"states", "prior", "actions", "reward_sender",
// "reward_receiver", "label"}; reward tables are row-major, rows = states.
// Doubles round-trip bit-exactly.
nlohmann::json TaskToJson(const PersuasionTask& task);
// Throws ParseError on missing or mistyped fields. Does not validate
// probability invariants; call Validate() for that.
PersuasionTask TaskFromJson(const nlohmann::json& doc);

PersuasionTask LoadTask(const std::string& path);
void SaveTask(const PersuasionTask& task, const std::string& path);

nlohmann::json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const nlohmann::json& doc);

}  // namespace infobargain

#endif  // INFOBARGAIN_SCENARIO_IO_H_
