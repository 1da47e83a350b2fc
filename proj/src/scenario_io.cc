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

#include "infobargain/scenario_io.h"

#include <fstream>
#include <sstream>

namespace infobargain {

nlohmann::json MatrixToJson(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return rows;
}

Matrix MatrixFromJson(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<double> values;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("matrix entry must be a number");
      values.push_back(v.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return Matrix::FromRows(rows);
}

nlohmann::json TaskToJson(const PersuasionTask& task) {
  nlohmann::json doc;
  doc["label"] = task.label;
  doc["states"] = task.states;
  doc["prior"] = task.prior;
  doc["actions"] = task.actions;
  doc["reward_sender"] = MatrixToJson(task.reward_sender);
  doc["reward_receiver"] = MatrixToJson(task.reward_receiver);
  return doc;
}

PersuasionTask TaskFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  for (const char* key : {"states", "prior", "actions", "reward_sender",
                          "reward_receiver"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("scenario missing field '") + key + "'");
    }
  }
  PersuasionTask task;
  try {
    task.states = doc.at("states").get<std::vector<std::string>>();
    task.prior = doc.at("prior").get<std::vector<double>>();
    task.actions = doc.at("actions").get<std::vector<std::string>>();
    task.label = doc.value("label", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario field has wrong type: ") + e.what());
  }
  task.reward_sender = MatrixFromJson(doc.at("reward_sender"));
  task.reward_receiver = MatrixFromJson(doc.at("reward_receiver"));
  return task;
}

PersuasionTask LoadTask(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("scenario file " + path + ": " + e.what());
  }
  return TaskFromJson(doc);
}

void SaveTask(const PersuasionTask& task, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write scenario file " + path);
  out << TaskToJson(task).dump(2) << "\n";
}

}  // namespace infobargain
