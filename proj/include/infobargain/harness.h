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

#ifndef INFOBARGAIN_HARNESS_H_
#define INFOBARGAIN_HARNESS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "infobargain/engine.h"
#include "infobargain/llm.h"
#include "json.hpp"

namespace infobargain {

enum class TaskType { kBargaining, kPersuasion };
enum class Duration { kOneShot, kLongTerm };
enum class ProposerAssignment { kRandom, kSystematic };
enum class FutureEncounter { kNone, kReEncounterFixedRoles };

struct ExperimentConfig {
  int id = 0;
  TaskType task_type = TaskType::kPersuasion;
  Duration duration = Duration::kLongTerm;
  ProposerAssignment proposer_assignment = ProposerAssignment::kSystematic;
  std::string value_setting = "bounded";
  std::optional<FutureEncounter> future_encounter;  // one-shot only
  std::optional<RoleDynamics> role_dynamics;        // long-term only
  std::string scenario = "math_baseline";
  int runs = 12;
  StoppingRule stopping;
  std::optional<std::pair<double, double>> patience;  // (agent 0, agent 1)
  std::size_t realization_steps = 10000;
  std::uint64_t seed_base = 20260101;
  // Systematic assignment proposes with this agent first (default 0).
  std::optional<int> first_proposer_agent;

  // Throws ValidationError on an invalid combination.
  void Validate() const;
  std::pair<double, double> Patience() const { return patience.value_or(std::pair{0.99, 0.99}); }
};

nlohmann::json ConfigToJson(const ExperimentConfig& config);
// Throws ParseError on malformed fields, then validates.
ExperimentConfig ConfigFromJson(const nlohmann::json& doc);
// Short human-readable description of the cell.
std::string ConfigLabel(const ExperimentConfig& config);

// Grid document: {"defaults": {...}, "blocks": [{"first_id", "fixed": {...},
// "axes": [{"name", "values"}, ...]}], "overrides": [{"id", ...}]}. Axes
// expand in listed order with the last axis varying fastest; ids run
// consecutively from first_id. Throws ValidationError on bad combinations
// or duplicate ids.
std::vector<ExperimentConfig> BuildGrid(const nlohmann::json& doc);
// The 87-cell grid shipped with the library (same as data/grid).
const nlohmann::json& BundledGridDocument();
std::vector<ExperimentConfig> BundledGrid();
// Throws ConfigurationError when the id is not in the grid.
const ExperimentConfig& FindConfig(const std::vector<ExperimentConfig>& grid, int id);

// Both interfaces of one agent; either may be null when unused.
struct AgentHandle {
  std::shared_ptr<PersuasionAgent> persuasion;
  std::shared_ptr<BargainingAgent> bargaining;
};
using AgentFactory =
    std::function<AgentHandle(const ExperimentConfig& config, int agent_id, int run)>;

// spe agents with the config's patience.
AgentFactory ScriptedFactory();
// Backends are built per (config, agent, run).
using BackendFactory = std::function<std::shared_ptr<ChatBackend>(
    const ExperimentConfig& config, int agent_id, int run)>;
AgentFactory LlmFactory(LlmAgentConfig agent_config, BackendFactory backends);

std::uint64_t RunSeed(const ExperimentConfig& config, int run);

// One seeded run of a config.
GameTrace RunOnce(const ExperimentConfig& config, const AgentFactory& factory, int run);

struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  bool consensus = false;
  std::optional<int> deal_timestep;
  std::optional<int> final_proposer;
  double proposer_payoff = 0.0;
  bool aborted = false;
  std::string failure;
};

RunRecord RecordFromTrace(const GameTrace& trace, int run);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample sd; 0 for fewer than two values
  std::size_t n = 0;
};
MeanSd ComputeMeanSd(const std::vector<double>& values);

struct RunSummary {
  int config_id = 0;
  double consensus_rate = 0.0;    // over non-aborted runs
  MeanSd deal_timestep;           // over runs with consensus
  MeanSd final_proposer_payoff;   // over non-aborted runs
  int failures = 0;
  std::vector<std::string> warnings;
  std::vector<RunRecord> records;
};

// Statistics from per-run records; aborted runs are excluded from the
// metrics and reported as warnings.
RunSummary Summarize(int config_id, std::vector<RunRecord> records);

struct ExperimentOptions {
  bool parallel = true;  // OpenMP over runs
  // When set, each run's trace is written to <dir>/config<id>_run<k>.jsonl.
  std::optional<std::string> trace_dir;
};

RunSummary RunExperiment(const ExperimentConfig& config, const AgentFactory& factory,
                         const ExperimentOptions& options = {});
// Single-threaded reference.
RunSummary RunExperimentSerial(const ExperimentConfig& config, const AgentFactory& factory);

nlohmann::json SummaryToJson(const RunSummary& summary);
RunSummary SummaryFromJson(const nlohmann::json& doc);
void WriteSummariesCsv(std::ostream& out, const std::vector<RunSummary>& summaries);

// Proposer payoff predicted by the solvers for the config's cell. Random
// assignment averages the two first-proposer cases.
double GroundTruth(const ExperimentConfig& config);
// Fairness hypothesis: alternating roles end at the Nash-product split;
// other cells follow the ground truth.
double Hypothesis(const ExperimentConfig& config);

// Sample Pearson correlation. Throws ShapeError on length mismatch or
// fewer than two points and UndefinedCorrelationError on zero variance.
double Pearson(const std::vector<double>& x, const std::vector<double>& y);

// Student-t p-value of r with n - 2 degrees of freedom.
double PearsonPValue(double r, std::size_t n, bool two_sided = true);

struct CorrelationResult {
  std::string label;
  std::size_t n = 0;
  double r = 0.0;
  double p_two_sided = 1.0;
  double p_one_sided = 1.0;  // alternative r > 0
};

// Correlates the summaries' mean proposer payoffs with the reference.
CorrelationResult CorrelationReport(const std::vector<RunSummary>& summaries,
                                    const std::vector<double>& reference, std::string label);
nlohmann::json CorrelationToJson(const CorrelationResult& result);

}  // namespace infobargain

#endif  // INFOBARGAIN_HARNESS_H_
