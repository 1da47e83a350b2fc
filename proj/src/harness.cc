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

#include "infobargain/harness.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>

#include "infobargain/persuasion.h"
#include "infobargain/reduction.h"
#include "infobargain/scenarios.h"
#include "infobargain/scripted_agents.h"

namespace infobargain {

namespace internal {
extern const char* const kBundledGridJson;
}  // namespace internal

namespace {

template <typename Enum>
struct NameTable {
  Enum value;
  const char* name;
};

constexpr NameTable<TaskType> kTaskTypes[] = {{TaskType::kBargaining, "bargaining"},
                                              {TaskType::kPersuasion, "persuasion"}};
constexpr NameTable<Duration> kDurations[] = {{Duration::kOneShot, "one_shot"},
                                              {Duration::kLongTerm, "long_term"}};
constexpr NameTable<ProposerAssignment> kAssignments[] = {
    {ProposerAssignment::kRandom, "random"}, {ProposerAssignment::kSystematic, "systematic"}};
constexpr NameTable<FutureEncounter> kFutures[] = {
    {FutureEncounter::kNone, "none"},
    {FutureEncounter::kReEncounterFixedRoles, "re_encounter_fixed_roles"}};
constexpr NameTable<RoleDynamics> kDynamics[] = {{RoleDynamics::kFixed, "fixed"},
                                                 {RoleDynamics::kAlternating, "alternating"}};

template <typename Enum, std::size_t N>
const char* NameOf(const NameTable<Enum> (&table)[N], Enum value) {
  for (const auto& e : table) {
    if (e.value == value) return e.name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum ValueOf(const NameTable<Enum> (&table)[N], const std::string& name, const char* field) {
  for (const auto& e : table) {
    if (name == e.name) return e.value;
  }
  throw ParseError(std::string("unknown ") + field + " '" + name + "'");
}

template <typename T>
T Field(const nlohmann::json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config field '") + key + "': " + e.what());
  }
}

bool Contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

void ExperimentConfig::Validate() const {
  const std::string where = "config " + std::to_string(id) + ": ";
  if (runs < 1) throw ValidationError(where + "runs must be at least 1");
  stopping.Validate();
  if (value_setting != "bounded" && value_setting != "unbounded") {
    throw ValidationError(where + "unknown value setting '" + value_setting + "'");
  }
  const auto scenarios =
      task_type == TaskType::kBargaining ? BargainingScenarios() : PersuasionScenarios();
  if (!Contains(scenarios, scenario)) {
    throw ValidationError(where + "scenario '" + scenario + "' does not fit the task type");
  }
  if (duration == Duration::kOneShot) {
    if (role_dynamics) throw ValidationError(where + "role dynamics set on a one-shot config");
    if (!future_encounter) throw ValidationError(where + "one-shot config needs future_encounter");
  } else {
    if (future_encounter) {
      throw ValidationError(where + "future_encounter set on a long-term config");
    }
    if (!role_dynamics) throw ValidationError(where + "long-term config needs role_dynamics");
  }
  if (patience) {
    for (double p : {patience->first, patience->second}) {
      if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(where + "patience outside [0, 1]");
    }
  }
  if (first_proposer_agent) {
    if (*first_proposer_agent != 0 && *first_proposer_agent != 1) {
      throw ValidationError(where + "first_proposer_agent must be 0 or 1");
    }
    if (proposer_assignment != ProposerAssignment::kSystematic) {
      throw ValidationError(where + "first_proposer_agent needs systematic assignment");
    }
  }
}

nlohmann::json ConfigToJson(const ExperimentConfig& c) {
  nlohmann::json doc = {
      {"id", c.id},
      {"task_type", NameOf(kTaskTypes, c.task_type)},
      {"duration", NameOf(kDurations, c.duration)},
      {"proposer_assignment", NameOf(kAssignments, c.proposer_assignment)},
      {"value_setting", c.value_setting},
      {"scenario", c.scenario},
      {"runs", c.runs},
      {"stopping",
       {{"stop_probability", c.stopping.stop_probability},
        {"max_timestep", c.stopping.max_timestep}}},
      {"realization_steps", c.realization_steps},
      {"seed_base", c.seed_base},
  };
  if (c.future_encounter) doc["future_encounter"] = NameOf(kFutures, *c.future_encounter);
  if (c.role_dynamics) doc["role_dynamics"] = NameOf(kDynamics, *c.role_dynamics);
  if (c.patience) doc["patience"] = {c.patience->first, c.patience->second};
  if (c.first_proposer_agent) doc["first_proposer_agent"] = *c.first_proposer_agent;
  return doc;
}

ExperimentConfig ConfigFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig c;
  c.id = Field<int>(doc, "id");
  c.task_type = ValueOf(kTaskTypes, Field<std::string>(doc, "task_type"), "task_type");
  c.duration = ValueOf(kDurations, Field<std::string>(doc, "duration"), "duration");
  c.proposer_assignment = ValueOf(kAssignments, Field<std::string>(doc, "proposer_assignment"),
                                  "proposer_assignment");
  c.value_setting = Field<std::string>(doc, "value_setting");
  c.scenario = Field<std::string>(doc, "scenario");
  if (doc.contains("future_encounter")) {
    c.future_encounter =
        ValueOf(kFutures, Field<std::string>(doc, "future_encounter"), "future_encounter");
  }
  if (doc.contains("role_dynamics")) {
    c.role_dynamics = ValueOf(kDynamics, Field<std::string>(doc, "role_dynamics"), "role_dynamics");
  }
  if (doc.contains("runs")) c.runs = Field<int>(doc, "runs");
  if (doc.contains("stopping")) {
    const auto& s = doc.at("stopping");
    c.stopping.stop_probability = Field<double>(s, "stop_probability");
    c.stopping.max_timestep = Field<int>(s, "max_timestep");
  }
  if (doc.contains("patience")) {
    const auto p = Field<std::vector<double>>(doc, "patience");
    if (p.size() != 2) throw ParseError("patience needs two entries");
    c.patience = std::pair{p[0], p[1]};
  }
  if (doc.contains("realization_steps")) {
    c.realization_steps = Field<std::size_t>(doc, "realization_steps");
  }
  if (doc.contains("seed_base")) c.seed_base = Field<std::uint64_t>(doc, "seed_base");
  if (doc.contains("first_proposer_agent")) {
    c.first_proposer_agent = Field<int>(doc, "first_proposer_agent");
  }
  c.Validate();
  return c;
}

std::string ConfigLabel(const ExperimentConfig& c) {
  std::string s = c.task_type == TaskType::kBargaining ? "Bargaining" : "Persuasion";
  s += "-" + std::to_string(c.id) + " " + c.scenario + " " + NameOf(kDurations, c.duration) +
       " " + c.value_setting + " " + NameOf(kAssignments, c.proposer_assignment);
  if (c.role_dynamics) s += std::string(" ") + NameOf(kDynamics, *c.role_dynamics);
  if (c.future_encounter) s += std::string(" ") + NameOf(kFutures, *c.future_encounter);
  if (c.first_proposer_agent) s += " first=agent" + std::to_string(*c.first_proposer_agent);
  return s;
}

std::vector<ExperimentConfig> BuildGrid(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("blocks")) {
    throw ValidationError("grid document needs a \"blocks\" array");
  }
  const nlohmann::json defaults = doc.value("defaults", nlohmann::json::object());
  std::vector<nlohmann::json> cells;
  for (const auto& block : doc.at("blocks")) {
    int next_id = block.at("first_id").get<int>();
    nlohmann::json base = defaults;
    base.merge_patch(block.value("fixed", nlohmann::json::object()));
    const auto axes = block.value("axes", nlohmann::json::array());
    std::size_t total = 1;
    for (const auto& axis : axes) total *= axis.at("values").size();
    for (std::size_t k = 0; k < total; ++k) {
      nlohmann::json cell = base;
      // Mixed radix with the last axis varying fastest.
      std::size_t rest = k;
      for (std::size_t a = axes.size(); a-- > 0;) {
        const auto& values = axes[a].at("values");
        cell[axes[a].at("name").get<std::string>()] = values.at(rest % values.size());
        rest /= values.size();
      }
      cell["id"] = next_id++;
      cells.push_back(std::move(cell));
    }
  }
  for (const auto& o : doc.value("overrides", nlohmann::json::array())) {
    const int id = o.at("id").get<int>();
    auto it = std::find_if(cells.begin(), cells.end(),
                           [id](const nlohmann::json& c) { return c.at("id") == id; });
    if (it == cells.end()) throw ValidationError("override for unknown id " + std::to_string(id));
    it->merge_patch(o);
  }
  std::vector<ExperimentConfig> grid;
  std::set<int> seen;
  for (const auto& cell : cells) {
    ExperimentConfig c;
    try {
      c = ConfigFromJson(cell);
    } catch (const ParseError& e) {
      throw ValidationError(e.what());
    }
    if (!seen.insert(c.id).second) {
      throw ValidationError("duplicate config id " + std::to_string(c.id));
    }
    grid.push_back(std::move(c));
  }
  std::sort(grid.begin(), grid.end(),
            [](const ExperimentConfig& a, const ExperimentConfig& b) { return a.id < b.id; });
  return grid;
}

const nlohmann::json& BundledGridDocument() {
  static const nlohmann::json doc = nlohmann::json::parse(internal::kBundledGridJson);
  return doc;
}

std::vector<ExperimentConfig> BundledGrid() { return BuildGrid(BundledGridDocument()); }

const ExperimentConfig& FindConfig(const std::vector<ExperimentConfig>& grid, int id) {
  for (const auto& c : grid) {
    if (c.id == id) return c;
  }
  throw ConfigurationError("no config with id " + std::to_string(id));
}

AgentFactory ScriptedFactory() {
  return [](const ExperimentConfig& config, int agent_id, int) {
    const auto [p0, p1] = config.Patience();
    ScriptedAgentSpec spec;
    spec.strategy = Strategy::kSpe;
    spec.patience = agent_id == 0 ? p0 : p1;
    spec.opponent_patience = agent_id == 0 ? p1 : p0;
    if (config.task_type == TaskType::kBargaining) {
      spec.role = AgentRole::kBargainer;
    } else {
      spec.role = agent_id == 0 ? AgentRole::kSender : AgentRole::kReceiver;
    }
    std::shared_ptr<ScriptedAgent> agent = MakeScriptedAgent(spec);
    return AgentHandle{agent, agent};
  };
}

AgentFactory LlmFactory(LlmAgentConfig agent_config, BackendFactory backends) {
  return [agent_config, backends](const ExperimentConfig& config, int agent_id, int run) {
    LlmAgentConfig cfg = agent_config;
    cfg.coin_flip = config.proposer_assignment == ProposerAssignment::kRandom;
    auto agent = std::make_shared<LlmAgent>(cfg, backends(config, agent_id, run));
    return AgentHandle{agent, agent};
  };
}

std::uint64_t RunSeed(const ExperimentConfig& config, int run) {
  return DeriveSeed(config.seed_base, static_cast<std::uint64_t>(config.id),
                    static_cast<std::uint64_t>(run));
}

GameTrace RunOnce(const ExperimentConfig& config, const AgentFactory& factory, int run) {
  config.Validate();
  const std::uint64_t seed = RunSeed(config, run);
  AgentHandle a0 = factory(config, 0, run);
  AgentHandle a1 = factory(config, 1, run);
  FirstProposer first = FirstProposer::kCoinFlip;
  if (config.proposer_assignment == ProposerAssignment::kSystematic) {
    first = config.first_proposer_agent.value_or(0) == 1 ? FirstProposer::kAgent1
                                                         : FirstProposer::kAgent0;
  }
  const bool single_round = config.duration == Duration::kOneShot &&
                            config.future_encounter == FutureEncounter::kNone;
  const RoleDynamics dynamics = config.role_dynamics.value_or(RoleDynamics::kFixed);
  if (config.task_type == TaskType::kBargaining) {
    if (!a0.bargaining || !a1.bargaining) {
      throw ConfigurationError("agent factory returned no bargaining agent");
    }
    const BargainingFrontier frontier = ScenarioFrontier(config.scenario, config.value_setting);
    BargainingOptions o;
    o.one_shot = single_round;
    o.dynamics = dynamics;
    o.first_proposer = first;
    o.stopping = config.stopping;
    o.scenario = config.scenario;
    o.value_setting = config.value_setting;
    return RunBargaining(frontier, *a0.bargaining, *a1.bargaining, o, seed);
  }
  if (!a0.persuasion || !a1.persuasion) {
    throw ConfigurationError("agent factory returned no persuasion agent");
  }
  const PersuasionTask task = ScenarioTask(config.scenario);
  LongTermOptions o;
  o.dynamics = dynamics;
  o.first_proposer = first;
  o.stopping = single_round ? StoppingRule{1.0, 1} : config.stopping;
  o.realization_steps = config.realization_steps;
  o.scenario = config.scenario;
  o.value_setting = config.value_setting;
  return RunLongTerm(task, *a0.persuasion, *a1.persuasion, o, seed);
}

RunRecord RecordFromTrace(const GameTrace& trace, int run) {
  RunRecord r;
  r.run = run;
  r.seed = trace.seed;
  r.consensus = trace.consensus_reached;
  r.deal_timestep = trace.deal_timestep;
  r.final_proposer = trace.final_proposer;
  r.proposer_payoff = trace.FinalProposerPayoff().value_or(0.0);
  r.aborted = trace.aborted;
  r.failure = trace.failure;
  return r;
}

MeanSd ComputeMeanSd(const std::vector<double>& values) {
  MeanSd out;
  out.n = values.size();
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

RunSummary Summarize(int config_id, std::vector<RunRecord> records) {
  RunSummary s;
  s.config_id = config_id;
  std::vector<double> deals, payoffs;
  int consensus = 0;
  for (const auto& r : records) {
    if (r.aborted) {
      ++s.failures;
      s.warnings.push_back("run " + std::to_string(r.run) + " excluded: " + r.failure);
      continue;
    }
    payoffs.push_back(r.proposer_payoff);
    if (r.consensus) {
      ++consensus;
      if (r.deal_timestep) deals.push_back(*r.deal_timestep);
    }
  }
  if (!payoffs.empty()) {
    s.consensus_rate = static_cast<double>(consensus) / static_cast<double>(payoffs.size());
  } else {
    s.warnings.push_back("every run failed");
  }
  s.deal_timestep = ComputeMeanSd(deals);
  s.final_proposer_payoff = ComputeMeanSd(payoffs);
  s.records = std::move(records);
  return s;
}

namespace {

void MaybeWriteTrace(const ExperimentOptions& options, const ExperimentConfig& config, int run,
                     const GameTrace& trace) {
  if (!options.trace_dir) return;
  const std::string path = *options.trace_dir + "/config" + std::to_string(config.id) + "_run" +
                           std::to_string(run) + ".jsonl";
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write trace file " + path);
  WriteTrace(out, trace);
}

}  // namespace

RunSummary RunExperiment(const ExperimentConfig& config, const AgentFactory& factory,
                         const ExperimentOptions& options) {
  config.Validate();
  std::vector<RunRecord> records(static_cast<std::size_t>(config.runs));
  std::vector<std::exception_ptr> errors(records.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int run = 0; run < config.runs; ++run) {
    try {
      const GameTrace trace = RunOnce(config, factory, run);
      MaybeWriteTrace(options, config, run, trace);
      records[static_cast<std::size_t>(run)] = RecordFromTrace(trace, run);
    } catch (...) {
      errors[static_cast<std::size_t>(run)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return Summarize(config.id, std::move(records));
}

RunSummary RunExperimentSerial(const ExperimentConfig& config, const AgentFactory& factory) {
  config.Validate();
  std::vector<RunRecord> records;
  for (int run = 0; run < config.runs; ++run) {
    records.push_back(RecordFromTrace(RunOnce(config, factory, run), run));
  }
  return Summarize(config.id, std::move(records));
}

namespace {

nlohmann::json MeanSdJson(const MeanSd& m) {
  return {{"mean", m.mean}, {"sd", m.sd}, {"n", m.n}};
}

}  // namespace

nlohmann::json SummaryToJson(const RunSummary& s) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : s.records) {
    nlohmann::json j = {{"run", r.run},
                        {"seed", r.seed},
                        {"consensus", r.consensus},
                        {"proposer_payoff", r.proposer_payoff},
                        {"aborted", r.aborted}};
    if (r.deal_timestep) j["deal_timestep"] = *r.deal_timestep;
    if (r.final_proposer) j["final_proposer"] = *r.final_proposer;
    if (!r.failure.empty()) j["failure"] = r.failure;
    records.push_back(std::move(j));
  }
  return {{"config_id", s.config_id},
          {"consensus_rate", s.consensus_rate},
          {"deal_timestep", MeanSdJson(s.deal_timestep)},
          {"final_proposer_payoff", MeanSdJson(s.final_proposer_payoff)},
          {"failures", s.failures},
          {"warnings", s.warnings},
          {"records", records}};
}

RunSummary SummaryFromJson(const nlohmann::json& doc) {
  try {
    std::vector<RunRecord> records;
    for (const auto& j : doc.at("records")) {
      RunRecord r;
      r.run = j.at("run").get<int>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.consensus = j.at("consensus").get<bool>();
      r.proposer_payoff = j.at("proposer_payoff").get<double>();
      r.aborted = j.at("aborted").get<bool>();
      if (j.contains("deal_timestep")) r.deal_timestep = j.at("deal_timestep").get<int>();
      if (j.contains("final_proposer")) r.final_proposer = j.at("final_proposer").get<int>();
      r.failure = j.value("failure", "");
      records.push_back(std::move(r));
    }
    // Statistics are recomputed, never trusted from the file.
    return Summarize(doc.at("config_id").get<int>(), std::move(records));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed summary: ") + e.what());
  }
}

void WriteSummariesCsv(std::ostream& out, const std::vector<RunSummary>& summaries) {
  out << "config_id,runs,failures,consensus_rate,deal_timestep_mean,deal_timestep_sd,"
         "final_proposer_payoff_mean,final_proposer_payoff_sd\n";
  out.precision(17);
  for (const auto& s : summaries) {
    out << s.config_id << "," << s.records.size() << "," << s.failures << ","
        << s.consensus_rate << "," << s.deal_timestep.mean << "," << s.deal_timestep.sd << ","
        << s.final_proposer_payoff.mean << "," << s.final_proposer_payoff.sd << "\n";
  }
}

namespace {

// Expected proposer payoff given who proposes first.
double ByAssignment(const ExperimentConfig& c, double agent0_first, double agent1_first) {
  if (c.proposer_assignment == ProposerAssignment::kRandom) {
    return 0.5 * (agent0_first + agent1_first);
  }
  return c.first_proposer_agent.value_or(0) == 1 ? agent1_first : agent0_first;
}

bool Alternating(const ExperimentConfig& c) {
  return c.role_dynamics == RoleDynamics::kAlternating;
}

}  // namespace

double GroundTruth(const ExperimentConfig& c) {
  c.Validate();
  const auto [p0, p1] = c.Patience();
  if (c.task_type == TaskType::kBargaining) {
    const BargainingFrontier f = ScenarioFrontier(c.scenario, c.value_setting);
    if (!Alternating(c)) return f.shares(f.hi).proposer;
    const auto [va, vb] = BargainingAlternatingValues(f, p0, p1);
    return ByAssignment(c, va, vb);
  }
  const PersuasionTask task = ScenarioTask(c.scenario);
  // Fixed roles leave each responder only the disagreement payoff as
  // outside option, which is the zero-patience case.
  const AlternatingValues v = Alternating(c) ? PersuasionAlternatingValues(task, p0, p1)
                                             : PersuasionAlternatingValues(task, 0.0, 0.0);
  return ByAssignment(c, v.sender_proposes.sender, v.receiver_proposes.receiver);
}

double Hypothesis(const ExperimentConfig& c) {
  if (!Alternating(c)) return GroundTruth(c);
  if (c.task_type == TaskType::kBargaining) {
    const BargainingFrontier f = ScenarioFrontier(c.scenario, c.value_setting);
    BargainingGame game;
    game.feasibility = ParametricFrontier{[&f](double x) {
                                            const Split s = f.shares(x);
                                            return PayoffPair{s.proposer, s.responder};
                                          },
                                          f.lo, f.hi};
    return NashSolution(game).payoffs.sender;
  }
  const PayoffPair nash = SolveViaNashProduct(ScenarioTask(c.scenario)).agreement.payoffs;
  return ByAssignment(c, nash.sender, nash.receiver);
}

double Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw ShapeError("pearson: lengths " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()) + " differ");
  }
  if (x.size() < 2) throw ShapeError("pearson needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - mx, dy = y[k] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedCorrelationError("pearson: a vector has zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double PearsonPValue(double r, std::size_t n, bool two_sided) {
  if (n < 3) throw ShapeError("p-value needs at least three points");
  if (std::abs(r) >= 1.0) return two_sided ? 0.0 : (r > 0 ? 0.0 : 1.0);
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / (1.0 - r * r));
  boost::math::students_t dist(df);
  if (two_sided) return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return boost::math::cdf(boost::math::complement(dist, t));
}

CorrelationResult CorrelationReport(const std::vector<RunSummary>& summaries,
                                    const std::vector<double>& reference, std::string label) {
  if (summaries.size() != reference.size()) {
    throw ShapeError("reference has " + std::to_string(reference.size()) + " entries for " +
                     std::to_string(summaries.size()) + " summaries");
  }
  std::vector<double> x;
  for (const auto& s : summaries) x.push_back(s.final_proposer_payoff.mean);
  CorrelationResult out;
  out.label = std::move(label);
  out.n = x.size();
  out.r = Pearson(x, reference);
  if (out.n >= 3) {
    out.p_two_sided = PearsonPValue(out.r, out.n, true);
    out.p_one_sided = PearsonPValue(out.r, out.n, false);
  }
  return out;
}

nlohmann::json CorrelationToJson(const CorrelationResult& r) {
  return {{"label", r.label},
          {"n", r.n},
          {"r", r.r},
          {"p_two_sided", r.p_two_sided},
          {"p_one_sided", r.p_one_sided}};
}

}  // namespace infobargain
