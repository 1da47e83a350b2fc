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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "infobargain/bargaining.h"
#include "infobargain/engine.h"
#include "infobargain/harness.h"
#include "infobargain/llm.h"
#include "infobargain/persuasion.h"
#include "infobargain/reduction.h"
#include "infobargain/scenario_io.h"
#include "infobargain/scenarios.h"
#include "infobargain/scripted_agents.h"
#include "infobargain/trace.h"

namespace infobargain::cli {
namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
  std::string backend = "scripted";
};

// Where results go: --out file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigurationError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

PersuasionTask ResolveTask(const std::string& arg) {
  if (std::filesystem::exists(arg)) return LoadTask(arg);
  return ScenarioTask(arg);
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<std::string> ReadReplies(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.is_array()) return doc.get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception&) {
  }
  return {text};
}

std::string Pair(double a, double b) {
  std::ostringstream os;
  os << a << " / " << b;
  return os.str();
}

// solve ---------------------------------------------------------------

struct SolveArgs {
  std::string scenario;
};

void RunSolve(const Globals& g, const SolveArgs& a) {
  const PersuasionTask task = ResolveTask(a.scenario);
  const OptimalScheme opt = SolveOptimalScheme(task);
  Sink sink(g.out);
  std::ostream& os = sink.os();
  if (g.format == "json") {
    nlohmann::json doc = {{"task", task.label},
                          {"sender_value", opt.payoffs.sender},
                          {"receiver_value", opt.payoffs.receiver},
                          {"scheme", MatrixToJson(opt.scheme.matrix())},
                          {"obedient", opt.ic.obedient},
                          {"lp_iterations", opt.lp_iterations}};
    if (task.IsBinary()) {
      const auto [x1, x2] = opt.scheme.BinaryParams();
      doc["x"] = {x1, x2};
    }
    os << doc.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "sender_value,receiver_value\n" << opt.payoffs.sender << "," << opt.payoffs.receiver
       << "\n";
  } else {
    os << "task " << task.label << "\n";
    os << "sender value " << opt.payoffs.sender << "\n";
    os << "receiver value " << opt.payoffs.receiver << "\n";
    if (task.IsBinary()) {
      const auto [x1, x2] = opt.scheme.BinaryParams();
      os << "scheme x1=" << x1 << " x2=" << x2 << "\n";
    } else {
      os << "scheme " << MatrixToJson(opt.scheme.matrix()).dump() << "\n";
    }
    os << "obedient " << (opt.ic.obedient ? "yes" : "no") << "\n";
  }
}

// bargain -------------------------------------------------------------

struct BargainArgs {
  bool rubinstein = false;
  bool ultimatum = false;
  std::vector<double> delta;
  double pie = 1.0;
  bool reject_at_indifference = false;
  double granularity = 0.0;
  std::string game;
  std::string frontier;
};

BargainingGame GameFromJson(const nlohmann::json& doc) {
  BargainingGame game;
  if (doc.contains("frontier")) {
    const BargainingFrontier f = ScenarioFrontier("math_baseline", doc.at("frontier").get<std::string>());
    game.feasibility = ParametricFrontier{[f](double x) {
                                            const Split s = f.shares(x);
                                            return PayoffPair{s.proposer, s.responder};
                                          },
                                          f.lo, f.hi};
  } else {
    std::vector<PayoffPair> pts;
    for (const auto& p : doc.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    game.feasibility = std::move(pts);
  }
  if (doc.contains("disagreement")) {
    game.disagreement = {doc.at("disagreement").at(0).get<double>(),
                         doc.at("disagreement").at(1).get<double>()};
  }
  return game;
}

void RunBargain(const Globals& g, const BargainArgs& a) {
  Sink sink(g.out);
  std::ostream& os = sink.os();
  if (a.rubinstein) {
    if (a.delta.size() != 2) throw ConfigurationError("--delta needs two values");
    const Split s = RubinsteinSplit({a.pie, a.delta[0], a.delta[1]});
    if (g.format == "json") {
      os << nlohmann::json{{"proposer", s.proposer}, {"responder", s.responder}}.dump(2) << "\n";
    } else {
      os << Pair(s.proposer, s.responder) << "\n";
    }
    return;
  }
  if (a.ultimatum) {
    const Agreement ag = UltimatumSpe(a.pie, !a.reject_at_indifference, a.granularity);
    if (g.format == "json") {
      os << nlohmann::json{{"proposer", ag.payoffs.sender}, {"responder", ag.payoffs.receiver}}
                .dump(2)
         << "\n";
    } else {
      os << Pair(ag.payoffs.sender, ag.payoffs.receiver) << "\n";
    }
    return;
  }
  BargainingGame game;
  if (!a.game.empty()) {
    game = GameFromJson(ReadJsonFile(a.game));
  } else if (!a.frontier.empty()) {
    game = GameFromJson({{"frontier", a.frontier}});
  } else {
    throw ConfigurationError("bargain needs --rubinstein, --ultimatum, --game or --frontier");
  }
  const Agreement ag = NashSolution(game);
  const AxiomReport axioms = CheckAxioms([](const BargainingGame& gm) { return NashSolution(gm); }, game);
  if (g.format == "json") {
    nlohmann::json doc = {{"sender", ag.payoffs.sender},
                          {"receiver", ag.payoffs.receiver},
                          {"axioms",
                           {{"pareto", axioms.pareto},
                            {"symmetry", axioms.symmetry},
                            {"iia", axioms.iia},
                            {"affine_invariance", axioms.affine_invariance}}}};
    if (ag.parameter) doc["parameter"] = *ag.parameter;
    if (ag.index) doc["index"] = *ag.index;
    os << doc.dump(2) << "\n";
  } else {
    os << "nash " << Pair(ag.payoffs.sender, ag.payoffs.receiver) << "\n";
    if (ag.parameter) os << "parameter " << *ag.parameter << "\n";
    if (ag.index) os << "index " << *ag.index << "\n";
    os << "axioms " << (axioms.AllPass() ? "pass" : "fail") << "\n";
  }
}

// reduce --------------------------------------------------------------

struct ReduceArgs {
  std::string scenario;
  std::string mode = "frontier";
  double resolution = 0.0;
  std::string csv;
};

void RunReduce(const Globals& g, const ReduceArgs& a) {
  const PersuasionTask task = ResolveTask(a.scenario);
  FeasibilityOptions opts;
  if (a.mode == "full") {
    opts.mode = FeasibilityMode::kFullProfile;
  } else if (a.mode != "frontier") {
    throw ConfigurationError("--mode must be frontier or full");
  }
  if (a.resolution > 0.0) opts.resolution = a.resolution;
  const FeasibilityBuild build = BuildFeasibility(task, opts);
  const BargainingGame game = BuildBargainingGame(task, build);
  const Agreement nash = NashSolution(game);
  const NashPersuasion direct = SolveViaNashProduct(task);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw ConfigurationError("cannot write " + a.csv);
    WriteFeasibilityCsv(csv, build);
  }
  Sink sink(g.out);
  std::ostream& os = sink.os();
  if (g.format == "csv") {
    WriteFeasibilityCsv(os, build);
    return;
  }
  const PayoffPair d = DisagreementPoint(task);
  if (g.format == "json") {
    os << nlohmann::json{{"points", build.points.size()},
                         {"disagreement", {d.sender, d.receiver}},
                         {"game_nash", {nash.payoffs.sender, nash.payoffs.receiver}},
                         {"nash_product_scheme", MatrixToJson(direct.scheme.matrix())},
                         {"nash_product_payoffs",
                          {direct.agreement.payoffs.sender, direct.agreement.payoffs.receiver}}}
              .dump(2)
       << "\n";
    return;
  }
  os << "points " << build.points.size() << "\n";
  os << "disagreement " << Pair(d.sender, d.receiver) << "\n";
  os << "game nash " << Pair(nash.payoffs.sender, nash.payoffs.receiver) << "\n";
  os << "nash product " << Pair(direct.agreement.payoffs.sender, direct.agreement.payoffs.receiver)
     << "\n";
  if (task.IsBinary()) {
    const auto [x1, x2] = direct.scheme.BinaryParams();
    os << "scheme x1=" << x1 << " x2=" << x2 << "\n";
  }
}

// agents --------------------------------------------------------------

struct AgentArgs {
  std::string sender = "spe";
  std::string receiver = "spe";
  std::string bargainer0 = "spe";
  std::string bargainer1 = "spe";
  std::string threshold;
  std::vector<double> patience = {0.99, 0.99};
  std::vector<std::string> mock_replies;  // one file per agent
  std::string replay;
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-4o";
  std::string temperature;
  int transport_retries = 2;
  int reprompts = 2;
};

std::shared_ptr<ChatBackend> MakeBackend(const Globals& g, const AgentArgs& a, int agent) {
  if (g.backend == "mock") {
    if (a.mock_replies.size() != 2) {
      throw ConfigurationError("--backend mock needs --mock-replies FILE0 FILE1");
    }
    return std::make_shared<MockChatBackend>(ReadReplies(a.mock_replies[agent]));
  }
  if (g.backend == "replay") {
    if (a.replay.empty()) throw ConfigurationError("--backend replay needs --replay TRACE");
    std::ifstream in(a.replay);
    if (!in) throw ConfigurationError("cannot open " + a.replay);
    return std::make_shared<ReplayChatBackend>(ReadTrace(in), agent);
  }
  if (g.backend == "live") {
    HttpBackendConfig cfg;
    cfg.endpoint = a.endpoint;
    return std::make_shared<HttpChatBackend>(cfg);
  }
  throw ConfigurationError("unknown backend '" + g.backend + "'");
}

LlmAgentConfig LlmConfig(const AgentArgs& a) {
  LlmAgentConfig cfg;
  cfg.model = a.model;
  cfg.temperature = a.temperature;
  cfg.retry = {a.transport_retries, a.reprompts};
  return cfg;
}

AgentHandle MakeAgent(const Globals& g, const AgentArgs& a, int agent, bool bargaining) {
  if (g.backend != "scripted") {
    auto llm = std::make_shared<LlmAgent>(LlmConfig(a), MakeBackend(g, a, agent));
    return {llm, llm};
  }
  ScriptedAgentSpec spec;
  if (bargaining) {
    spec.role = AgentRole::kBargainer;
    spec.strategy = StrategyFromName(agent == 0 ? a.bargainer0 : a.bargainer1);
  } else {
    spec.role = agent == 0 ? AgentRole::kSender : AgentRole::kReceiver;
    spec.strategy = StrategyFromName(agent == 0 ? a.sender : a.receiver);
  }
  if (spec.strategy == Strategy::kSatisfaction) {
    spec.threshold = Threshold::FromTag(a.threshold.empty() ? "payoff_comparison" : a.threshold);
  }
  if (a.patience.size() != 2) throw ConfigurationError("--patience needs two values");
  spec.patience = a.patience[agent];
  spec.opponent_patience = a.patience[1 - agent];
  std::shared_ptr<ScriptedAgent> s = MakeScriptedAgent(spec);
  return {s, s};
}

// simulate ------------------------------------------------------------

struct SimulateArgs {
  std::string procedure = "long_term";
  std::string scenario = "grading_students";
  std::string dynamics = "fixed";
  std::string first = "agent0";
  std::string value_setting;
  double stop_probability = 0.1;
  int max_timestep = 10;
  std::size_t steps = 10000;
  std::vector<double> delta = {0.9, 0.9};
  double pie = 1.0;
  bool one_shot = false;
};

RoleDynamics ParseDynamics(const std::string& s) {
  if (s == "fixed") return RoleDynamics::kFixed;
  if (s == "alternating") return RoleDynamics::kAlternating;
  throw ConfigurationError("--dynamics must be fixed or alternating");
}

FirstProposer ParseFirst(const std::string& s) {
  if (s == "agent0") return FirstProposer::kAgent0;
  if (s == "agent1") return FirstProposer::kAgent1;
  if (s == "coin_flip") return FirstProposer::kCoinFlip;
  throw ConfigurationError("--first must be agent0, agent1 or coin_flip");
}

void RunSimulate(const Globals& g, const SimulateArgs& s, const AgentArgs& a) {
  const StoppingRule stopping{s.stop_probability, s.max_timestep};
  GameTrace trace;
  const bool bargaining = s.procedure == "bargaining" || s.procedure == "rubinstein";
  AgentHandle a0 = MakeAgent(g, a, 0, bargaining);
  AgentHandle a1 = MakeAgent(g, a, 1, bargaining);
  if (s.procedure == "rubinstein") {
    if (s.delta.size() != 2) throw ConfigurationError("--delta needs two values");
    trace = RunRubinstein({s.pie, s.delta[0], s.delta[1]}, *a0.bargaining, *a1.bargaining,
                          stopping, g.seed);
  } else if (s.procedure == "bargaining") {
    const std::string value = s.value_setting.empty() ? "unbounded" : s.value_setting;
    const std::string scenario = s.scenario == "grading_students" ? "math_baseline" : s.scenario;
    const BargainingFrontier f = ScenarioFrontier(scenario, value);
    BargainingOptions o;
    o.one_shot = s.one_shot;
    o.dynamics = ParseDynamics(s.dynamics);
    o.first_proposer = ParseFirst(s.first);
    o.stopping = stopping;
    o.scenario = scenario;
    o.value_setting = value;
    trace = RunBargaining(f, *a0.bargaining, *a1.bargaining, o, g.seed);
  } else {
    const PersuasionTask task = ResolveTask(s.scenario);
    if (s.procedure == "one_shot") {
      trace = RunOneShotPersuasion(task, *a0.persuasion, *a1.persuasion, g.seed);
    } else if (s.procedure == "cheap_talk") {
      trace = RunCheapTalk(task, *a0.persuasion, *a1.persuasion, g.seed);
    } else if (s.procedure == "long_term") {
      LongTermOptions o;
      o.dynamics = ParseDynamics(s.dynamics);
      o.first_proposer = ParseFirst(s.first);
      o.stopping = stopping;
      o.realization_steps = s.steps;
      o.scenario = task.label.empty() ? "math_baseline" : task.label;
      if (!s.value_setting.empty()) o.value_setting = s.value_setting;
      trace = RunLongTerm(task, *a0.persuasion, *a1.persuasion, o, g.seed);
    } else {
      throw ConfigurationError("unknown procedure '" + s.procedure + "'");
    }
  }
  Sink sink(g.out);
  if (g.format == "json") {
    sink.os() << trace.SummaryJson().dump(2) << "\n";
  } else {
    WriteTrace(sink.os(), trace);
  }
  if (trace.aborted) throw AgentFailure("run aborted: " + trace.failure);
}

// experiment ----------------------------------------------------------

struct ExperimentArgs {
  std::string grid;
  std::vector<int> ids;
  std::string trace_dir;
  bool serial = false;
  int runs = 0;
};

void RunExperimentCmd(const Globals& g, const ExperimentArgs& e, const AgentArgs& a) {
  std::vector<ExperimentConfig> grid = e.grid.empty() ? BundledGrid() : BuildGrid(ReadJsonFile(e.grid));
  std::vector<ExperimentConfig> chosen;
  if (e.ids.empty()) {
    chosen = grid;
  } else {
    for (int id : e.ids) chosen.push_back(FindConfig(grid, id));
  }
  AgentFactory factory;
  if (g.backend == "scripted") {
    factory = ScriptedFactory();
  } else {
    AgentArgs args = a;
    Globals globals = g;
    factory = LlmFactory(LlmConfig(a), [globals, args](const ExperimentConfig&, int agent, int) {
      return MakeBackend(globals, args, agent);
    });
  }
  ExperimentOptions opts;
  opts.parallel = !e.serial && g.backend == "scripted";
  if (!e.trace_dir.empty()) {
    std::filesystem::create_directories(e.trace_dir);
    opts.trace_dir = e.trace_dir;
  }
  std::vector<RunSummary> summaries;
  for (ExperimentConfig c : chosen) {
    if (e.runs > 0) c.runs = e.runs;
    c.seed_base ^= g.seed == 1 ? 0 : g.seed;
    summaries.push_back(e.serial ? RunExperimentSerial(c, factory) : RunExperiment(c, factory, opts));
    for (const auto& w : summaries.back().warnings) {
      std::cerr << "warning: config " << c.id << ": " << w << "\n";
    }
  }
  Sink sink(g.out);
  std::ostream& os = sink.os();
  if (g.format == "csv") {
    WriteSummariesCsv(os, summaries);
  } else if (g.format == "json") {
    for (const auto& s : summaries) os << SummaryToJson(s).dump() << "\n";
  } else {
    os.setf(std::ios::fixed);
    os.precision(2);
    for (std::size_t k = 0; k < summaries.size(); ++k) {
      const RunSummary& s = summaries[k];
      os << ConfigLabel(chosen[k]) << ": payoff " << s.final_proposer_payoff.mean << " +- "
         << s.final_proposer_payoff.sd << ", deal timestep " << s.deal_timestep.mean << " +- "
         << s.deal_timestep.sd << ", consensus rate " << s.consensus_rate << "\n";
    }
  }
}

// report --------------------------------------------------------------

struct ReportArgs {
  std::string summaries;
  std::string traces;
  std::string grid;
  std::string reference = "ground_truth";
};

std::vector<RunSummary> SummariesFromTraces(const std::string& dir) {
  std::map<int, std::vector<RunRecord>> by_config;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    int id = 0, run = 0;
    if (std::sscanf(name.c_str(), "config%d_run%d.jsonl", &id, &run) != 2) continue;
    std::ifstream in(entry.path());
    by_config[id].push_back(RecordFromTrace(ReadTrace(in), run));
  }
  std::vector<RunSummary> out;
  for (auto& [id, records] : by_config) {
    std::sort(records.begin(), records.end(),
              [](const RunRecord& x, const RunRecord& y) { return x.run < y.run; });
    out.push_back(Summarize(id, std::move(records)));
  }
  return out;
}

void RunReport(const Globals& g, const ReportArgs& r) {
  std::vector<RunSummary> summaries;
  if (!r.traces.empty()) {
    summaries = SummariesFromTraces(r.traces);
  } else if (!r.summaries.empty()) {
    std::ifstream in(r.summaries);
    if (!in) throw ConfigurationError("cannot open " + r.summaries);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      summaries.push_back(SummaryFromJson(nlohmann::json::parse(line)));
    }
  } else {
    throw ConfigurationError("report needs --summaries or --traces");
  }
  const auto grid = r.grid.empty() ? BundledGrid() : BuildGrid(ReadJsonFile(r.grid));
  std::vector<double> gt, hyp;
  for (const auto& s : summaries) {
    const ExperimentConfig& c = FindConfig(grid, s.config_id);
    gt.push_back(GroundTruth(c));
    hyp.push_back(Hypothesis(c));
  }
  std::vector<CorrelationResult> results;
  if (r.reference == "ground_truth" || r.reference == "both") {
    results.push_back(CorrelationReport(summaries, gt, "ground_truth"));
  }
  if (r.reference == "hypothesis" || r.reference == "both") {
    results.push_back(CorrelationReport(summaries, hyp, "hypothesis"));
  }
  if (results.empty()) throw ConfigurationError("--reference must be ground_truth, hypothesis or both");
  Sink sink(g.out);
  std::ostream& os = sink.os();
  if (g.format == "csv") {
    WriteSummariesCsv(os, summaries);
    os << "label,n,r,p_two_sided,p_one_sided\n";
    for (const auto& c : results) {
      os << c.label << "," << c.n << "," << c.r << "," << c.p_two_sided << "," << c.p_one_sided << "\n";
    }
  } else if (g.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : results) doc.push_back(CorrelationToJson(c));
    os << doc.dump(2) << "\n";
  } else {
    for (const auto& c : results) {
      os << c.label << ": n=" << c.n << " r=" << c.r << " p(two-sided)=" << c.p_two_sided
         << " p(one-sided)=" << c.p_one_sided << "\n";
    }
  }
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"Information design and bargaining toolkit"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&g](CLI::App* sub) {
    sub->add_option("--seed", g.seed, "RNG seed");
    sub->add_option("--out", g.out, "Output file (default stdout)");
    sub->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--backend", g.backend, "Agent backend")
        ->check(CLI::IsMember({"scripted", "mock", "live", "replay"}));
  };

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Sender-optimal obedient scheme");
  solve->add_option("scenario", solve_args.scenario, "Scenario file or tag")->required();
  add_globals(solve);

  BargainArgs bargain_args;
  auto* bargain = app.add_subcommand("bargain", "Nash, Rubinstein and ultimatum solutions");
  bargain->add_flag("--rubinstein", bargain_args.rubinstein, "Rubinstein SPE split");
  bargain->add_flag("--ultimatum", bargain_args.ultimatum, "Ultimatum SPE");
  bargain->add_option("--delta", bargain_args.delta, "Patience of proposer and responder")->expected(2);
  bargain->add_option("--pie", bargain_args.pie, "Pie size");
  bargain->add_flag("--reject-at-indifference", bargain_args.reject_at_indifference);
  bargain->add_option("--granularity", bargain_args.granularity, "Smallest unit of the pie");
  bargain->add_option("--game", bargain_args.game, "Game file (points or frontier)");
  bargain->add_option("--frontier", bargain_args.frontier, "bounded or unbounded");
  add_globals(bargain);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Build and solve the induced bargaining game");
  reduce->add_option("scenario", reduce_args.scenario, "Scenario file or tag")->required();
  reduce->add_option("--mode", reduce_args.mode, "frontier or full");
  reduce->add_option("--resolution", reduce_args.resolution, "Grid step");
  reduce->add_option("--csv", reduce_args.csv, "Write the feasibility set as CSV");
  add_globals(reduce);

  AgentArgs agent_args;
  auto add_agents = [&agent_args](CLI::App* sub) {
    sub->add_option("--sender", agent_args.sender, "Scripted sender strategy");
    sub->add_option("--receiver", agent_args.receiver, "Scripted receiver strategy");
    sub->add_option("--bargainer0", agent_args.bargainer0, "Scripted strategy of agent 0");
    sub->add_option("--bargainer1", agent_args.bargainer1, "Scripted strategy of agent 1");
    sub->add_option("--threshold", agent_args.threshold, "payoff_comparison or honesty");
    sub->add_option("--patience", agent_args.patience, "Patience of agents 0 and 1")->expected(2);
    sub->add_option("--mock-replies", agent_args.mock_replies, "Reply files for agents 0 and 1")
        ->expected(2);
    sub->add_option("--replay", agent_args.replay, "Trace to replay replies from");
    sub->add_option("--endpoint", agent_args.endpoint, "Chat-completions URL");
    sub->add_option("--model", agent_args.model, "Model name");
    sub->add_option("--temperature", agent_args.temperature, "Sampling temperature");
    sub->add_option("--transport-retries", agent_args.transport_retries);
    sub->add_option("--reprompts", agent_args.reprompts);
  };

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "One procedure run, trace to the output");
  simulate->add_option("--procedure", sim_args.procedure)
      ->check(CLI::IsMember({"one_shot", "cheap_talk", "long_term", "bargaining", "rubinstein"}));
  simulate->add_option("--scenario", sim_args.scenario, "Scenario file or tag");
  simulate->add_option("--dynamics", sim_args.dynamics, "fixed or alternating");
  simulate->add_option("--first", sim_args.first, "agent0, agent1 or coin_flip");
  simulate->add_option("--value-setting", sim_args.value_setting, "bounded or unbounded");
  simulate->add_option("--stop-probability", sim_args.stop_probability);
  simulate->add_option("--max-timestep", sim_args.max_timestep);
  simulate->add_option("--steps", sim_args.steps, "Realization steps");
  simulate->add_option("--delta", sim_args.delta, "Rubinstein patience")->expected(2);
  simulate->add_option("--pie", sim_args.pie);
  simulate->add_flag("--one-shot", sim_args.one_shot, "Single-offer bargaining");
  add_agents(simulate);
  add_globals(simulate);

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "Run grid configs");
  experiment->add_option("--grid", exp_args.grid, "Grid document (default: bundled)");
  experiment->add_option("--id", exp_args.ids, "Config ids (default: all)");
  experiment->add_option("--trace-dir", exp_args.trace_dir, "Write per-run traces here");
  experiment->add_option("--runs", exp_args.runs, "Override runs per config");
  experiment->add_flag("--serial", exp_args.serial, "Single-threaded reference path");
  add_agents(experiment);
  add_globals(experiment);

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Aggregate summaries and correlate");
  report->add_option("--summaries", report_args.summaries, "Summary stream (json lines)");
  report->add_option("--traces", report_args.traces, "Directory of per-run traces");
  report->add_option("--grid", report_args.grid, "Grid document (default: bundled)");
  report->add_option("--reference", report_args.reference, "ground_truth, hypothesis or both");
  add_globals(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*solve) RunSolve(g, solve_args);
    if (*bargain) RunBargain(g, bargain_args);
    if (*reduce) RunReduce(g, reduce_args);
    if (*simulate) RunSimulate(g, sim_args, agent_args);
    if (*experiment) RunExperimentCmd(g, exp_args, agent_args);
    if (*report) RunReport(g, report_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace infobargain::cli
