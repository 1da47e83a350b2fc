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

#ifndef INFOBARGAIN_ENGINE_H_
#define INFOBARGAIN_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infobargain/bargaining.h"
#include "infobargain/core.h"
#include "infobargain/rng.h"
#include "infobargain/trace.h"
#include "json.hpp"

namespace infobargain {

enum class Role { kSender, kReceiver };
enum class Position { kProposer, kResponder };
enum class RoleDynamics { kFixed, kAlternating };
enum class FirstProposer { kAgent0, kAgent1, kCoinFlip };
enum class Procedure {
  kOneShotPersuasion,
  kCheapTalk,
  kLongTermPersuasion,
  kBargaining,
  kRubinstein,
};

std::string ProcedureName(Procedure procedure);

// Per-iteration stop with probability p after each round; forced stop once
// max_timestep rounds have run.
struct StoppingRule {
  double stop_probability = 0.1;
  int max_timestep = 10;

  // Throws ValidationError unless 0 <= p <= 1 and cap >= 1.
  void Validate() const;
};

// Number of rounds executed before stopping, in [1, max_timestep].
int SampleStopTime(const StoppingRule& stopping, std::uint64_t seed);
int SampleStopTime(const StoppingRule& stopping, Rng& rng);

// Receives one logged agent exchange (messages, raw reply, parsed decision).
using ExchangeRecorder = std::function<void(const nlohmann::json&)>;

struct PersuasionContext {
  const PersuasionTask* task = nullptr;
  Procedure procedure = Procedure::kLongTermPersuasion;
  int agent_id = 0;
  Role role = Role::kSender;
  Position position = Position::kProposer;
  int timestep = 0;  // 0-based loop counter
  RoleDynamics dynamics = RoleDynamics::kFixed;
  StoppingRule stopping;
  std::string scenario;       // flavour tag for prompts
  std::string value_setting;  // "bounded" or "unbounded"
  ExchangeRecorder record;    // may be empty
};

// Agent 0 is the sender and agent 1 the receiver in persuasion procedures.
class PersuasionAgent {
 public:
  virtual ~PersuasionAgent() = default;
  virtual std::string Name() const = 0;
  // Sender as proposer: the scheme it commits to.
  virtual SignalingScheme ProposeScheme(const PersuasionContext& ctx) = 0;
  // Receiver as proposer: the scheme phi_1 it expects.
  virtual SignalingScheme ProposeExpectation(const PersuasionContext& ctx) = 0;
  // Receiver as responder. `committed` is empty in cheap talk.
  virtual ActionRule RespondRule(const PersuasionContext& ctx,
                                 const std::optional<SignalingScheme>& committed) = 0;
  // Sender as responder to an announced expectation.
  virtual SignalingScheme RespondScheme(const PersuasionContext& ctx,
                                        const SignalingScheme& announced) = 0;
};

// Split frontier x -> (proposer, responder) over [lo, hi], disagreement 0.
struct BargainingFrontier {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::function<Split(double)> shares;
  double granularity = 0.0;  // 0 for a continuous domain
};

// (pie x, pie (1 - x)) over x in [0, 1].
BargainingFrontier UnboundedFrontier(double pie = 1.0);
// ((1 + 2x) / 3, (1 - 2x) / 3) over x in [0, 1/2].
BargainingFrontier BoundedFrontier();

struct BargainingContext {
  const BargainingFrontier* frontier = nullptr;
  Procedure procedure = Procedure::kBargaining;
  int agent_id = 0;
  Position position = Position::kProposer;
  int timestep = 0;
  RoleDynamics dynamics = RoleDynamics::kFixed;
  StoppingRule stopping;
  bool one_shot = false;
  // Set in Rubinstein games only.
  std::optional<double> own_discount;
  std::optional<double> other_discount;
  std::string scenario;
  std::string value_setting;
  ExchangeRecorder record;
};

class BargainingAgent {
 public:
  virtual ~BargainingAgent() = default;
  virtual std::string Name() const = 0;
  // Proposal x on the frontier.
  virtual double ProposeSplit(const BargainingContext& ctx) = 0;
  virtual bool RespondSplit(const BargainingContext& ctx, double offer) = 0;
};

// Procedure 1 shape: commit, sample a state, signal, act, reward once.
GameTrace RunOneShotPersuasion(const PersuasionTask& task, PersuasionAgent& sender,
                               PersuasionAgent& receiver, std::uint64_t seed);

// As one-shot but the scheme stays private to the sender.
GameTrace RunCheapTalk(const PersuasionTask& task, PersuasionAgent& sender,
                       PersuasionAgent& receiver, std::uint64_t seed);

struct LongTermOptions {
  RoleDynamics dynamics = RoleDynamics::kFixed;
  FirstProposer first_proposer = FirstProposer::kAgent0;
  StoppingRule stopping;
  std::size_t realization_steps = 10000;
  std::string scenario = "math_baseline";
  std::string value_setting = "bounded";
};

// Bargaining stage (propose, respond, consensus check, optional role swap)
// until consensus or stop, then a realization stage under the final
// declared profile. agent0 is the sender.
GameTrace RunLongTerm(const PersuasionTask& task, PersuasionAgent& agent0,
                      PersuasionAgent& agent1, const LongTermOptions& options,
                      std::uint64_t seed);

struct BargainingOptions {
  bool one_shot = false;
  RoleDynamics dynamics = RoleDynamics::kFixed;
  FirstProposer first_proposer = FirstProposer::kAgent0;
  StoppingRule stopping;
  std::string scenario = "math_baseline";
  std::string value_setting = "unbounded";
};

// Offers over a split frontier, no discounting.
GameTrace RunBargaining(const BargainingFrontier& frontier, BargainingAgent& agent0,
                        BargainingAgent& agent1, const BargainingOptions& options,
                        std::uint64_t seed);

// Alternating offers with payoffs discounted by delta^t (t = 0 first).
// Agent 0 proposes first and has patience delta_1.
GameTrace RunRubinstein(const RubinsteinSpec& spec, BargainingAgent& agent0,
                        BargainingAgent& agent1, const StoppingRule& stopping,
                        std::uint64_t seed);

struct RealizationResult {
  std::vector<RealizationStep> steps;
  PayoffPair mean;
  PayoffPair standard_error;
};

// n i.i.d. rounds of state, signal, action and reward.
RealizationResult Realize(const PersuasionTask& task, const SignalingScheme& scheme,
                          const ActionRule& rule, std::size_t n, std::uint64_t seed);

}  // namespace infobargain

#endif  // INFOBARGAIN_ENGINE_H_
