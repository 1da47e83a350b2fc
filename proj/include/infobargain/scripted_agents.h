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

#ifndef INFOBARGAIN_SCRIPTED_AGENTS_H_
#define INFOBARGAIN_SCRIPTED_AGENTS_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "infobargain/engine.h"
#include "infobargain/rules.h"

namespace infobargain {

enum class AgentRole { kSender, kReceiver, kBargainer };

enum class Strategy {
  kSpe,
  kHonest,
  kBabbling,
  kNashFair,
  kSatisfaction,
  kGreedyUltimatum,
  kObedient,  // receiver that plays the recommended action
};

std::string_view AgentRoleName(AgentRole role);
std::string_view StrategyName(Strategy strategy);
// Both throw ConfigurationError on unknown names.
AgentRole AgentRoleFromName(std::string_view name);
Strategy StrategyFromName(std::string_view name);

struct ScriptedAgentSpec {
  AgentRole role = AgentRole::kSender;
  Strategy strategy = Strategy::kSpe;
  std::optional<Threshold> threshold;  // satisfaction only
  // Patience used for acceptance thresholds when roles alternate.
  double patience = 0.99;
  double opponent_patience = 0.99;
  bool accept_at_indifference = true;
};

// Stationary proposer values of an alternating-offer game with patience
// (own, other) and no engine discounting: a responder accepts whatever
// matches d + delta (v - d), v being its own value as the next proposer.
struct AlternatingValues {
  PayoffPair sender_proposes;    // outcome when the sender proposes
  PayoffPair receiver_proposes;  // outcome when the receiver proposes
};
AlternatingValues PersuasionAlternatingValues(const PersuasionTask& task,
                                              double sender_patience,
                                              double receiver_patience);

// Largest x on the frontier whose responder share is at least floor (the
// responder share is assumed nonincreasing in x). Falls back to lo.
double LargestOfferMeeting(const BargainingFrontier& frontier, double floor);

// Proposer shares (agent a proposing, agent b proposing) when both sides
// use the stationary thresholds above with d = 0.
std::pair<double, double> BargainingAlternatingValues(const BargainingFrontier& frontier,
                                                      double patience_a,
                                                      double patience_b);

// Deterministic agent for every procedure. Persuasion entry points are
// valid for the sender and receiver roles, split entry points for the
// bargainer role; a mismatched call raises ProtocolError.
class ScriptedAgent final : public PersuasionAgent, public BargainingAgent {
 public:
  // Throws ConfigurationError for incompatible role and strategy.
  explicit ScriptedAgent(ScriptedAgentSpec spec);

  std::string Name() const override;
  const ScriptedAgentSpec& spec() const { return spec_; }

  SignalingScheme ProposeScheme(const PersuasionContext& ctx) override;
  SignalingScheme ProposeExpectation(const PersuasionContext& ctx) override;
  ActionRule RespondRule(const PersuasionContext& ctx,
                         const std::optional<SignalingScheme>& committed) override;
  SignalingScheme RespondScheme(const PersuasionContext& ctx,
                                const SignalingScheme& announced) override;

  double ProposeSplit(const BargainingContext& ctx) override;
  bool RespondSplit(const BargainingContext& ctx, double offer) override;

 private:
  void Require(AgentRole role) const;
  // Threshold a responder must see before accepting, by role.
  double SenderFloor(const PersuasionContext& ctx);
  double ReceiverFloor(const PersuasionContext& ctx);
  const AlternatingValues& Values(const PersuasionTask& task);
  double ResponderFloor(const BargainingContext& ctx, bool for_self);

  ScriptedAgentSpec spec_;
  std::mutex mu_;
  std::map<std::string, AlternatingValues> values_;  // keyed by task JSON
};

std::unique_ptr<ScriptedAgent> MakeScriptedAgent(const ScriptedAgentSpec& spec);

}  // namespace infobargain

#endif  // INFOBARGAIN_SCRIPTED_AGENTS_H_
