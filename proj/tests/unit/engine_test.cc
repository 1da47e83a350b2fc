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

#include <sstream>

#include "doctest.h"
#include "infobargain/engine.h"
#include "infobargain/persuasion.h"
#include "infobargain/scenarios.h"
#include "infobargain/scripted_agents.h"
#include "infobargain/trace.h"

namespace infobargain {
namespace {

std::shared_ptr<ScriptedAgent> Agent(AgentRole role, Strategy s) {
  ScriptedAgentSpec spec;
  spec.role = role;
  spec.strategy = s;
  return MakeScriptedAgent(spec);
}

int Count(const GameTrace& t, EventKind kind) {
  int n = 0;
  for (const auto& e : t.events) n += e.kind == kind;
  return n;
}

// Sends a scheme with the wrong number of states.
class MisshapenSender : public PersuasionAgent {
 public:
  std::string Name() const override { return "misshapen"; }
  SignalingScheme ProposeScheme(const PersuasionContext&) override {
    return SignalingScheme::Deterministic({0, 1, 1}, 2);
  }
  SignalingScheme ProposeExpectation(const PersuasionContext& c) override { return ProposeScheme(c); }
  ActionRule RespondRule(const PersuasionContext&, const std::optional<SignalingScheme>&) override {
    return ObedientRule(2);
  }
  SignalingScheme RespondScheme(const PersuasionContext& c, const SignalingScheme&) override {
    return ProposeScheme(c);
  }
};

class BrokenBargainer : public BargainingAgent {
 public:
  explicit BrokenBargainer(bool throws) : throws_(throws) {}
  std::string Name() const override { return "broken"; }
  double ProposeSplit(const BargainingContext&) override {
    if (throws_) throw AgentFailure("backend unavailable");
    return 1.5;
  }
  bool RespondSplit(const BargainingContext&, double) override { return false; }

 private:
  bool throws_;
};

TEST_SUITE("engine") {
  TEST_CASE("one-shot persuasion with commitment reaches the sender optimum") {
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    const auto t = RunOneShotPersuasion(GradingTask(), *s, *r, 1);
    CHECK_FALSE(t.aborted);
    CHECK(t.final_payoffs[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(Count(t, EventKind::kSchemeCommitted) == 1);
    CHECK(Count(t, EventKind::kStateSampled) == 1);
    CHECK(Count(t, EventKind::kRewards) == 1);
  }

  TEST_CASE("cheap talk collapses to babbling") {
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    const auto t = RunCheapTalk(GradingTask(), *s, *r, 1);
    CHECK(Count(t, EventKind::kSchemeCommitted) == 0);
    CHECK(t.final_payoffs[0] == doctest::Approx(0.0));
    CHECK(t.final_payoffs[1] == doctest::Approx(0.0));
  }

  TEST_CASE("misshapen schemes are protocol violations") {
    MisshapenSender s;
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    const auto t = RunOneShotPersuasion(GradingTask(), s, *r, 1);
    CHECK(t.aborted);
    CHECK(t.failure.rfind("protocol_violation", 0) == 0);
    CHECK(Count(t, EventKind::kProtocolViolation) == 1);
  }

  TEST_CASE("fixed roles agree at once on the sender optimum") {
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    LongTermOptions o;
    o.realization_steps = 200;
    const auto t = RunLongTerm(GradingTask(), *s, *r, o, 9);
    CHECK(t.consensus_reached);
    CHECK(t.deal_timestep == 1);
    CHECK(t.final_proposer == 0);
    CHECK(t.final_payoffs[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(t.realization.size() == 200);
    REQUIRE(t.realized_means.has_value());
  }

  TEST_CASE("receiver proposing first keeps a third") {
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    LongTermOptions o;
    o.dynamics = RoleDynamics::kAlternating;
    o.first_proposer = FirstProposer::kAgent1;
    o.realization_steps = 10;
    const auto t = RunLongTerm(GradingTask(), *s, *r, o, 2);
    CHECK(t.consensus_reached);
    CHECK(t.final_proposer == 1);
    CHECK(t.final_payoffs[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(Count(t, EventKind::kExpectationAnnounced) == 1);
  }

  TEST_CASE("babbling sender never persuades a satisfaction receiver") {
    ScriptedAgentSpec rs;
    rs.role = AgentRole::kReceiver;
    rs.strategy = Strategy::kSatisfaction;
    rs.threshold = Threshold::PayoffComparison();
    auto r = MakeScriptedAgent(rs);
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    LongTermOptions o;
    o.stopping = {0.0, 3};
    o.realization_steps = 10;
    const auto t = RunLongTerm(GradingTask(), *s, *r, o, 4);
    // The optimum fails the satisfaction check, so the receiver plays pi0
    // every round and the cap ends the game.
    CHECK_FALSE(t.consensus_reached);
    CHECK(Count(t, EventKind::kStop) == 1);
    CHECK(Count(t, EventKind::kSchemeCommitted) == 3);
  }

  TEST_CASE("runs are reproducible from the seed") {
    auto run = [](std::uint64_t seed) {
      auto s = Agent(AgentRole::kSender, Strategy::kSpe);
      auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
      LongTermOptions o;
      o.dynamics = RoleDynamics::kAlternating;
      o.first_proposer = FirstProposer::kCoinFlip;
      o.realization_steps = 50;
      return TraceToString(RunLongTerm(GradingTask(), *s, *r, o, seed));
    };
    CHECK(run(17) == run(17));
    CHECK(run(17) != run(18));
  }

  TEST_CASE("greedy proposer against an SPE responder triggers a role swap") {
    auto greedy = Agent(AgentRole::kBargainer, Strategy::kGreedyUltimatum);
    auto spe = Agent(AgentRole::kBargainer, Strategy::kSpe);
    BargainingOptions o;
    o.dynamics = RoleDynamics::kAlternating;
    o.stopping = {0.0, 10};
    const auto t = RunBargaining(UnboundedFrontier(), *greedy, *spe, o, 1);
    CHECK(Count(t, EventKind::kRoleSwap) >= 1);
    CHECK(t.consensus_reached);
    CHECK(t.deal_timestep == 2);
    CHECK(t.final_proposer == 1);
  }

  TEST_CASE("one-shot bargaining is an ultimatum") {
    auto a = Agent(AgentRole::kBargainer, Strategy::kSpe);
    auto b = Agent(AgentRole::kBargainer, Strategy::kSpe);
    BargainingOptions o;
    o.one_shot = true;
    const auto t = RunBargaining(UnboundedFrontier(), *a, *b, o, 1);
    CHECK(t.consensus_reached);
    CHECK(t.final_payoffs[0] == doctest::Approx(1.0));
  }

  TEST_CASE("bargaining failures abort with disagreement payoffs") {
    auto spe = Agent(AgentRole::kBargainer, Strategy::kSpe);
    BrokenBargainer out_of_range(false);
    const auto bad = RunBargaining(UnboundedFrontier(), out_of_range, *spe, {}, 1);
    CHECK(bad.aborted);
    CHECK(bad.failure.rfind("protocol_violation", 0) == 0);
    BrokenBargainer failing(true);
    const auto fail = RunBargaining(UnboundedFrontier(), failing, *spe, {}, 1);
    CHECK(fail.aborted);
    CHECK(fail.failure.rfind("agent_failure", 0) == 0);
    CHECK(fail.final_payoffs == std::array<double, 2>{0.0, 0.0});
  }

  TEST_CASE("rubinstein discounts later agreements") {
    auto greedy = Agent(AgentRole::kBargainer, Strategy::kGreedyUltimatum);
    ScriptedAgentSpec spec;
    spec.role = AgentRole::kBargainer;
    spec.strategy = Strategy::kSpe;
    spec.patience = 0.9;
    spec.opponent_patience = 0.9;
    auto spe = MakeScriptedAgent(spec);
    const auto t = RunRubinstein({1.0, 0.9, 0.9}, *greedy, *spe, {0.0, 10}, 1);
    REQUIRE(t.consensus_reached);
    CHECK(t.deal_timestep == 2);
    CHECK(t.final_payoffs[1] == doctest::Approx(0.9 / 1.9).epsilon(1e-9));
  }

  TEST_CASE("bounded frontier shares") {
    const auto f = BoundedFrontier();
    CHECK(f.shares(0.0).proposer == doctest::Approx(1.0 / 3.0));
    CHECK(f.shares(0.5).proposer == doctest::Approx(2.0 / 3.0));
    CHECK(f.shares(0.5).responder == doctest::Approx(0.0));
    CHECK_THROWS_AS(UnboundedFrontier(0.0), ValidationError);
  }

  TEST_CASE("realization statistics") {
    const auto task = GradingTask();
    const auto r = Realize(task, SignalingScheme::Binary(0, 1), ObedientRule(2), 1, 3);
    CHECK(r.standard_error.sender == 0.0);
    const auto big = Realize(task, SignalingScheme::Binary(0.5, 1), ObedientRule(2), 20000, 3);
    CHECK(std::abs(big.mean.sender - 2.0 / 3.0) < 5 * big.standard_error.sender);
    const auto again = Realize(task, SignalingScheme::Binary(0.5, 1), ObedientRule(2), 20000, 3);
    CHECK(again.mean == big.mean);
  }

  TEST_CASE("stopping rule") {
    CHECK(SampleStopTime({1.0, 10}, 1) == 1);
    CHECK(SampleStopTime({0.0, 7}, 1) == 7);
    CHECK_THROWS_AS(SampleStopTime({1.5, 10}, 1), ValidationError);
    CHECK_THROWS_AS(SampleStopTime({0.1, 0}, 1), ValidationError);
  }

  TEST_CASE("trace round trip") {
    auto s = Agent(AgentRole::kSender, Strategy::kSpe);
    auto r = Agent(AgentRole::kReceiver, Strategy::kSpe);
    LongTermOptions o;
    o.realization_steps = 20;
    const auto t = RunLongTerm(GradingTask(), *s, *r, o, 5);
    std::stringstream ss;
    WriteTrace(ss, t);
    const auto back = ReadTrace(ss);
    CHECK(TraceToString(back) == TraceToString(t));
    CHECK(back.deal_timestep == t.deal_timestep);
    CHECK(back.final_payoffs == t.final_payoffs);
    CHECK_THROWS_AS(EventKindFromName("nonsense"), ParseError);
  }
}

}  // namespace
}  // namespace infobargain
