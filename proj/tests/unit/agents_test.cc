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

#include "doctest.h"
#include "infobargain/engine.h"
#include "infobargain/persuasion.h"
#include "infobargain/scenarios.h"
#include "infobargain/scripted_agents.h"

namespace infobargain {
namespace {

TEST_SUITE("agents") {
  TEST_CASE("strategy names round trip") {
    for (Strategy s : {Strategy::kSpe, Strategy::kHonest, Strategy::kBabbling, Strategy::kNashFair,
                       Strategy::kSatisfaction, Strategy::kGreedyUltimatum, Strategy::kObedient}) {
      CHECK(StrategyFromName(StrategyName(s)) == s);
    }
    CHECK_THROWS_AS(StrategyFromName("clever"), ConfigurationError);
    CHECK(AgentRoleFromName("receiver") == AgentRole::kReceiver);
  }

  TEST_CASE("invalid role and strategy pairs are rejected") {
    ScriptedAgentSpec spec;
    spec.role = AgentRole::kSender;
    spec.strategy = Strategy::kGreedyUltimatum;
    CHECK_THROWS_AS(MakeScriptedAgent(spec), ConfigurationError);
    spec.role = AgentRole::kReceiver;
    spec.strategy = Strategy::kSatisfaction;
    CHECK_THROWS_AS(MakeScriptedAgent(spec), ConfigurationError);  // no threshold
    spec.threshold = Threshold::Honesty();
    CHECK_NOTHROW(MakeScriptedAgent(spec));
  }

  TEST_CASE("alternating persuasion values") {
    const auto v = PersuasionAlternatingValues(GradingTask(), 0.99, 0.99);
    // Responder floors d + delta (v - d) with d = 0.
    CHECK(v.receiver_proposes.receiver == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(v.sender_proposes.sender == doctest::Approx(2.0 / 3.0 - 0.99 / 3.0).epsilon(1e-9));
    const auto impatient = PersuasionAlternatingValues(GradingTask(), 0.0, 0.0);
    CHECK(impatient.sender_proposes.sender == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  }

  TEST_CASE("alternating bargaining values match the closed form") {
    const auto [va, vb] = BargainingAlternatingValues(UnboundedFrontier(), 0.9, 0.9);
    CHECK(va == doctest::Approx(1 / 1.9).epsilon(1e-9));
    CHECK(vb == doctest::Approx(1 / 1.9).epsilon(1e-9));
    const auto [ba, bb] = BargainingAlternatingValues(BoundedFrontier(), 0.99, 0.99);
    CHECK(ba == doctest::Approx((2.0 / 3.0) / 1.99).epsilon(1e-9));
    (void)bb;
  }

  TEST_CASE("largest offer meeting a floor respects granularity") {
    auto f = UnboundedFrontier(100.0);
    f.granularity = 0.01;
    const double x = LargestOfferMeeting(f, 30.5);
    CHECK(f.shares(x).responder >= 30.5 - 1e-9);
    CHECK(x == doctest::Approx(0.69));
  }

  TEST_CASE("honest and babbling senders") {
    ScriptedAgentSpec spec;
    spec.role = AgentRole::kSender;
    spec.strategy = Strategy::kHonest;
    auto honest = MakeScriptedAgent(spec);
    const auto task = GradingTask();
    PersuasionContext ctx;
    ctx.task = &task;
    CHECK(honest->ProposeScheme(ctx) == HonestScheme(task));
    spec.strategy = Strategy::kBabbling;
    CHECK(MakeScriptedAgent(spec)->ProposeScheme(ctx) == BabblingScheme(task));
    spec.strategy = Strategy::kNashFair;
    const auto fair = MakeScriptedAgent(spec)->ProposeScheme(ctx);
    CHECK(fair.BinaryParams().first <= 1e-3);
  }

  TEST_CASE("agents refuse the wrong role") {
    ScriptedAgentSpec spec;
    spec.role = AgentRole::kSender;
    spec.strategy = Strategy::kSpe;
    auto s = MakeScriptedAgent(spec);
    const auto task = GradingTask();
    PersuasionContext ctx;
    ctx.task = &task;
    CHECK_THROWS_AS(s->RespondRule(ctx, std::nullopt), ProtocolError);
  }

  TEST_CASE("nash-fair bargainers split the bounded surplus evenly") {
    ScriptedAgentSpec spec;
    spec.role = AgentRole::kBargainer;
    spec.strategy = Strategy::kNashFair;
    auto a = MakeScriptedAgent(spec);
    auto b = MakeScriptedAgent(spec);
    BargainingOptions o;
    o.one_shot = true;
    o.value_setting = "bounded";
    const auto t = RunBargaining(BoundedFrontier(), *a, *b, o, 1);
    CHECK(t.consensus_reached);
    CHECK(t.final_payoffs[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  }
}

}  // namespace
}  // namespace infobargain
