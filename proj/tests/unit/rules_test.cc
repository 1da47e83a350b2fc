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
#include "infobargain/persuasion.h"
#include "infobargain/rules.h"
#include "infobargain/scenarios.h"

namespace infobargain {
namespace {

TEST_SUITE("rules") {
  TEST_CASE("payoff comparison accepts honest and rejects the sender optimum") {
    const auto task = GradingTask();
    const MetaActionRule rule(Threshold::PayoffComparison());
    const auto honest = rule.Resolve(task, SignalingScheme::Binary(0, 1));
    CHECK(honest.satisfied);
    CHECK(honest.selected() == honest.pi1);
    const auto greedy = rule.Resolve(task, SignalingScheme::Binary(0.5, 1));
    CHECK_FALSE(greedy.satisfied);
    CHECK(greedy.selected() == BestResponsePrior(task));
    CHECK(greedy.r1.sender == doctest::Approx(2.0 / 3.0));
    CHECK(greedy.r0 == PayoffPair{0, 0});
  }

  TEST_CASE("honesty threshold") {
    const auto task = GradingTask();
    const MetaActionRule rule(Threshold::Honesty());
    CHECK(rule.Resolve(task, SignalingScheme::Binary(0, 1)).satisfied);
    CHECK_FALSE(rule.Resolve(task, SignalingScheme::Binary(0.1, 1)).satisfied);
    CHECK_THROWS_AS(rule.Resolve(task, SignalingScheme{{1, 0, 0}, {0, 0, 1}}), ShapeError);
  }

  TEST_CASE("custom thresholds") {
    const auto task = GradingTask();
    const MetaActionRule always(
        Threshold::CustomPayoff([](const PayoffPair&, const PayoffPair&) { return true; }, "always"));
    CHECK(always.Resolve(task, SignalingScheme::Binary(0.5, 1)).satisfied);
    const MetaActionRule scheme_rule(Threshold::CustomScheme(
        [](const SignalingScheme& s) { return s(0, 1) < 0.3; }, "mostly_honest"));
    CHECK(scheme_rule.Resolve(task, SignalingScheme::Binary(0.2, 1)).satisfied);
    CHECK(scheme_rule.threshold().kind() == ThresholdKind::kCustom);
    CHECK_THROWS_AS(Threshold::CustomPayoff(nullptr, "x"), ConfigurationError);
  }

  TEST_CASE("tags") {
    CHECK(Threshold::FromTag("honesty").kind() == ThresholdKind::kHonesty);
    CHECK(Threshold::FromTag("payoff_comparison").tag() == "payoff_comparison");
    CHECK_THROWS_AS(Threshold::FromTag("vibes"), ConfigurationError);
  }

  TEST_CASE("satisfaction check returns an action distribution per signal") {
    const auto task = GradingTask();
    const auto row = SatisfactionCheck(task, SignalingScheme::Binary(0, 1), Threshold::PayoffComparison(), 1);
    CHECK(row == std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(SatisfactionCheck(task, SignalingScheme::Binary(0, 1), Threshold::Honesty(), 2),
                    ShapeError);
  }
}

}  // namespace
}  // namespace infobargain
