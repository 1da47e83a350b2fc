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

#include <random>

#include "../oracles.h"
#include "doctest.h"
#include "infobargain/persuasion.h"
#include "infobargain/scenario_io.h"
#include "infobargain/scenarios.h"

namespace infobargain {
namespace {

PersuasionTask ThreeState() { return LoadTask(INFOBARGAIN_DATA_DIR "/scenarios/three_state.json"); }

TEST_SUITE("persuasion") {
  TEST_CASE("posterior by Bayes' rule") {
    const auto task = GradingTask();
    const auto post = ComputePosterior(task, SignalingScheme::Binary(0.5, 1.0), 1);
    CHECK(post.belief[0] == doctest::Approx(0.5));
    CHECK(post.belief[1] == doctest::Approx(0.5));
    CHECK_FALSE(post.signal_unreachable);
    const auto none = ComputePosterior(task, SignalingScheme::Binary(1.0, 1.0), 0);
    CHECK(none.signal_unreachable);
    CHECK(none.belief == task.prior);
    CHECK_THROWS_AS(ComputePosterior(task, SignalingScheme::Binary(0, 1), 2), ShapeError);
  }

  TEST_CASE("prior best response passes on the grading task") {
    const auto task = GradingTask();
    CHECK(PriorBestAction(task) == 0);
    const auto pi0 = BestResponsePrior(task);
    CHECK(pi0(0, 0) == 1.0);
    CHECK(pi0(1, 0) == 1.0);
    CHECK(BestResponsePrior(task, 3).num_rows() == 3);
  }

  TEST_CASE("posterior best response keeps ties obedient") {
    const auto task = GradingTask();
    const auto pi1 = BestResponsePosterior(task, SignalingScheme::Binary(0.5, 1.0));
    CHECK(pi1 == ActionRule::Binary(0.0, 1.0));
    const auto lying = BestResponsePosterior(task, SignalingScheme::Binary(0.75, 1.0));
    CHECK(lying == ActionRule::Binary(0.0, 0.0));
  }

  TEST_CASE("incentive compatibility reports the violation") {
    const auto task = GradingTask();
    const auto ok = IncentiveCompatibility(task, SignalingScheme::Binary(0.5, 1.0));
    CHECK(ok.obedient);
    const auto bad = IncentiveCompatibility(task, SignalingScheme::Binary(1.0, 1.0));
    CHECK_FALSE(bad.obedient);
    CHECK(bad.worst_violation > 0.1);
    CHECK_THROWS_AS(IncentiveCompatibility(task, SignalingScheme{{0.5, 0.25, 0.25}, {0, 0, 1}}),
                    ShapeError);
  }

  TEST_CASE("optimal scheme on the grading task") {
    const auto opt = SolveOptimalScheme(GradingTask());
    CHECK(opt.payoffs.sender == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(opt.ic.obedient);
    CHECK(PersuasionGain(GradingTask()) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  }

  TEST_CASE("aligned interests reveal fully, zero-sum gains nothing") {
    const auto aligned = LoadTask(INFOBARGAIN_DATA_DIR "/scenarios/aligned.json");
    const auto honest = Evaluate(aligned, HonestScheme(aligned), ObedientRule(aligned.num_actions()));
    CHECK(SolveOptimalScheme(aligned).payoffs.sender == doctest::Approx(honest.sender));
    const auto zs = LoadTask(INFOBARGAIN_DATA_DIR "/scenarios/zero_sum.json");
    CHECK(PersuasionGain(zs) == doctest::Approx(0.0).epsilon(1e-9));
  }

  TEST_CASE("babbling and honest schemes") {
    const auto task = GradingTask();
    CHECK(BabblingScheme(task) == SignalingScheme::Binary(0.0, 0.0));
    CHECK(HonestScheme(task) == SignalingScheme::Binary(0.0, 1.0));
    const auto t3 = ThreeState();
    const auto h = HonestScheme(t3);
    for (std::size_t s = 0; s < t3.num_states(); ++s) {
      double best = -1e9;
      for (std::size_t a = 0; a < t3.num_actions(); ++a) best = std::max(best, t3.reward_receiver(s, a));
      for (std::size_t a = 0; a < t3.num_actions(); ++a) {
        if (h(s, a) == 1.0) CHECK(t3.reward_receiver(s, a) == best);
      }
    }
  }

  TEST_CASE("larger task against vertex enumeration") {
    const auto t3 = ThreeState();
    CHECK(SolveOptimalScheme(t3).payoffs.sender ==
          doctest::Approx(testing::VertexEnumerationValue(t3)).epsilon(1e-9));
  }

  TEST_CASE("optimum is monotone under adding a sender-favourable action") {
    std::mt19937_64 gen(5);
    for (int k = 0; k < 20; ++k) {
      const auto t = testing::RandomTask(gen, 2, 2);
      auto bigger = t;
      bigger.actions.push_back("extra");
      Matrix ri(2, 3), rj(2, 3);
      for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t a = 0; a < 2; ++a) {
          ri(s, a) = t.reward_sender(s, a);
          rj(s, a) = t.reward_receiver(s, a);
        }
        ri(s, 2) = 2.0;
        rj(s, 2) = -5.0;  // never taken, so the value cannot drop
      }
      bigger.reward_sender = ri;
      bigger.reward_receiver = rj;
      CHECK(SolveOptimalScheme(bigger).payoffs.sender >=
            SolveOptimalScheme(t).payoffs.sender - 1e-9);
    }
  }

  TEST_CASE("malformed tasks are rejected") {
    auto t = GradingTask();
    t.prior = {0.5, 0.6};
    CHECK_THROWS_AS(SolveOptimalScheme(t), ValidationError);
  }
}

}  // namespace
}  // namespace infobargain
