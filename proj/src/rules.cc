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

#include "infobargain/rules.h"

#include <utility>

#include "infobargain/persuasion.h"

namespace infobargain {

Threshold Threshold::PayoffComparison() {
  return Threshold(
      ThresholdKind::kPayoffComparison, "payoff_comparison",
      [](const PayoffPair&, const PayoffPair& r1) {
        return r1.sender <= r1.receiver + kProbabilityTolerance;
      },
      nullptr);
}

Threshold Threshold::Honesty() {
  return Threshold(ThresholdKind::kHonesty, "honesty", nullptr,
                   [](const SignalingScheme& scheme) {
                     if (scheme.num_rows() != scheme.num_cols()) {
                       throw ShapeError("honesty threshold needs |signals| = |states|");
                     }
                     for (std::size_t s = 0; s < scheme.num_rows(); ++s) {
                       if (scheme(s, s) < 1.0 - kProbabilityTolerance) return false;
                     }
                     return true;
                   });
}

Threshold Threshold::CustomPayoff(PayoffPredicate predicate, std::string name) {
  if (!predicate) throw ConfigurationError("custom threshold needs a predicate");
  return Threshold(ThresholdKind::kCustom, std::move(name), std::move(predicate), nullptr);
}

Threshold Threshold::CustomScheme(SchemePredicate predicate, std::string name) {
  if (!predicate) throw ConfigurationError("custom threshold needs a predicate");
  return Threshold(ThresholdKind::kCustom, std::move(name), nullptr, std::move(predicate));
}

Threshold Threshold::FromTag(std::string_view tag) {
  if (tag == "payoff_comparison") return PayoffComparison();
  if (tag == "honesty") return Honesty();
  throw ConfigurationError("unknown threshold tag '" + std::string(tag) + "'");
}

bool Threshold::Evaluate(const SignalingScheme& scheme, const PayoffPair& r0,
                         const PayoffPair& r1) const {
  if (scheme_) return scheme_(scheme);
  return payoff_(r0, r1);
}

ResolvedRule MetaActionRule::Resolve(const PersuasionTask& task,
                                     const SignalingScheme& scheme) const {
  ActionRule pi0 = BestResponsePrior(task, scheme.num_cols());
  ActionRule pi1 = BestResponsePosterior(task, scheme);
  const PayoffPair r0 = infobargain::Evaluate(task, scheme, pi0);
  const PayoffPair r1 = infobargain::Evaluate(task, scheme, pi1);
  const bool satisfied = threshold_.Evaluate(scheme, r0, r1);
  return ResolvedRule{std::move(pi0), std::move(pi1), r0, r1, satisfied};
}

std::vector<double> SatisfactionCheck(const PersuasionTask& task,
                                      const SignalingScheme& scheme,
                                      const Threshold& threshold, std::size_t signal) {
  if (signal >= scheme.num_cols()) throw ShapeError("signal out of range");
  const ResolvedRule resolved = MetaActionRule(threshold).Resolve(task, scheme);
  const auto row = resolved.selected().row(signal);
  return {row.begin(), row.end()};
}

}  // namespace infobargain
