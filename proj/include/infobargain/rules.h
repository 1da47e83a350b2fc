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

#ifndef INFOBARGAIN_RULES_H_
#define INFOBARGAIN_RULES_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "infobargain/core.h"

namespace infobargain {

enum class ThresholdKind { kPayoffComparison, kHonesty, kCustom };

// Satisfaction predicate chi. Payoff predicates see (R_0, R_1); scheme
// predicates see the committed scheme.
class Threshold {
 public:
  using PayoffPredicate = std::function<bool(const PayoffPair& r0, const PayoffPair& r1)>;
  using SchemePredicate = std::function<bool(const SignalingScheme&)>;

  // chi = 1 iff R^i_1 <= R^j_1 (1e-12 slack).
  static Threshold PayoffComparison();
  // chi = 1 iff phi(sigma = s | s) >= 1 - 1e-12 for every state. Needs
  // |signals| = |states|.
  static Threshold Honesty();
  static Threshold CustomPayoff(PayoffPredicate predicate, std::string name);
  static Threshold CustomScheme(SchemePredicate predicate, std::string name);
  // "payoff_comparison" or "honesty"; throws ConfigurationError otherwise.
  static Threshold FromTag(std::string_view tag);

  ThresholdKind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }

  bool Evaluate(const SignalingScheme& scheme, const PayoffPair& r0,
                const PayoffPair& r1) const;

 private:
  Threshold(ThresholdKind kind, std::string tag, PayoffPredicate payoff,
            SchemePredicate scheme)
      : kind_(kind), tag_(std::move(tag)), payoff_(std::move(payoff)),
        scheme_(std::move(scheme)) {}

  ThresholdKind kind_;
  std::string tag_;
  PayoffPredicate payoff_;
  SchemePredicate scheme_;
};

struct ResolvedRule {
  ActionRule pi0;
  ActionRule pi1;
  PayoffPair r0;  // psi(phi, pi0)
  PayoffPair r1;  // psi(phi, pi1)
  bool satisfied = false;

  const ActionRule& selected() const { return satisfied ? pi1 : pi0; }
};

// Receiver rule that switches between pi0 and pi1 by a threshold.
class MetaActionRule {
 public:
  explicit MetaActionRule(Threshold threshold) : threshold_(std::move(threshold)) {}

  ResolvedRule Resolve(const PersuasionTask& task, const SignalingScheme& scheme) const;
  ActionRule RuleFor(const PersuasionTask& task, const SignalingScheme& scheme) const {
    return Resolve(task, scheme).selected();
  }
  const Threshold& threshold() const { return threshold_; }

 private:
  Threshold threshold_;
};

// Action distribution for one signal under the satisfaction check.
std::vector<double> SatisfactionCheck(const PersuasionTask& task,
                                      const SignalingScheme& scheme,
                                      const Threshold& threshold, std::size_t signal);

}  // namespace infobargain

#endif  // INFOBARGAIN_RULES_H_
