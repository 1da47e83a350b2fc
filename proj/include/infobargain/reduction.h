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

#ifndef INFOBARGAIN_REDUCTION_H_
#define INFOBARGAIN_REDUCTION_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infobargain/bargaining.h"
#include "infobargain/core.h"

namespace infobargain {

// R_0: babbling scheme against the prior best response.
PayoffPair DisagreementPoint(const PersuasionTask& task);

// Linear objective over obedient schemes with optional payoff floors
// (receiver obeys). Floors are enforced up to 1e-12.
struct ObedientTarget {
  double sender_weight = 1.0;
  double receiver_weight = 0.0;
  std::optional<double> min_sender;
  std::optional<double> min_receiver;
};

// Returns nullopt when the floors cannot be met.
std::optional<SignalingScheme> OptimizeObedient(const PersuasionTask& task,
                                                const ObedientTarget& target);

struct BetterOutcomeWitness {
  SignalingScheme scheme;
  ActionRule rule;
  PayoffPair payoffs;
};

struct BetterOutcomes {
  bool holds = false;
  double margin = 0.0;  // best min(gain_i, gain_j) over obedient schemes
  std::optional<BetterOutcomeWitness> witness;
};

// Does some obedient scheme (receiver at pi1) beat R_0 strictly for both?
BetterOutcomes CheckBetterOutcomes(const PersuasionTask& task);

// One-parameter family of schemes.
struct SchemeFamily {
  std::function<SignalingScheme(double)> scheme_at;
  double lo = 0.0;
  double hi = 1.0;
  std::string parameter_name = "t";
};

// Default family, parameter in [0, 1]: 0 is the sender optimum and 1 the
// receiver's best obedient outcome; in between, the sender's best scheme
// subject to a linearly rising floor on the receiver's payoff.
SchemeFamily ParetoFrontierFamily(const PersuasionTask& task);

// Entrywise interpolation between two schemes of equal shape.
SchemeFamily LinearSchemeFamily(const SignalingScheme& at_lo,
                                const SignalingScheme& at_hi, double lo,
                                double hi, std::string parameter_name);

enum class FeasibilityMode { kObedientFrontier, kFullProfile };

struct FeasibilityOptions {
  FeasibilityMode mode = FeasibilityMode::kObedientFrontier;
  // Parameter step (frontier) or probability grid step (full profile).
  // Defaults to 1e-3 and 1/50 respectively.
  std::optional<double> resolution;
  // Frontier mode only; defaults to ParetoFrontierFamily.
  std::optional<SchemeFamily> family;
  // Full-profile mode refuses grids with more (scheme, rule) pairs.
  std::size_t max_grid_points = 20'000'000;
};

struct FeasiblePoint {
  PayoffPair payoffs;
  std::vector<double> scheme;  // row-major phi
  std::vector<double> rule;    // row-major pi
  std::optional<double> parameter;
};

struct FeasibilityBuild {
  FeasibilityMode mode = FeasibilityMode::kObedientFrontier;
  double resolution = 1e-3;
  std::size_t num_states = 0;
  std::size_t num_signals = 0;
  std::size_t num_actions = 0;
  std::vector<FeasiblePoint> points;  // grid order, deduplicated at 1e-9

  SignalingScheme SchemeOf(std::size_t k) const;
  ActionRule RuleOf(std::size_t k) const;
};

// OpenMP kernel. Points are deduplicated in grid order, so the result does
// not depend on thread scheduling.
FeasibilityBuild BuildFeasibility(const PersuasionTask& task,
                                  const FeasibilityOptions& options = {});
// Single-threaded reference that evaluates every grid point with Evaluate().
FeasibilityBuild BuildFeasibilitySerial(const PersuasionTask& task,
                                        const FeasibilityOptions& options = {});

// Finite game over the build's points with d = R_0. Throws
// PreconditionError when no built point beats d strictly for both.
BargainingGame BuildBargainingGame(const PersuasionTask& task,
                                   const FeasibilityBuild& build);

// CSV columns: parameter (frontier mode), phi entries, pi entries,
// sender, receiver.
void WriteFeasibilityCsv(std::ostream& out, const FeasibilityBuild& build);

struct NashPersuasion {
  SignalingScheme scheme;
  ActionRule rule;
  Agreement agreement;
};

// Maximizes the Nash product over the family with the receiver at pi1.
NashPersuasion SolveViaNashProduct(const PersuasionTask& task,
                                   double resolution = 1e-3);
NashPersuasion SolveViaNashProduct(const PersuasionTask& task,
                                   const SchemeFamily& family,
                                   double resolution = 1e-3);

using CommitmentUpdater = std::function<std::pair<SignalingScheme, ActionRule>(
    const SignalingScheme&, const ActionRule&)>;

// Simultaneous best-response dynamic: the receiver moves to pi1(phi); the
// sender moves to its best scheme that keeps the declared rule a best
// response and does not lower the receiver's payoff, staying put when
// already optimal within 1e-9.
CommitmentUpdater DefaultCommitmentUpdater(const PersuasionTask& task);

// Fixed point of the updater (1e-9 per entry) that is neither the
// uninformative scheme nor the prior best response.
bool VerifyJointCommitment(const PersuasionTask& task,
                           const SignalingScheme& scheme, const ActionRule& rule,
                           const CommitmentUpdater& updater = {});

// Rows identical (the scheme reveals nothing).
bool IsUninformative(const SignalingScheme& scheme);

}  // namespace infobargain

#endif  // INFOBARGAIN_REDUCTION_H_
