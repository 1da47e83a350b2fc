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

#ifndef INFOBARGAIN_PERSUASION_H_
#define INFOBARGAIN_PERSUASION_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "infobargain/core.h"
#include "infobargain/lp.h"

namespace infobargain {

struct Posterior {
  std::vector<double> belief;  // mu(s | signal)
  std::size_t signal = 0;
  // Set when the signal has zero marginal probability; belief is the prior.
  bool signal_unreachable = false;
};

Posterior ComputePosterior(const PersuasionTask& task,
                           const SignalingScheme& scheme, std::size_t signal);

// Index of argmax_a sum_s mu0(s) r^j(s, a), lowest index on ties.
std::size_t PriorBestAction(const PersuasionTask& task);

// pi0: plays PriorBestAction on every signal. The one-argument form uses
// |signals| = |actions|.
ActionRule BestResponsePrior(const PersuasionTask& task);
ActionRule BestResponsePrior(const PersuasionTask& task, std::size_t num_signals);

// pi1: best response to each posterior. Ties favour the recommended action
// (signal index, when it is an action), then the lowest index. Unreachable
// signals fall back to the prior best response.
ActionRule BestResponsePosterior(const PersuasionTask& task,
                                 const SignalingScheme& scheme);

struct ICReport {
  bool obedient = true;
  double worst_violation = 0.0;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

// Obedience check; requires |signals| = |actions|.
ICReport IncentiveCompatibility(const PersuasionTask& task,
                                const SignalingScheme& scheme,
                                double tolerance = kSolverTolerance);

struct OptimalScheme {
  SignalingScheme scheme;
  PayoffPair payoffs;  // receiver obeys
  ICReport ic;
  int lp_iterations = 0;
};

// Sender-optimal obedient scheme.
OptimalScheme SolveOptimalScheme(const PersuasionTask& task);

// Always recommends the prior-best action.
SignalingScheme BabblingScheme(const PersuasionTask& task);

// Recommends the receiver's full-information best action in each state.
SignalingScheme HonestScheme(const PersuasionTask& task);

// Optimal value minus the babbling sender payoff; >= 0.
double PersuasionGain(const PersuasionTask& task);

// Building blocks shared with the reduction module. Variables are the
// entries of phi in row-major order (state-major, |actions| per row).
LinearProgram ObedienceProgram(const PersuasionTask& task);
std::vector<double> PayoffCoefficients(const PersuasionTask& task,
                                       const Matrix& reward);
// Clips round-off from an LP solution and renormalizes rows.
SignalingScheme SchemeFromLpSolution(const PersuasionTask& task,
                                     const std::vector<double>& x);

}  // namespace infobargain

#endif  // INFOBARGAIN_PERSUASION_H_
