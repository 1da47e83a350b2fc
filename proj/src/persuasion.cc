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

#include "infobargain/persuasion.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace infobargain {
namespace {

// Below this magnitude LP output entries are treated as exact zeros.
constexpr double kZeroSnap = 1e-14;
constexpr double kArgmaxTieTolerance = 1e-12;

std::size_t ArgmaxLowest(const std::vector<double>& v, double tol) {
  double best = -std::numeric_limits<double>::infinity();
  for (double x : v) best = std::max(best, x);
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] >= best - tol) return a;
  }
  return 0;
}

}  // namespace

Posterior ComputePosterior(const PersuasionTask& task,
                           const SignalingScheme& scheme, std::size_t signal) {
  if (scheme.num_rows() != task.num_states()) {
    throw ShapeError("scheme rows do not match states");
  }
  if (signal >= scheme.num_cols()) {
    throw ShapeError("signal " + std::to_string(signal) + " out of range (" +
                     std::to_string(scheme.num_cols()) + " signals)");
  }
  Posterior out;
  out.signal = signal;
  out.belief.assign(task.num_states(), 0.0);
  double mass = 0.0;
  for (std::size_t s = 0; s < task.num_states(); ++s) {
    out.belief[s] = task.prior[s] * scheme(s, signal);
    mass += out.belief[s];
  }
  if (mass <= 0.0) {
    out.belief = task.prior;
    out.signal_unreachable = true;
    return out;
  }
  for (double& b : out.belief) b /= mass;
  return out;
}

std::size_t PriorBestAction(const PersuasionTask& task) {
  std::vector<double> value(task.num_actions(), 0.0);
  for (std::size_t a = 0; a < task.num_actions(); ++a) {
    for (std::size_t s = 0; s < task.num_states(); ++s) {
      value[a] += task.prior[s] * task.reward_receiver(s, a);
    }
  }
  return ArgmaxLowest(value, kArgmaxTieTolerance);
}

ActionRule BestResponsePrior(const PersuasionTask& task) {
  return BestResponsePrior(task, task.num_actions());
}

ActionRule BestResponsePrior(const PersuasionTask& task, std::size_t num_signals) {
  RequireValid(task);
  return ActionRule::Deterministic(
      std::vector<std::size_t>(num_signals, PriorBestAction(task)),
      task.num_actions());
}

ActionRule BestResponsePosterior(const PersuasionTask& task,
                                 const SignalingScheme& scheme) {
  RequireValid(task);
  const std::size_t na = task.num_actions();
  const std::size_t prior_best = PriorBestAction(task);
  std::vector<std::size_t> choice(scheme.num_cols(), prior_best);
  for (std::size_t sig = 0; sig < scheme.num_cols(); ++sig) {
    const Posterior post = ComputePosterior(task, scheme, sig);
    if (post.signal_unreachable) continue;
    std::vector<double> value(na, 0.0);
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t s = 0; s < task.num_states(); ++s) {
        value[a] += post.belief[s] * task.reward_receiver(s, a);
      }
    }
    const double best = *std::max_element(value.begin(), value.end());
    if (sig < na && value[sig] >= best - kSolverTolerance) {
      choice[sig] = sig;
    } else {
      choice[sig] = ArgmaxLowest(value, kArgmaxTieTolerance);
    }
  }
  return ActionRule::Deterministic(choice, na);
}

ICReport IncentiveCompatibility(const PersuasionTask& task,
                                const SignalingScheme& scheme, double tolerance) {
  RequireValid(task);
  const std::size_t na = task.num_actions();
  if (scheme.num_cols() != na || scheme.num_rows() != task.num_states()) {
    throw ShapeError("obedience check needs a |states| x |actions| scheme");
  }
  ICReport report;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t alt = 0; alt < na; ++alt) {
      if (alt == a) continue;
      double lhs = 0.0;
      for (std::size_t s = 0; s < task.num_states(); ++s) {
        lhs += task.prior[s] * scheme(s, a) *
               (task.reward_receiver(s, a) - task.reward_receiver(s, alt));
      }
      if (-lhs > report.worst_violation) {
        report.worst_violation = -lhs;
        report.violating_pair = std::make_pair(a, alt);
      }
    }
  }
  report.obedient = report.worst_violation <= tolerance;
  if (report.obedient) report.violating_pair.reset();
  return report;
}

LinearProgram ObedienceProgram(const PersuasionTask& task) {
  RequireValid(task);
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  LinearProgram lp;
  lp.objective.assign(ns * na, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<double> row(ns * na, 0.0);
    for (std::size_t a = 0; a < na; ++a) row[s * na + a] = 1.0;
    lp.Add(std::move(row), Relation::kEqual, 1.0);
  }
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t alt = 0; alt < na; ++alt) {
      if (alt == a) continue;
      std::vector<double> row(ns * na, 0.0);
      for (std::size_t s = 0; s < ns; ++s) {
        row[s * na + a] = task.prior[s] * (task.reward_receiver(s, a) -
                                           task.reward_receiver(s, alt));
      }
      lp.Add(std::move(row), Relation::kGreaterEqual, 0.0);
    }
  }
  return lp;
}

std::vector<double> PayoffCoefficients(const PersuasionTask& task,
                                       const Matrix& reward) {
  const std::size_t na = task.num_actions();
  std::vector<double> c(task.num_states() * na, 0.0);
  for (std::size_t s = 0; s < task.num_states(); ++s) {
    for (std::size_t a = 0; a < na; ++a) {
      c[s * na + a] = task.prior[s] * reward(s, a);
    }
  }
  return c;
}

SignalingScheme SchemeFromLpSolution(const PersuasionTask& task,
                                     const std::vector<double>& x) {
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  if (x.size() < ns * na) throw ShapeError("LP solution too short for scheme");
  Matrix m(ns, na);
  for (std::size_t s = 0; s < ns; ++s) {
    double sum = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
      double v = x[s * na + a];
      if (v < -kSolverTolerance) {
        throw SolverError("LP returned a negative scheme entry", {});
      }
      if (v < kZeroSnap) v = 0.0;
      m(s, a) = v;
      sum += v;
    }
    if (sum <= 0.0) throw SolverError("LP returned an empty scheme row", {});
    for (std::size_t a = 0; a < na; ++a) m(s, a) /= sum;
  }
  return SignalingScheme(std::move(m));
}

OptimalScheme SolveOptimalScheme(const PersuasionTask& task) {
  LinearProgram lp = ObedienceProgram(task);
  lp.objective = PayoffCoefficients(task, task.reward_sender);
  const LpSolution sol = SolveLp(lp);
  SignalingScheme scheme = SchemeFromLpSolution(task, sol.x);
  ICReport ic = IncentiveCompatibility(task, scheme);
  if (!ic.obedient) {
    throw SolverError("optimal scheme failed the obedience check (violation " +
                          std::to_string(ic.worst_violation) + ")",
                      {});
  }
  const PayoffPair payoffs = Evaluate(task, scheme, ObedientRule(task.num_actions()));
  return OptimalScheme{std::move(scheme), payoffs, ic, sol.iterations};
}

SignalingScheme BabblingScheme(const PersuasionTask& task) {
  RequireValid(task);
  return SignalingScheme::Deterministic(
      std::vector<std::size_t>(task.num_states(), PriorBestAction(task)),
      task.num_actions());
}

SignalingScheme HonestScheme(const PersuasionTask& task) {
  RequireValid(task);
  std::vector<std::size_t> choice(task.num_states());
  for (std::size_t s = 0; s < task.num_states(); ++s) {
    std::vector<double> v(task.reward_receiver.row(s).begin(),
                          task.reward_receiver.row(s).end());
    choice[s] = ArgmaxLowest(v, kArgmaxTieTolerance);
  }
  return SignalingScheme::Deterministic(choice, task.num_actions());
}

double PersuasionGain(const PersuasionTask& task) {
  const double optimum = SolveOptimalScheme(task).payoffs.sender;
  const double babbling =
      Evaluate(task, BabblingScheme(task), BestResponsePrior(task)).sender;
  const double gain = optimum - babbling;
  // The babbling scheme is LP-feasible, so only round-off can go negative.
  return gain < 0.0 && gain > -kSolverTolerance ? 0.0 : gain;
}

}  // namespace infobargain
