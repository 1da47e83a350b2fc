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

#include "infobargain/scripted_agents.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "infobargain/persuasion.h"
#include "infobargain/reduction.h"
#include "infobargain/scenario_io.h"

namespace infobargain {
namespace {

constexpr int kMaxValueIterations = 20000;
constexpr double kValueTolerance = 1e-14;

struct Named {
  std::string_view name;
  int value;
};

constexpr Named kRoles[] = {{"sender", 0}, {"receiver", 1}, {"bargainer", 2}};
constexpr Named kStrategies[] = {
    {"spe", 0},          {"honest", 1},           {"babbling", 2}, {"nash-fair", 3},
    {"satisfaction", 4}, {"greedy-ultimatum", 5}, {"obedient", 6},
};

// Best scheme for `maximize` with the other side's payoff at least floor;
// ties broken towards the other side.
SignalingScheme Lexicographic(const PersuasionTask& task, bool sender_first,
                              std::optional<double> floor) {
  ObedientTarget first;
  first.sender_weight = sender_first ? 1.0 : 0.0;
  first.receiver_weight = sender_first ? 0.0 : 1.0;
  if (sender_first) {
    first.min_receiver = floor;
  } else {
    first.min_sender = floor;
  }
  auto best = OptimizeObedient(task, first);
  if (!best) throw SolverError("no obedient scheme meets the floor", {});
  const PayoffPair v = Evaluate(task, *best, ObedientRule(task.num_actions()));
  ObedientTarget second;
  second.sender_weight = sender_first ? 0.0 : 1.0;
  second.receiver_weight = sender_first ? 1.0 : 0.0;
  if (sender_first) {
    second.min_sender = v.sender;
    second.min_receiver = floor;
  } else {
    second.min_receiver = v.receiver;
    second.min_sender = floor;
  }
  auto refined = OptimizeObedient(task, second);
  return refined ? *refined : *best;
}

PayoffPair ObedientPayoffs(const PersuasionTask& task, const SignalingScheme& s) {
  return Evaluate(task, s, BestResponsePosterior(task, s));
}

double Continuation(double d, double patience, double value) {
  return d + patience * (value - d);
}

}  // namespace

std::string_view AgentRoleName(AgentRole role) {
  return kRoles[static_cast<int>(role)].name;
}

std::string_view StrategyName(Strategy strategy) {
  return kStrategies[static_cast<int>(strategy)].name;
}

AgentRole AgentRoleFromName(std::string_view name) {
  for (const auto& r : kRoles) {
    if (r.name == name) return static_cast<AgentRole>(r.value);
  }
  throw ConfigurationError("unknown agent role '" + std::string(name) + "'");
}

Strategy StrategyFromName(std::string_view name) {
  for (const auto& s : kStrategies) {
    if (s.name == name) return static_cast<Strategy>(s.value);
  }
  throw ConfigurationError("unknown strategy '" + std::string(name) + "'");
}

AlternatingValues PersuasionAlternatingValues(const PersuasionTask& task,
                                              double sender_patience,
                                              double receiver_patience) {
  RequireValid(task);
  const PayoffPair d = DisagreementPoint(task);
  // One sweep from the receiver's value when it proposes.
  auto sweep = [&](double receiver_value) {
    const double floor_j = Continuation(d.receiver, receiver_patience, receiver_value);
    AlternatingValues out;
    out.sender_proposes = ObedientPayoffs(task, Lexicographic(task, true, floor_j));
    const double floor_i = Continuation(d.sender, sender_patience, out.sender_proposes.sender);
    out.receiver_proposes = ObedientPayoffs(task, Lexicographic(task, false, floor_i));
    return out;
  };
  AlternatingValues v;
  v.sender_proposes = ObedientPayoffs(task, Lexicographic(task, true, std::nullopt));
  v.receiver_proposes = ObedientPayoffs(task, Lexicographic(task, false, std::nullopt));

  // The sweep is monotone and piecewise linear in its argument, so a
  // bracketed secant (Illinois) search finds the fixed point in a handful of
  // sweeps where plain iteration contracts only by the patience product.
  double hi = v.receiver_proposes.receiver;
  AlternatingValues at_hi = sweep(hi);
  double h_hi = at_hi.receiver_proposes.receiver - hi;
  double lo = d.receiver;
  AlternatingValues at_lo = sweep(lo);
  double h_lo = at_lo.receiver_proposes.receiver - lo;
  if (h_hi <= 0.0 && h_lo >= 0.0) {
    if (std::abs(h_hi) <= kValueTolerance) return at_hi;
    if (std::abs(h_lo) <= kValueTolerance) return at_lo;
    int side = 0;
    for (int it = 0; it < 200 && hi - lo > kValueTolerance; ++it) {
      double x = (lo * h_hi - hi * h_lo) / (h_hi - h_lo);
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
      AlternatingValues at_x = sweep(x);
      const double h = at_x.receiver_proposes.receiver - x;
      if (std::abs(h) <= kValueTolerance) return at_x;
      if (h > 0.0) {
        lo = x;
        h_lo = h;
        at_lo = at_x;
        if (side == -1) h_hi *= 0.5;
        side = -1;
      } else {
        hi = x;
        h_hi = h;
        at_hi = at_x;
        if (side == 1) h_lo *= 0.5;
        side = 1;
      }
    }
    return std::abs(h_lo) < std::abs(h_hi) ? at_lo : at_hi;
  }

  // Fallback: plain value iteration.
  for (int it = 0; it < kMaxValueIterations; ++it) {
    const AlternatingValues next = sweep(v.receiver_proposes.receiver);
    const double change =
        std::max(std::abs(next.sender_proposes.sender - v.sender_proposes.sender),
                 std::abs(next.receiver_proposes.receiver - v.receiver_proposes.receiver));
    v = next;
    if (change <= kValueTolerance) break;
  }
  return v;
}

double LargestOfferMeeting(const BargainingFrontier& frontier, double floor) {
  double lo = frontier.lo;
  double hi = frontier.hi;
  if (frontier.shares(hi).responder >= floor) return hi;
  if (frontier.shares(lo).responder < floor) return lo;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (frontier.shares(mid).responder >= floor) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (frontier.granularity > 0.0) {
    const double steps = std::floor((lo - frontier.lo) / frontier.granularity + 1e-9);
    lo = frontier.lo + steps * frontier.granularity;
  }
  return lo;
}

std::pair<double, double> BargainingAlternatingValues(const BargainingFrontier& frontier,
                                                      double patience_a,
                                                      double patience_b) {
  double va = frontier.shares(frontier.hi).proposer;
  double vb = va;
  for (int it = 0; it < kMaxValueIterations; ++it) {
    const double na = frontier.shares(LargestOfferMeeting(frontier, patience_b * vb)).proposer;
    const double nb = frontier.shares(LargestOfferMeeting(frontier, patience_a * na)).proposer;
    const double change = std::max(std::abs(na - va), std::abs(nb - vb));
    va = na;
    vb = nb;
    if (change <= kValueTolerance) break;
  }
  return {va, vb};
}

ScriptedAgent::ScriptedAgent(ScriptedAgentSpec spec) : spec_(std::move(spec)) {
  const Strategy s = spec_.strategy;
  bool ok = false;
  switch (spec_.role) {
    case AgentRole::kSender:
      ok = s == Strategy::kSpe || s == Strategy::kHonest || s == Strategy::kBabbling ||
           s == Strategy::kNashFair;
      break;
    case AgentRole::kReceiver:
      ok = s == Strategy::kSpe || s == Strategy::kBabbling || s == Strategy::kSatisfaction ||
           s == Strategy::kObedient;
      break;
    case AgentRole::kBargainer:
      ok = s == Strategy::kSpe || s == Strategy::kNashFair || s == Strategy::kGreedyUltimatum;
      break;
  }
  if (!ok) {
    throw ConfigurationError("strategy '" + std::string(StrategyName(s)) +
                             "' is not available to a " +
                             std::string(AgentRoleName(spec_.role)));
  }
  if ((s == Strategy::kSatisfaction) != spec_.threshold.has_value()) {
    throw ConfigurationError(s == Strategy::kSatisfaction
                                 ? "satisfaction strategy needs a threshold"
                                 : "threshold given to a non-satisfaction strategy");
  }
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(spec_.patience) || !in_unit(spec_.opponent_patience)) {
    throw ConfigurationError("patience must lie in [0, 1]");
  }
}

std::string ScriptedAgent::Name() const {
  std::string name = "scripted:" + std::string(AgentRoleName(spec_.role)) + ":" +
                     std::string(StrategyName(spec_.strategy));
  if (spec_.threshold) name += ":" + spec_.threshold->tag();
  return name;
}

void ScriptedAgent::Require(AgentRole role) const {
  if (spec_.role != role) {
    throw ProtocolError(Name() + " asked to act as a " + std::string(AgentRoleName(role)));
  }
}

const AlternatingValues& ScriptedAgent::Values(const PersuasionTask& task) {
  const std::string key = TaskToJson(task).dump();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = values_.find(key);
  if (it == values_.end()) {
    const bool sender = spec_.role == AgentRole::kSender;
    const double ps = sender ? spec_.patience : spec_.opponent_patience;
    const double pr = sender ? spec_.opponent_patience : spec_.patience;
    it = values_.emplace(key, PersuasionAlternatingValues(task, ps, pr)).first;
  }
  return it->second;
}

double ScriptedAgent::SenderFloor(const PersuasionContext& ctx) {
  const PersuasionTask& task = *ctx.task;
  const PayoffPair d = DisagreementPoint(task);
  if (ctx.dynamics == RoleDynamics::kFixed) return d.sender;
  const double patience =
      spec_.role == AgentRole::kSender ? spec_.patience : spec_.opponent_patience;
  return Continuation(d.sender, patience, Values(task).sender_proposes.sender);
}

double ScriptedAgent::ReceiverFloor(const PersuasionContext& ctx) {
  const PersuasionTask& task = *ctx.task;
  const PayoffPair d = DisagreementPoint(task);
  if (ctx.dynamics == RoleDynamics::kFixed) return d.receiver;
  const double patience =
      spec_.role == AgentRole::kReceiver ? spec_.patience : spec_.opponent_patience;
  return Continuation(d.receiver, patience, Values(task).receiver_proposes.receiver);
}

SignalingScheme ScriptedAgent::ProposeScheme(const PersuasionContext& ctx) {
  Require(AgentRole::kSender);
  const PersuasionTask& task = *ctx.task;
  switch (spec_.strategy) {
    case Strategy::kHonest:
      return HonestScheme(task);
    case Strategy::kBabbling:
      return BabblingScheme(task);
    case Strategy::kNashFair:
      return SolveViaNashProduct(task).scheme;
    default:
      break;
  }
  if (ctx.procedure == Procedure::kLongTermPersuasion &&
      ctx.dynamics == RoleDynamics::kAlternating) {
    return Lexicographic(task, true, ReceiverFloor(ctx));
  }
  return SolveOptimalScheme(task).scheme;
}

SignalingScheme ScriptedAgent::ProposeExpectation(const PersuasionContext& ctx) {
  Require(AgentRole::kReceiver);
  const PersuasionTask& task = *ctx.task;
  switch (spec_.strategy) {
    case Strategy::kBabbling:
      return BabblingScheme(task);
    case Strategy::kObedient:
      return HonestScheme(task);
    default:
      break;
  }
  return Lexicographic(task, false, SenderFloor(ctx));
}

ActionRule ScriptedAgent::RespondRule(const PersuasionContext& ctx,
                                      const std::optional<SignalingScheme>& committed) {
  Require(AgentRole::kReceiver);
  const PersuasionTask& task = *ctx.task;
  const std::size_t na = task.num_actions();
  if (spec_.strategy == Strategy::kObedient) return ObedientRule(na);
  // Without a committed scheme only the prior is informative.
  if (!committed || spec_.strategy == Strategy::kBabbling) {
    return BestResponsePrior(task, committed ? committed->num_cols() : na);
  }
  if (spec_.strategy == Strategy::kSatisfaction) {
    return MetaActionRule(*spec_.threshold).RuleFor(task, *committed);
  }
  ActionRule pi1 = BestResponsePosterior(task, *committed);
  if (ctx.procedure == Procedure::kLongTermPersuasion &&
      ctx.dynamics == RoleDynamics::kAlternating) {
    const double got = Evaluate(task, *committed, pi1).receiver;
    if (got < ReceiverFloor(ctx) - kSolverTolerance) {
      return BestResponsePrior(task, committed->num_cols());
    }
  }
  return pi1;
}

SignalingScheme ScriptedAgent::RespondScheme(const PersuasionContext& ctx,
                                             const SignalingScheme& announced) {
  Require(AgentRole::kSender);
  const PersuasionTask& task = *ctx.task;
  if (spec_.strategy != Strategy::kSpe) return ProposeScheme(ctx);
  const double target = ObedientPayoffs(task, announced).receiver;
  auto meet = OptimizeObedient(task, {1.0, 0.0, {}, target});
  if (meet && ObedientPayoffs(task, *meet).sender >= SenderFloor(ctx) - kSolverTolerance) {
    return *meet;
  }
  return ProposeScheme(ctx);
}

double ScriptedAgent::ResponderFloor(const BargainingContext& ctx, bool for_self) {
  const BargainingFrontier& f = *ctx.frontier;
  if (ctx.one_shot || (ctx.dynamics == RoleDynamics::kFixed && !ctx.own_discount)) return 0.0;
  const double own = ctx.own_discount.value_or(spec_.patience);
  const double other = ctx.other_discount.value_or(spec_.opponent_patience);
  if (ctx.own_discount) {
    // Discounted alternating offers: closed-form stationary shares.
    const double pie = f.shares(f.lo).proposer + f.shares(f.lo).responder;
    if (for_self) {
      return own * RubinsteinSplit({pie, own, other}).proposer;
    }
    return other * RubinsteinSplit({pie, other, own}).proposer;
  }
  const auto [v_self, v_other] = BargainingAlternatingValues(f, own, other);
  return for_self ? own * v_self : other * v_other;
}

double ScriptedAgent::ProposeSplit(const BargainingContext& ctx) {
  Require(AgentRole::kBargainer);
  const BargainingFrontier& f = *ctx.frontier;
  switch (spec_.strategy) {
    case Strategy::kGreedyUltimatum:
      return f.hi;
    case Strategy::kNashFair: {
      BargainingGame game;
      game.feasibility = ParametricFrontier{[&f](double x) {
                                              const Split s = f.shares(x);
                                              return PayoffPair{s.proposer, s.responder};
                                            },
                                            f.lo, f.hi};
      return *NashSolution(game).parameter;
    }
    default:
      break;
  }
  const double floor = ResponderFloor(ctx, /*for_self=*/false);
  if (floor <= 0.0 && !spec_.accept_at_indifference && f.granularity > 0.0) {
    // A responder that rejects at zero must be left one unit.
    return std::max(f.lo, f.hi - f.granularity);
  }
  return LargestOfferMeeting(f, floor);
}

bool ScriptedAgent::RespondSplit(const BargainingContext& ctx, double offer) {
  Require(AgentRole::kBargainer);
  const BargainingFrontier& f = *ctx.frontier;
  const double share = f.shares(offer).responder;
  double floor = 0.0;
  if (spec_.strategy == Strategy::kNashFair) {
    BargainingGame game;
    game.feasibility = ParametricFrontier{[&f](double x) {
                                            const Split s = f.shares(x);
                                            return PayoffPair{s.proposer, s.responder};
                                          },
                                          f.lo, f.hi};
    floor = NashSolution(game).payoffs.receiver;
  } else if (spec_.strategy == Strategy::kSpe) {
    floor = ResponderFloor(ctx, /*for_self=*/true);
  }
  if (floor <= 0.0 && !spec_.accept_at_indifference) return share > 0.0;
  return share >= floor - kSolverTolerance;
}

std::unique_ptr<ScriptedAgent> MakeScriptedAgent(const ScriptedAgentSpec& spec) {
  return std::make_unique<ScriptedAgent>(spec);
}

}  // namespace infobargain
