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

#include "infobargain/engine.h"

#include <cmath>
#include <utility>

#include "infobargain/persuasion.h"
#include "infobargain/scenario_io.h"

namespace infobargain {
namespace {

constexpr std::uint64_t kRealizationStream = 0x5EA11CA7ULL;

nlohmann::json SchemeJson(const SignalingScheme& s) { return MatrixToJson(s.matrix()); }
nlohmann::json RuleJson(const ActionRule& r) { return MatrixToJson(r.matrix()); }

void CheckScheme(const PersuasionTask& task, const SignalingScheme& s, const char* who) {
  if (s.num_rows() != task.num_states() || s.num_cols() != task.num_actions()) {
    throw ProtocolError(std::string(who) + " returned a " + std::to_string(s.num_rows()) +
                        "x" + std::to_string(s.num_cols()) + " scheme");
  }
}

void CheckRule(const PersuasionTask& task, const ActionRule& r, const char* who) {
  if (r.num_rows() != task.num_actions() || r.num_cols() != task.num_actions()) {
    throw ProtocolError(std::string(who) + " returned a " + std::to_string(r.num_rows()) +
                        "x" + std::to_string(r.num_cols()) + " rule");
  }
}

int ResolveFirstProposer(FirstProposer first, Rng& rng) {
  switch (first) {
    case FirstProposer::kAgent0:
      return 0;
    case FirstProposer::kAgent1:
      return 1;
    case FirstProposer::kCoinFlip:
      return rng.Bernoulli(0.5) ? 1 : 0;
  }
  return 0;
}

std::string FirstProposerName(FirstProposer first) {
  switch (first) {
    case FirstProposer::kAgent0:
      return "agent0";
    case FirstProposer::kAgent1:
      return "agent1";
    case FirstProposer::kCoinFlip:
      return "coin_flip";
  }
  return "agent0";
}

// Stop after a completed round? Forced at the cap, otherwise Bernoulli(p).
bool StopAfterRound(const StoppingRule& stopping, int rounds_done, Rng& rng) {
  if (rounds_done >= stopping.max_timestep) return true;
  return rng.Bernoulli(stopping.stop_probability);
}

// True when rule matches pi1 on every reachable signal.
bool MatchesPosteriorBestResponse(const PersuasionTask& task, const SignalingScheme& scheme,
                                  const ActionRule& rule) {
  const ActionRule pi1 = BestResponsePosterior(task, scheme);
  for (std::size_t sig = 0; sig < scheme.num_cols(); ++sig) {
    if (ComputePosterior(task, scheme, sig).signal_unreachable) continue;
    for (std::size_t a = 0; a < rule.num_cols(); ++a) {
      if (std::abs(rule(sig, a) - pi1(sig, a)) > kSolverTolerance) return false;
    }
  }
  return true;
}

// Records an abort and classifies the error.
void Abort(GameTrace& trace, int t, int actor, const Error& e) {
  const bool failure = dynamic_cast<const AgentFailure*>(&e) != nullptr;
  trace.Add(t, failure ? EventKind::kAgentFailure : EventKind::kProtocolViolation, actor,
            {{"message", e.what()}});
  trace.aborted = true;
  trace.failure = std::string(failure ? "agent_failure: " : "protocol_violation: ") + e.what();
}

void SingleRealization(const PersuasionTask& task, const SignalingScheme& scheme,
                       const ActionRule& rule, Rng& rng, GameTrace& trace) {
  const std::size_t s = rng.Categorical(task.prior);
  trace.Add(0, EventKind::kStateSampled, kEnvironment, {{"state", s}});
  const std::size_t sig = rng.Categorical(scheme.row(s));
  trace.Add(0, EventKind::kSignalSent, 0, {{"signal", sig}});
  const std::size_t a = rng.Categorical(rule.row(sig));
  trace.Add(0, EventKind::kActionTaken, 1,
            {{"action", a}, {"rule_row", std::vector<double>(rule.row(sig).begin(),
                                                             rule.row(sig).end())}});
  const double ri = task.reward_sender(s, a);
  const double rj = task.reward_receiver(s, a);
  trace.Add(0, EventKind::kRewards, kEnvironment, {{"sender", ri}, {"receiver", rj}});
  trace.realized_means = std::array<double, 2>{ri, rj};
}

GameTrace RunSingleShot(const PersuasionTask& task, PersuasionAgent& sender,
                        PersuasionAgent& receiver, std::uint64_t seed, bool commit) {
  RequireValid(task);
  GameTrace trace;
  trace.procedure = commit ? "one_shot_persuasion" : "cheap_talk";
  trace.seed = seed;
  trace.Add(0, EventKind::kRunStart, kEnvironment,
            {{"procedure", trace.procedure}, {"task", task.label},
             {"sender", sender.Name()}, {"receiver", receiver.Name()}});
  Rng rng(seed);
  PersuasionContext ctx;
  ctx.task = &task;
  ctx.procedure = commit ? Procedure::kOneShotPersuasion : Procedure::kCheapTalk;
  ctx.stopping = {1.0, 1};
  ctx.record = [&trace](const nlohmann::json& j) {
    trace.Add(0, EventKind::kAgentExchange, j.value("agent", 0), j);
  };
  trace.final_proposer = 0;
  std::optional<SignalingScheme> scheme;
  std::optional<ActionRule> rule;
  int actor = 0;
  try {
    ctx.agent_id = 0;
    ctx.role = Role::kSender;
    ctx.position = Position::kProposer;
    scheme = sender.ProposeScheme(ctx);
    CheckScheme(task, *scheme, "sender");
    trace.Add(0, EventKind::kSchemeDecided, 0,
              {{"scheme", SchemeJson(*scheme)}, {"private", !commit}});
    if (commit) trace.Add(0, EventKind::kSchemeCommitted, 0, {{"scheme", SchemeJson(*scheme)}});
    actor = 1;
    ctx.agent_id = 1;
    ctx.role = Role::kReceiver;
    ctx.position = Position::kResponder;
    rule = receiver.RespondRule(ctx, commit ? scheme : std::nullopt);
    CheckRule(task, *rule, "receiver");
    trace.Add(0, EventKind::kRuleDeclared, 1, {{"rule", RuleJson(*rule)}});
  } catch (const Error& e) {
    Abort(trace, 0, actor, e);
  }
  if (!trace.aborted) {
    SingleRealization(task, *scheme, *rule, rng, trace);
    const PayoffPair expected = Evaluate(task, *scheme, *rule);
    trace.final_payoffs = {expected.sender, expected.receiver};
  } else {
    const PayoffPair d = Evaluate(task, BabblingScheme(task), BestResponsePrior(task));
    trace.final_payoffs = {d.sender, d.receiver};
  }
  trace.Add(0, EventKind::kRunEnd, kEnvironment);
  return trace;
}

}  // namespace

std::string ProcedureName(Procedure procedure) {
  switch (procedure) {
    case Procedure::kOneShotPersuasion:
      return "one_shot_persuasion";
    case Procedure::kCheapTalk:
      return "cheap_talk";
    case Procedure::kLongTermPersuasion:
      return "long_term_persuasion";
    case Procedure::kBargaining:
      return "bargaining";
    case Procedure::kRubinstein:
      return "rubinstein";
  }
  return "unknown";
}

void StoppingRule::Validate() const {
  if (!(stop_probability >= 0.0 && stop_probability <= 1.0)) {
    throw ValidationError("stop probability must lie in [0, 1]");
  }
  if (max_timestep < 1) throw ValidationError("timestep cap must be at least 1");
}

int SampleStopTime(const StoppingRule& stopping, Rng& rng) {
  stopping.Validate();
  int rounds = 1;
  while (!StopAfterRound(stopping, rounds, rng)) ++rounds;
  return rounds;
}

int SampleStopTime(const StoppingRule& stopping, std::uint64_t seed) {
  Rng rng(seed);
  return SampleStopTime(stopping, rng);
}

BargainingFrontier UnboundedFrontier(double pie) {
  if (!(pie > 0.0)) throw ValidationError("pie must be positive");
  BargainingFrontier f;
  f.name = "unbounded";
  f.lo = 0.0;
  f.hi = 1.0;
  f.shares = [pie](double x) {
    const double p = pie * x;
    return Split{p, pie - p};
  };
  return f;
}

BargainingFrontier BoundedFrontier() {
  BargainingFrontier f;
  f.name = "bounded";
  f.lo = 0.0;
  f.hi = 0.5;
  f.shares = [](double x) { return Split{(1.0 + 2.0 * x) / 3.0, (1.0 - 2.0 * x) / 3.0}; };
  return f;
}

GameTrace RunOneShotPersuasion(const PersuasionTask& task, PersuasionAgent& sender,
                               PersuasionAgent& receiver, std::uint64_t seed) {
  return RunSingleShot(task, sender, receiver, seed, /*commit=*/true);
}

GameTrace RunCheapTalk(const PersuasionTask& task, PersuasionAgent& sender,
                       PersuasionAgent& receiver, std::uint64_t seed) {
  return RunSingleShot(task, sender, receiver, seed, /*commit=*/false);
}

GameTrace RunLongTerm(const PersuasionTask& task, PersuasionAgent& agent0,
                      PersuasionAgent& agent1, const LongTermOptions& options,
                      std::uint64_t seed) {
  RequireValid(task);
  options.stopping.Validate();
  GameTrace trace;
  trace.procedure = "long_term_persuasion";
  trace.seed = seed;
  trace.Add(0, EventKind::kRunStart, kEnvironment,
            {{"procedure", trace.procedure},
             {"task", task.label},
             {"dynamics", options.dynamics == RoleDynamics::kFixed ? "fixed" : "alternating"},
             {"first_proposer", FirstProposerName(options.first_proposer)},
             {"stop_probability", options.stopping.stop_probability},
             {"max_timestep", options.stopping.max_timestep},
             {"agent0", agent0.Name()},
             {"agent1", agent1.Name()}});
  Rng rng(seed);
  int proposer = ResolveFirstProposer(options.first_proposer, rng);
  trace.Add(0, EventKind::kProposerAssigned, kEnvironment, {{"proposer", proposer}});

  PersuasionAgent* agents[2] = {&agent0, &agent1};
  std::optional<SignalingScheme> final_scheme;
  std::optional<ActionRule> final_rule;
  int t = 0;
  for (;; ++t) {
    const int responder = 1 - proposer;
    auto context = [&](int id) {
      PersuasionContext ctx;
      ctx.task = &task;
      ctx.procedure = Procedure::kLongTermPersuasion;
      ctx.agent_id = id;
      ctx.role = id == 0 ? Role::kSender : Role::kReceiver;
      ctx.position = id == proposer ? Position::kProposer : Position::kResponder;
      ctx.timestep = t;
      ctx.dynamics = options.dynamics;
      ctx.stopping = options.stopping;
      ctx.scenario = options.scenario;
      ctx.value_setting = options.value_setting;
      ctx.record = [&trace, t, id](const nlohmann::json& j) {
        trace.Add(t, EventKind::kAgentExchange, id, j);
      };
      return ctx;
    };
    bool consensus = false;
    int actor = proposer;
    try {
      if (proposer == 0) {
        const SignalingScheme phi = agents[0]->ProposeScheme(context(0));
        CheckScheme(task, phi, "sender");
        trace.Add(t, EventKind::kSchemeCommitted, 0, {{"scheme", SchemeJson(phi)}});
        final_scheme = phi;
        actor = 1;
        const ActionRule pi = agents[1]->RespondRule(context(1), phi);
        CheckRule(task, pi, "receiver");
        consensus = MatchesPosteriorBestResponse(task, phi, pi);
        trace.Add(t, EventKind::kRuleDeclared, 1,
                  {{"rule", RuleJson(pi)}, {"posterior_best_response", consensus}});
        final_rule = pi;
      } else {
        const SignalingScheme expected = agents[1]->ProposeExpectation(context(1));
        CheckScheme(task, expected, "receiver");
        const double target =
            Evaluate(task, expected, BestResponsePosterior(task, expected)).receiver;
        trace.Add(t, EventKind::kExpectationAnnounced, 1,
                  {{"scheme", SchemeJson(expected)}, {"receiver_payoff", target}});
        actor = 0;
        const SignalingScheme phi = agents[0]->RespondScheme(context(0), expected);
        CheckScheme(task, phi, "sender");
        ActionRule pi1 = BestResponsePosterior(task, phi);
        const double achieved = Evaluate(task, phi, pi1).receiver;
        consensus = achieved >= target - kSolverTolerance;
        trace.Add(t, EventKind::kSchemeResponded, 0,
                  {{"scheme", SchemeJson(phi)}, {"receiver_payoff", achieved}});
        final_scheme = phi;
        final_rule = consensus ? pi1 : BestResponsePrior(task);
        trace.Add(t, EventKind::kRuleDeclared, 1,
                  {{"rule", RuleJson(*final_rule)}, {"posterior_best_response", consensus}});
      }
    } catch (const Error& e) {
      Abort(trace, t, actor, e);
      trace.final_proposer = proposer;
      break;
    }
    if (consensus) {
      trace.consensus_reached = true;
      trace.deal_timestep = t + 1;
      trace.final_proposer = proposer;
      trace.Add(t, EventKind::kConsensus, kEnvironment,
                {{"proposer", proposer}, {"deal_timestep", t + 1}});
      break;
    }
    if (StopAfterRound(options.stopping, t + 1, rng)) {
      trace.final_proposer = proposer;
      trace.Add(t, EventKind::kStop, kEnvironment, {{"rounds", t + 1}});
      break;
    }
    if (options.dynamics == RoleDynamics::kAlternating) {
      trace.Add(t, EventKind::kRoleSwap, kEnvironment,
                {{"proposer", responder}, {"responder", proposer}});
      proposer = responder;
    }
  }

  if (!final_scheme || !final_rule) {
    final_scheme = BabblingScheme(task);
    final_rule = BestResponsePrior(task);
  }
  const PayoffPair expected = Evaluate(task, *final_scheme, *final_rule);
  trace.final_payoffs = {expected.sender, expected.receiver};
  if (!trace.aborted && options.realization_steps > 0) {
    RealizationResult real = Realize(task, *final_scheme, *final_rule, options.realization_steps,
                                     DeriveSeed(seed, kRealizationStream));
    trace.Add(t, EventKind::kRealization, kEnvironment,
              {{"steps", options.realization_steps},
               {"scheme", SchemeJson(*final_scheme)},
               {"rule", RuleJson(*final_rule)},
               {"mean", {real.mean.sender, real.mean.receiver}},
               {"standard_error", {real.standard_error.sender, real.standard_error.receiver}}});
    trace.realization = std::move(real.steps);
    trace.realized_means = std::array<double, 2>{real.mean.sender, real.mean.receiver};
  }
  trace.Add(t, EventKind::kRunEnd, kEnvironment,
            {{"scheme", SchemeJson(*final_scheme)}, {"rule", RuleJson(*final_rule)}});
  return trace;
}

namespace {

struct OfferLoop {
  const BargainingFrontier* frontier;
  Procedure procedure;
  RoleDynamics dynamics;
  StoppingRule stopping;
  bool one_shot;
  std::optional<double> discount[2];
  std::string scenario;
  std::string value_setting;
};

GameTrace RunOffers(const OfferLoop& loop, BargainingAgent& agent0, BargainingAgent& agent1,
                    FirstProposer first, std::uint64_t seed, nlohmann::json start_payload) {
  loop.stopping.Validate();
  const BargainingFrontier& f = *loop.frontier;
  GameTrace trace;
  trace.procedure = ProcedureName(loop.procedure);
  trace.seed = seed;
  start_payload["procedure"] = trace.procedure;
  start_payload["frontier"] = f.name;
  start_payload["agent0"] = agent0.Name();
  start_payload["agent1"] = agent1.Name();
  trace.Add(0, EventKind::kRunStart, kEnvironment, std::move(start_payload));
  Rng rng(seed);
  int proposer = ResolveFirstProposer(first, rng);
  trace.Add(0, EventKind::kProposerAssigned, kEnvironment, {{"proposer", proposer}});
  BargainingAgent* agents[2] = {&agent0, &agent1};
  int t = 0;
  for (;; ++t) {
    const int responder = 1 - proposer;
    auto context = [&](int id) {
      BargainingContext ctx;
      ctx.frontier = &f;
      ctx.procedure = loop.procedure;
      ctx.agent_id = id;
      ctx.position = id == proposer ? Position::kProposer : Position::kResponder;
      ctx.timestep = t;
      ctx.dynamics = loop.dynamics;
      ctx.stopping = loop.stopping;
      ctx.one_shot = loop.one_shot;
      ctx.own_discount = loop.discount[id];
      ctx.other_discount = loop.discount[1 - id];
      ctx.scenario = loop.scenario;
      ctx.value_setting = loop.value_setting;
      ctx.record = [&trace, t, id](const nlohmann::json& j) {
        trace.Add(t, EventKind::kAgentExchange, id, j);
      };
      return ctx;
    };
    int actor = proposer;
    bool accepted = false;
    Split shares;
    try {
      const double x = agents[proposer]->ProposeSplit(context(proposer));
      if (!std::isfinite(x) || x < f.lo - kProbabilityTolerance ||
          x > f.hi + kProbabilityTolerance) {
        throw ProtocolError("offer " + std::to_string(x) + " outside [" +
                            std::to_string(f.lo) + ", " + std::to_string(f.hi) + "]");
      }
      shares = f.shares(x);
      trace.Add(t, EventKind::kOffer, proposer,
                {{"x", x}, {"proposer_share", shares.proposer},
                 {"responder_share", shares.responder}});
      actor = responder;
      accepted = agents[responder]->RespondSplit(context(responder), x);
      trace.Add(t, EventKind::kOfferResponse, responder, {{"accept", accepted}});
    } catch (const Error& e) {
      Abort(trace, t, actor, e);
      trace.final_proposer = proposer;
      break;
    }
    if (accepted) {
      const double dp = loop.discount[proposer] ? std::pow(*loop.discount[proposer], t) : 1.0;
      const double dr = loop.discount[responder] ? std::pow(*loop.discount[responder], t) : 1.0;
      trace.final_payoffs[static_cast<std::size_t>(proposer)] = dp * shares.proposer;
      trace.final_payoffs[static_cast<std::size_t>(responder)] = dr * shares.responder;
      trace.consensus_reached = true;
      trace.deal_timestep = t + 1;
      trace.final_proposer = proposer;
      trace.Add(t, EventKind::kConsensus, kEnvironment,
                {{"proposer", proposer}, {"deal_timestep", t + 1}});
      break;
    }
    if (loop.one_shot || StopAfterRound(loop.stopping, t + 1, rng)) {
      trace.final_proposer = proposer;
      trace.Add(t, EventKind::kStop, kEnvironment, {{"rounds", t + 1}});
      break;
    }
    if (loop.dynamics == RoleDynamics::kAlternating) {
      trace.Add(t, EventKind::kRoleSwap, kEnvironment,
                {{"proposer", responder}, {"responder", proposer}});
      proposer = responder;
    }
  }
  trace.Add(t, EventKind::kRunEnd, kEnvironment);
  return trace;
}

}  // namespace

GameTrace RunBargaining(const BargainingFrontier& frontier, BargainingAgent& agent0,
                        BargainingAgent& agent1, const BargainingOptions& options,
                        std::uint64_t seed) {
  if (!frontier.shares) throw ValidationError("frontier has no share function");
  OfferLoop loop{&frontier,          Procedure::kBargaining, options.dynamics,
                 options.stopping,   options.one_shot,       {},
                 options.scenario,   options.value_setting};
  if (options.one_shot) loop.stopping = {1.0, 1};
  return RunOffers(loop, agent0, agent1, options.first_proposer, seed,
                   {{"one_shot", options.one_shot},
                    {"dynamics", options.dynamics == RoleDynamics::kFixed ? "fixed"
                                                                          : "alternating"}});
}

GameTrace RunRubinstein(const RubinsteinSpec& spec, BargainingAgent& agent0,
                        BargainingAgent& agent1, const StoppingRule& stopping,
                        std::uint64_t seed) {
  spec.Validate();
  const BargainingFrontier frontier = UnboundedFrontier(spec.pie);
  OfferLoop loop{&frontier, Procedure::kRubinstein, RoleDynamics::kAlternating,
                 stopping,  false,                  {spec.delta_1, spec.delta_2},
                 "splitting_coins", "unbounded"};
  return RunOffers(loop, agent0, agent1, FirstProposer::kAgent0, seed,
                   {{"pie", spec.pie}, {"delta", {spec.delta_1, spec.delta_2}}});
}

RealizationResult Realize(const PersuasionTask& task, const SignalingScheme& scheme,
                          const ActionRule& rule, std::size_t n, std::uint64_t seed) {
  RequireValid(task);
  if (n < 1) throw ValidationError("realization needs at least one step");
  if (scheme.num_rows() != task.num_states() || rule.num_rows() != scheme.num_cols() ||
      rule.num_cols() != task.num_actions()) {
    throw ShapeError("profile does not match task");
  }
  Rng rng(seed);
  RealizationResult out;
  out.steps.resize(n);
  double sum_i = 0.0, sum_j = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    RealizationStep& st = out.steps[k];
    st.state = static_cast<std::uint32_t>(rng.Categorical(task.prior));
    st.signal = static_cast<std::uint32_t>(rng.Categorical(scheme.row(st.state)));
    st.action = static_cast<std::uint32_t>(rng.Categorical(rule.row(st.signal)));
    st.reward_sender = task.reward_sender(st.state, st.action);
    st.reward_receiver = task.reward_receiver(st.state, st.action);
    sum_i += st.reward_sender;
    sum_j += st.reward_receiver;
  }
  const double dn = static_cast<double>(n);
  out.mean = {sum_i / dn, sum_j / dn};
  if (n > 1) {
    double ss_i = 0.0, ss_j = 0.0;
    for (const auto& st : out.steps) {
      ss_i += (st.reward_sender - out.mean.sender) * (st.reward_sender - out.mean.sender);
      ss_j += (st.reward_receiver - out.mean.receiver) *
              (st.reward_receiver - out.mean.receiver);
    }
    out.standard_error = {std::sqrt(ss_i / (dn - 1.0) / dn), std::sqrt(ss_j / (dn - 1.0) / dn)};
  }
  return out;
}

}  // namespace infobargain
