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

#include "infobargain/trace.h"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace infobargain {
namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 21> kNames = {{
    {EventKind::kRunStart, "run_start"},
    {EventKind::kProposerAssigned, "proposer_assigned"},
    {EventKind::kSchemeDecided, "scheme_decided"},
    {EventKind::kSchemeCommitted, "scheme_committed"},
    {EventKind::kExpectationAnnounced, "expectation_announced"},
    {EventKind::kRuleDeclared, "rule_declared"},
    {EventKind::kSchemeResponded, "scheme_responded"},
    {EventKind::kStateSampled, "state_sampled"},
    {EventKind::kSignalSent, "signal_sent"},
    {EventKind::kActionTaken, "action_taken"},
    {EventKind::kRewards, "rewards"},
    {EventKind::kOffer, "offer"},
    {EventKind::kOfferResponse, "offer_response"},
    {EventKind::kConsensus, "consensus"},
    {EventKind::kRoleSwap, "role_swap"},
    {EventKind::kStop, "stop"},
    {EventKind::kAgentExchange, "agent_exchange"},
    {EventKind::kProtocolViolation, "protocol_violation"},
    {EventKind::kAgentFailure, "agent_failure"},
    {EventKind::kRealization, "realization"},
    {EventKind::kRunEnd, "run_end"},
}};

constexpr std::string_view kStepName = "realization_step";

nlohmann::json Line(int t, std::string_view kind, int actor, nlohmann::json payload) {
  nlohmann::json line;
  line["t"] = t;
  line["kind"] = kind;
  line["actor"] = actor;
  line["payload"] = std::move(payload);
  return line;
}

}  // namespace

std::string_view EventKindName(EventKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

EventKind EventKindFromName(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ParseError("unknown trace event kind '" + std::string(name) + "'");
}

void GameTrace::Add(int timestep, EventKind kind, int actor, nlohmann::json payload) {
  events.push_back({timestep, kind, actor, std::move(payload)});
}

std::optional<double> GameTrace::FinalProposerPayoff() const {
  if (!final_proposer) return std::nullopt;
  return final_payoffs[static_cast<std::size_t>(*final_proposer)];
}

std::vector<const TraceEvent*> GameTrace::EventsOf(EventKind kind) const {
  std::vector<const TraceEvent*> out;
  for (const auto& e : events) {
    if (e.kind == kind) out.push_back(&e);
  }
  return out;
}

nlohmann::json GameTrace::SummaryJson() const {
  nlohmann::json s;
  s["procedure"] = procedure;
  s["seed"] = seed;
  s["consensus"] = consensus_reached;
  s["deal_timestep"] = deal_timestep ? nlohmann::json(*deal_timestep) : nlohmann::json();
  s["final_proposer"] = final_proposer ? nlohmann::json(*final_proposer) : nlohmann::json();
  s["final_payoffs"] = final_payoffs;
  s["realized_means"] = realized_means ? nlohmann::json(*realized_means) : nlohmann::json();
  s["aborted"] = aborted;
  s["failure"] = failure;
  return s;
}

void WriteTrace(std::ostream& out, const GameTrace& trace) {
  bool wrote_end = false;
  for (const auto& e : trace.events) {
    if (e.kind == EventKind::kRunEnd) {
      nlohmann::json payload = e.payload;
      payload.update(trace.SummaryJson());
      out << Line(e.timestep, EventKindName(e.kind), e.actor, payload).dump() << "\n";
      wrote_end = true;
      continue;
    }
    out << Line(e.timestep, EventKindName(e.kind), e.actor, e.payload).dump() << "\n";
    if (e.kind == EventKind::kRealization) {
      for (std::size_t k = 0; k < trace.realization.size(); ++k) {
        const auto& st = trace.realization[k];
        nlohmann::json p;
        p["s"] = st.state;
        p["sigma"] = st.signal;
        p["a"] = st.action;
        p["r"] = {st.reward_sender, st.reward_receiver};
        out << Line(static_cast<int>(k), kStepName, kEnvironment, std::move(p)).dump()
            << "\n";
      }
    }
  }
  if (!wrote_end) {
    out << Line(0, EventKindName(EventKind::kRunEnd), kEnvironment, trace.SummaryJson())
               .dump()
        << "\n";
  }
}

std::string TraceToString(const GameTrace& trace) {
  std::ostringstream out;
  WriteTrace(out, trace);
  return out.str();
}

GameTrace ReadTrace(std::istream& in) {
  GameTrace trace;
  std::string text;
  std::size_t line_no = 0;
  bool saw_end = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    nlohmann::json line;
    try {
      line = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!line.is_object() || !line.contains("kind") || !line.contains("payload")) {
      throw ParseError("trace line " + std::to_string(line_no) + " lacks kind/payload");
    }
    const std::string kind = line.at("kind").get<std::string>();
    const nlohmann::json& p = line.at("payload");
    if (kind == kStepName) {
      RealizationStep st;
      st.state = p.at("s").get<std::uint32_t>();
      st.signal = p.at("sigma").get<std::uint32_t>();
      st.action = p.at("a").get<std::uint32_t>();
      st.reward_sender = p.at("r").at(0).get<double>();
      st.reward_receiver = p.at("r").at(1).get<double>();
      trace.realization.push_back(st);
      continue;
    }
    TraceEvent e;
    e.timestep = line.value("t", 0);
    e.kind = EventKindFromName(kind);
    e.actor = line.value("actor", kEnvironment);
    e.payload = p;
    if (e.kind == EventKind::kRunEnd) {
      saw_end = true;
      trace.procedure = p.value("procedure", std::string());
      trace.seed = p.value("seed", std::uint64_t{0});
      trace.consensus_reached = p.value("consensus", false);
      if (p.contains("deal_timestep") && !p.at("deal_timestep").is_null()) {
        trace.deal_timestep = p.at("deal_timestep").get<int>();
      }
      if (p.contains("final_proposer") && !p.at("final_proposer").is_null()) {
        trace.final_proposer = p.at("final_proposer").get<int>();
      }
      trace.final_payoffs = p.at("final_payoffs").get<std::array<double, 2>>();
      if (p.contains("realized_means") && !p.at("realized_means").is_null()) {
        trace.realized_means = p.at("realized_means").get<std::array<double, 2>>();
      }
      trace.aborted = p.value("aborted", false);
      trace.failure = p.value("failure", std::string());
      // Keep only the engine-supplied part of the payload in the event.
      for (const char* key : {"procedure", "seed", "consensus", "deal_timestep",
                              "final_proposer", "final_payoffs", "realized_means",
                              "aborted", "failure"}) {
        e.payload.erase(key);
      }
    }
    trace.events.push_back(std::move(e));
  }
  if (!saw_end) throw ParseError("trace has no run_end record");
  return trace;
}

}  // namespace infobargain
