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

#ifndef INFOBARGAIN_TRACE_H_
#define INFOBARGAIN_TRACE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infobargain/core.h"
#include "json.hpp"

namespace infobargain {

enum class EventKind {
  kRunStart,
  kProposerAssigned,
  kSchemeDecided,
  kSchemeCommitted,
  kExpectationAnnounced,
  kRuleDeclared,
  kSchemeResponded,
  kStateSampled,
  kSignalSent,
  kActionTaken,
  kRewards,
  kOffer,
  kOfferResponse,
  kConsensus,
  kRoleSwap,
  kStop,
  kAgentExchange,
  kProtocolViolation,
  kAgentFailure,
  kRealization,
  kRunEnd,
};

std::string_view EventKindName(EventKind kind);
// Throws ParseError on unknown names.
EventKind EventKindFromName(std::string_view name);

// Actor ids: 0 and 1 are agents, -1 is the environment.
inline constexpr int kEnvironment = -1;

struct TraceEvent {
  int timestep = 0;
  EventKind kind = EventKind::kRunStart;
  int actor = kEnvironment;
  nlohmann::json payload = nlohmann::json::object();
};

// One realization-stage sample, stored compactly.
struct RealizationStep {
  std::uint32_t state = 0;
  std::uint32_t signal = 0;
  std::uint32_t action = 0;
  double reward_sender = 0.0;
  double reward_receiver = 0.0;
};

struct GameTrace {
  std::string procedure;
  std::uint64_t seed = 0;
  std::vector<TraceEvent> events;
  // Emitted right after the kRealization event when serialized.
  std::vector<RealizationStep> realization;

  bool consensus_reached = false;
  std::optional<int> deal_timestep;  // 1-based bargaining round
  std::optional<int> final_proposer;  // agent id
  // Expected payoffs of the final profile, indexed by agent id.
  std::array<double, 2> final_payoffs = {0.0, 0.0};
  // Realization-stage empirical means, indexed by agent id.
  std::optional<std::array<double, 2>> realized_means;
  bool aborted = false;
  std::string failure;  // empty unless aborted

  void Add(int timestep, EventKind kind, int actor,
           nlohmann::json payload = nlohmann::json::object());
  std::optional<double> FinalProposerPayoff() const;
  // Events of one kind, in order.
  std::vector<const TraceEvent*> EventsOf(EventKind kind) const;
  nlohmann::json SummaryJson() const;
};

// Line-delimited JSON: one {"t", "kind", "actor", "payload"} object per
// event; realization steps follow the realization event; the run_end line
// carries the summary.
void WriteTrace(std::ostream& out, const GameTrace& trace);
std::string TraceToString(const GameTrace& trace);
// Throws ParseError on malformed input.
GameTrace ReadTrace(std::istream& in);

}  // namespace infobargain

#endif  // INFOBARGAIN_TRACE_H_
