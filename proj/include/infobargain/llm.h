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

#ifndef INFOBARGAIN_LLM_H_
#define INFOBARGAIN_LLM_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "infobargain/engine.h"
#include "json.hpp"

namespace infobargain {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
  bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
  std::string model;
  std::string temperature;  // pass-through; empty means provider default
  std::vector<ChatMessage> messages;
  int agent_id = 0;
};

nlohmann::json MessagesToJson(const std::vector<ChatMessage>& messages);

// Chat-completion transport. Complete() throws TransportError on failure.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual std::string Complete(const ChatRequest& request) = 0;
};

// Offline backend: either a fixed list of replies served in order, or a
// responder function. Running out of scripted replies is a transport error.
class MockChatBackend : public ChatBackend {
 public:
  using Responder = std::function<std::string(const ChatRequest&)>;
  explicit MockChatBackend(std::vector<std::string> replies);
  explicit MockChatBackend(Responder responder);
  std::string Complete(const ChatRequest& request) override;
  std::size_t calls() const { return calls_; }

 private:
  std::vector<std::string> replies_;
  Responder responder_;
  std::size_t calls_ = 0;
  std::mutex mu_;
};

// Serves the replies one agent received in a recorded trace, in order.
class ReplayChatBackend : public ChatBackend {
 public:
  ReplayChatBackend(const GameTrace& trace, int agent_id);
  std::string Complete(const ChatRequest& request) override;
  std::size_t remaining() const { return replies_.size() - next_; }

 private:
  std::vector<std::string> replies_;
  std::size_t next_ = 0;
  std::mutex mu_;
};

struct HttpBackendConfig {
  // Full URL of an OpenAI-compatible chat-completions endpoint.
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string api_key_env = "INFOBARGAIN_API_KEY";
  int timeout_seconds = 120;
  // Minimum spacing between requests across every live backend.
  std::chrono::milliseconds min_interval{0};
};

class HttpChatBackend : public ChatBackend {
 public:
  explicit HttpChatBackend(HttpBackendConfig config);
  std::string Complete(const ChatRequest& request) override;

 private:
  HttpBackendConfig config_;
  std::string scheme_host_;
  std::string path_;
};

struct RetryPolicy {
  int transport_retries = 2;  // extra attempts after a transport error
  int reprompts = 2;          // extra attempts after an unparseable reply
};

struct Decision {
  std::string analysis;
  std::vector<double> values;
};

// First balanced {...} object with both "Analysis" and "Decision" keys,
// tolerating surrounding prose and common JSON slips. Throws ParseError
// when none is found and ValidationError (with the index) for an entry
// outside [0, 1] when probabilities is set, or on an arity mismatch.
Decision ParseDecision(const std::string& text,
                       std::optional<std::size_t> expected_arity = std::nullopt,
                       bool probabilities = true);

// Canonical reply carrying the decision, as the template asks for.
std::string RenderDecision(const Decision& decision);

// Shortest decimal text that reads back to the same double.
std::string FormatNumber(double value);

// What a prompt needs to know about the turn.
struct PromptContext {
  const PersuasionTask* task = nullptr;          // persuasion procedures
  const BargainingFrontier* frontier = nullptr;  // bargaining procedures
  Procedure procedure = Procedure::kLongTermPersuasion;
  int agent_id = 0;
  Role role = Role::kSender;
  Position position = Position::kProposer;
  int timestep = 0;
  RoleDynamics dynamics = RoleDynamics::kAlternating;
  StoppingRule stopping;
  bool coin_flip = true;
  bool one_shot = false;  // bargaining ultimatum
  std::string scenario = "math_baseline";
  std::string value_setting = "bounded";
  std::optional<double> own_discount;
  std::optional<double> other_discount;
  // The proposer's decision, shown to a responder.
  std::optional<std::vector<double>> proposal;
};

// Self-awareness, task description (scenario, reward enumeration, expected
// payoff expansion), procedure, format and identity as one system message,
// then the per-turn user message. Deterministic.
std::vector<ChatMessage> BuildPrompt(const PromptContext& context);

// Number of decision entries the turn expects.
std::size_t ExpectedArity(const PromptContext& context);

struct LlmAgentConfig {
  std::string model = "gpt-4o";
  std::string temperature;
  RetryPolicy retry;
  bool coin_flip = true;  // shown in the procedure text
};

// Agent driven by a chat backend. Calls are serialized per agent. Every
// exchange is logged through the context recorder.
class LlmAgent final : public PersuasionAgent, public BargainingAgent {
 public:
  LlmAgent(LlmAgentConfig config, std::shared_ptr<ChatBackend> backend);

  std::string Name() const override;

  SignalingScheme ProposeScheme(const PersuasionContext& ctx) override;
  SignalingScheme ProposeExpectation(const PersuasionContext& ctx) override;
  ActionRule RespondRule(const PersuasionContext& ctx,
                         const std::optional<SignalingScheme>& committed) override;
  SignalingScheme RespondScheme(const PersuasionContext& ctx,
                                const SignalingScheme& announced) override;

  double ProposeSplit(const BargainingContext& ctx) override;
  bool RespondSplit(const BargainingContext& ctx, double offer) override;

 private:
  // Prompt, send, parse, re-prompt. Throws AgentFailure when the transport
  // gives up and ProtocolError when replies stay unparseable.
  Decision Ask(const PromptContext& prompt, const ExchangeRecorder& record, bool probabilities);

  LlmAgentConfig config_;
  std::shared_ptr<ChatBackend> backend_;
  std::mutex mu_;
};

// Decision vector <-> scheme or rule. Binary tasks use the second-column
// probabilities per row; larger ones the full row-major matrix.
std::vector<double> SchemeToDecision(const SignalingScheme& scheme);
std::vector<double> RuleToDecision(const ActionRule& rule);
SignalingScheme SchemeFromDecision(const std::vector<double>& values, std::size_t rows,
                                   std::size_t cols);
ActionRule RuleFromDecision(const std::vector<double>& values, std::size_t rows,
                            std::size_t cols);

}  // namespace infobargain

#endif  // INFOBARGAIN_LLM_H_
