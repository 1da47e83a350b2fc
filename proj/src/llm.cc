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

#include "infobargain/llm.h"

#include <cmath>
#include <cstdlib>
#include <thread>

#include "httplib.h"

namespace infobargain {

nlohmann::json MessagesToJson(const std::vector<ChatMessage>& messages) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : messages) out.push_back({{"role", m.role}, {"content", m.content}});
  return out;
}

MockChatBackend::MockChatBackend(std::vector<std::string> replies)
    : replies_(std::move(replies)) {}

MockChatBackend::MockChatBackend(Responder responder) : responder_(std::move(responder)) {}

std::string MockChatBackend::Complete(const ChatRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::size_t k = calls_++;
  if (responder_) return responder_(request);
  if (k >= replies_.size()) throw TransportError("mock backend has no reply left");
  return replies_[k];
}

ReplayChatBackend::ReplayChatBackend(const GameTrace& trace, int agent_id) {
  for (const TraceEvent* e : trace.EventsOf(EventKind::kAgentExchange)) {
    if (e->actor == agent_id && e->payload.contains("reply")) {
      replies_.push_back(e->payload.at("reply").get<std::string>());
    }
  }
}

std::string ReplayChatBackend::Complete(const ChatRequest&) {
  std::lock_guard<std::mutex> lock(mu_);
  if (next_ >= replies_.size()) throw TransportError("replay log exhausted");
  return replies_[next_++];
}

namespace {

std::mutex g_rate_mu;
std::chrono::steady_clock::time_point g_next_slot;

void WaitForSlot(std::chrono::milliseconds spacing) {
  if (spacing.count() <= 0) return;
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard<std::mutex> lock(g_rate_mu);
    const auto now = std::chrono::steady_clock::now();
    slot = std::max(now, g_next_slot);
    g_next_slot = slot + spacing;
  }
  std::this_thread::sleep_until(slot);
}

}  // namespace

HttpChatBackend::HttpChatBackend(HttpBackendConfig config) : config_(std::move(config)) {
  const auto scheme_end = config_.endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigurationError("endpoint '" + config_.endpoint + "' has no scheme");
  }
  const auto path_start = config_.endpoint.find('/', scheme_end + 3);
  scheme_host_ = config_.endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : config_.endpoint.substr(path_start);
}

std::string HttpChatBackend::Complete(const ChatRequest& request) {
  WaitForSlot(config_.min_interval);
  httplib::Client client(scheme_host_);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  nlohmann::json body = {{"model", request.model}, {"messages", MessagesToJson(request.messages)}};
  if (!request.temperature.empty()) {
    try {
      body["temperature"] = std::stod(request.temperature);
    } catch (const std::exception&) {
      throw ConfigurationError("temperature '" + request.temperature + "' is not a number");
    }
  }
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("request to " + config_.endpoint + " failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("endpoint returned HTTP " + std::to_string(res->status));
  }
  try {
    const auto doc = nlohmann::json::parse(res->body);
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("malformed completion response: ") + e.what());
  }
}

namespace {

// End of the balanced object starting at text[open], string-aware.
std::optional<std::size_t> MatchBrace(const std::string& text, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t k = open; k < text.size(); ++k) {
    const char ch = text[k];
    if (in_string) {
      if (ch == '\\') {
        ++k;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '"') {
      in_string = true;
    } else if (ch == '{') {
      ++depth;
    } else if (ch == '}') {
      if (--depth == 0) return k;
    }
  }
  return std::nullopt;
}

// Doubles stray backslashes inside strings, escapes raw control characters
// and drops trailing commas.
std::string Repair(const std::string& in) {
  std::string out;
  out.reserve(in.size() + 16);
  bool in_string = false;
  for (std::size_t k = 0; k < in.size(); ++k) {
    const char ch = in[k];
    if (in_string) {
      if (ch == '\\') {
        const char next = k + 1 < in.size() ? in[k + 1] : '\0';
        bool valid = std::string_view("\"\\/bfnrt").find(next) != std::string_view::npos &&
                     next != '\0';
        if (next == 'u') {
          valid = k + 5 < in.size();
          for (std::size_t h = k + 2; valid && h < k + 6; ++h) {
            valid = std::isxdigit(static_cast<unsigned char>(in[h])) != 0;
          }
        }
        if (valid) {
          out += ch;
          out += next;
          ++k;
        } else {
          out += "\\\\";
        }
        continue;
      }
      if (ch == '"') in_string = false;
      if (ch == '\n') {
        out += "\\n";
        continue;
      }
      if (ch == '\t') {
        out += "\\t";
        continue;
      }
      if (ch == '\r') continue;
      out += ch;
      continue;
    }
    if (ch == '"') in_string = true;
    if (ch == ',') {
      std::size_t j = k + 1;
      while (j < in.size() && std::isspace(static_cast<unsigned char>(in[j]))) ++j;
      if (j < in.size() && (in[j] == '}' || in[j] == ']')) continue;
    }
    out += ch;
  }
  return out;
}

std::optional<nlohmann::json> ParseObject(const std::string& candidate) {
  for (int pass = 0; pass < 2; ++pass) {
    try {
      auto doc = nlohmann::json::parse(pass == 0 ? candidate : Repair(candidate));
      if (doc.is_object()) return doc;
    } catch (const nlohmann::json::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace

Decision ParseDecision(const std::string& text, std::optional<std::size_t> expected_arity,
                       bool probabilities) {
  for (std::size_t open = text.find('{'); open != std::string::npos;
       open = text.find('{', open + 1)) {
    const auto close = MatchBrace(text, open);
    if (!close) continue;
    const auto doc = ParseObject(text.substr(open, *close - open + 1));
    if (!doc || !doc->contains("Analysis") || !doc->contains("Decision")) continue;
    const auto& analysis = doc->at("Analysis");
    const auto& raw = doc->at("Decision");
    Decision d;
    d.analysis = analysis.is_string() ? analysis.get<std::string>() : analysis.dump();
    if (raw.is_number()) {
      d.values.push_back(raw.get<double>());
    } else if (raw.is_array()) {
      for (std::size_t k = 0; k < raw.size(); ++k) {
        if (!raw[k].is_number()) {
          throw ValidationError("decision entry " + std::to_string(k) + " is not a number", k);
        }
        d.values.push_back(raw[k].get<double>());
      }
    } else {
      throw ParseError("\"Decision\" is neither a number nor an array");
    }
    if (expected_arity && d.values.size() != *expected_arity) {
      throw ValidationError("expected " + std::to_string(*expected_arity) +
                                " decision entries, got " + std::to_string(d.values.size()),
                            std::min(d.values.size(), *expected_arity));
    }
    for (std::size_t k = 0; k < d.values.size(); ++k) {
      const double v = d.values[k];
      if (!std::isfinite(v) || (probabilities && (v < 0.0 || v > 1.0))) {
        throw ValidationError("decision entry " + std::to_string(k) + " = " +
                                  FormatNumber(v) + " is outside [0, 1]",
                              k);
      }
    }
    return d;
  }
  throw ParseError("no JSON object with \"Analysis\" and \"Decision\" found");
}

std::string RenderDecision(const Decision& decision) {
  std::string out = "{\n    \"Analysis\": " + nlohmann::json(decision.analysis).dump() +
                    ",\n    \"Decision\": [";
  for (std::size_t k = 0; k < decision.values.size(); ++k) {
    if (k > 0) out += ", ";
    out += FormatNumber(decision.values[k]);
  }
  return out + "]\n}";
}

std::vector<double> SchemeToDecision(const SignalingScheme& scheme) {
  if (scheme.num_rows() == 2 && scheme.num_cols() == 2) {
    const auto [a, b] = scheme.BinaryParams();
    return {a, b};
  }
  return scheme.Flatten();
}

std::vector<double> RuleToDecision(const ActionRule& rule) {
  if (rule.num_rows() == 2 && rule.num_cols() == 2) {
    const auto [a, b] = rule.BinaryParams();
    return {a, b};
  }
  return rule.Flatten();
}

namespace {

Matrix DecisionMatrix(const std::vector<double>& values, std::size_t rows, std::size_t cols) {
  if (rows == 2 && cols == 2 && values.size() == 2) {
    return Matrix::FromRows({{1.0 - values[0], values[0]}, {1.0 - values[1], values[1]}});
  }
  if (values.size() != rows * cols) {
    throw ValidationError("decision has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(rows * cols));
  }
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < values.size(); ++k) m(k / cols, k % cols) = values[k];
  return m;
}

}  // namespace

SignalingScheme SchemeFromDecision(const std::vector<double>& values, std::size_t rows,
                                   std::size_t cols) {
  return SignalingScheme(DecisionMatrix(values, rows, cols));
}

ActionRule RuleFromDecision(const std::vector<double>& values, std::size_t rows,
                            std::size_t cols) {
  return ActionRule(DecisionMatrix(values, rows, cols));
}

LlmAgent::LlmAgent(LlmAgentConfig config, std::shared_ptr<ChatBackend> backend)
    : config_(std::move(config)), backend_(std::move(backend)) {
  if (!backend_) throw ConfigurationError("LLM agent needs a backend");
  if (config_.retry.transport_retries < 0 || config_.retry.reprompts < 0) {
    throw ConfigurationError("retry counts must be non-negative");
  }
}

std::string LlmAgent::Name() const { return "llm:" + config_.model; }

Decision LlmAgent::Ask(const PromptContext& prompt, const ExchangeRecorder& record,
                       bool probabilities) {
  std::lock_guard<std::mutex> lock(mu_);
  ChatRequest request{config_.model, config_.temperature, BuildPrompt(prompt), prompt.agent_id};
  const std::size_t arity = ExpectedArity(prompt);
  std::string last_error;
  for (int attempt = 0; attempt <= config_.retry.reprompts; ++attempt) {
    std::string reply;
    for (int tries = 0;; ++tries) {
      try {
        reply = backend_->Complete(request);
        break;
      } catch (const TransportError& e) {
        if (tries >= config_.retry.transport_retries) {
          throw AgentFailure(Name() + " gave up after " + std::to_string(tries + 1) +
                             " transport attempts: " + e.what());
        }
      }
    }
    nlohmann::json exchange = {{"agent", prompt.agent_id},
                               {"attempt", attempt},
                               {"messages", MessagesToJson(request.messages)},
                               {"reply", reply}};
    try {
      Decision d = ParseDecision(reply, arity, probabilities);
      exchange["decision"] = d.values;
      exchange["analysis"] = d.analysis;
      if (record) record(exchange);
      return d;
    } catch (const Error& e) {
      last_error = e.what();
      exchange["error"] = last_error;
      if (record) record(exchange);
      request.messages.push_back({"assistant", reply});
      request.messages.push_back(
          {"user", "Your reply could not be used (" + last_error +
                       "). Answer again with only the JSON object from the template."});
    }
  }
  throw ProtocolError(Name() + " produced no usable decision: " + last_error);
}

namespace {

PromptContext FromPersuasion(const PersuasionContext& ctx, bool coin_flip) {
  PromptContext p;
  p.task = ctx.task;
  p.procedure = ctx.procedure;
  p.agent_id = ctx.agent_id;
  p.role = ctx.role;
  p.position = ctx.position;
  p.timestep = ctx.timestep;
  p.dynamics = ctx.dynamics;
  p.stopping = ctx.stopping;
  p.coin_flip = coin_flip;
  p.scenario = ctx.scenario;
  p.value_setting = ctx.value_setting;
  return p;
}

PromptContext FromBargaining(const BargainingContext& ctx, bool coin_flip) {
  PromptContext p;
  p.frontier = ctx.frontier;
  p.procedure = ctx.procedure;
  p.agent_id = ctx.agent_id;
  p.position = ctx.position;
  p.timestep = ctx.timestep;
  p.dynamics = ctx.dynamics;
  p.stopping = ctx.stopping;
  p.coin_flip = coin_flip && ctx.procedure != Procedure::kRubinstein;
  p.one_shot = ctx.one_shot;
  p.scenario = ctx.scenario;
  p.value_setting = ctx.value_setting;
  p.own_discount = ctx.own_discount;
  p.other_discount = ctx.other_discount;
  return p;
}

// A decision that fails to form a scheme or rule is re-asked like a parse
// failure, so conversions run inside the retry loop via this wrapper.
template <typename Convert>
auto AskUntilValid(const std::function<Decision()>& ask, Convert convert, int attempts)
    -> decltype(convert(Decision{})) {
  std::string last;
  for (int k = 0; k < attempts; ++k) {
    const Decision d = ask();
    try {
      return convert(d);
    } catch (const ValidationError& e) {
      last = e.what();
    }
  }
  throw ProtocolError("decision does not form a valid strategy: " + last);
}

}  // namespace

SignalingScheme LlmAgent::ProposeScheme(const PersuasionContext& ctx) {
  const PromptContext p = FromPersuasion(ctx, config_.coin_flip);
  const std::size_t ns = ctx.task->num_states(), na = ctx.task->num_actions();
  return AskUntilValid([&] { return Ask(p, ctx.record, true); },
                       [&](const Decision& d) { return SchemeFromDecision(d.values, ns, na); },
                       config_.retry.reprompts + 1);
}

SignalingScheme LlmAgent::ProposeExpectation(const PersuasionContext& ctx) {
  return ProposeScheme(ctx);
}

ActionRule LlmAgent::RespondRule(const PersuasionContext& ctx,
                                 const std::optional<SignalingScheme>& committed) {
  PromptContext p = FromPersuasion(ctx, config_.coin_flip);
  if (committed) p.proposal = SchemeToDecision(*committed);
  const std::size_t na = ctx.task->num_actions();
  const std::size_t nsig = committed ? committed->num_cols() : na;
  return AskUntilValid([&] { return Ask(p, ctx.record, true); },
                       [&](const Decision& d) { return RuleFromDecision(d.values, nsig, na); },
                       config_.retry.reprompts + 1);
}

SignalingScheme LlmAgent::RespondScheme(const PersuasionContext& ctx,
                                        const SignalingScheme& announced) {
  PromptContext p = FromPersuasion(ctx, config_.coin_flip);
  p.proposal = SchemeToDecision(announced);
  const std::size_t ns = ctx.task->num_states(), na = ctx.task->num_actions();
  return AskUntilValid([&] { return Ask(p, ctx.record, true); },
                       [&](const Decision& d) { return SchemeFromDecision(d.values, ns, na); },
                       config_.retry.reprompts + 1);
}

double LlmAgent::ProposeSplit(const BargainingContext& ctx) {
  const PromptContext p = FromBargaining(ctx, config_.coin_flip);
  const BargainingFrontier& f = *ctx.frontier;
  return AskUntilValid(
      [&] { return Ask(p, ctx.record, false); },
      [&](const Decision& d) {
        const double x = d.values.at(0);
        if (x < f.lo || x > f.hi) {
          throw ValidationError("offer " + FormatNumber(x) + " outside the proposal domain", 0);
        }
        return x;
      },
      config_.retry.reprompts + 1);
}

bool LlmAgent::RespondSplit(const BargainingContext& ctx, double offer) {
  PromptContext p = FromBargaining(ctx, config_.coin_flip);
  p.proposal = std::vector<double>{offer};
  return Ask(p, ctx.record, true).values.at(0) >= 0.5;
}

}  // namespace infobargain
