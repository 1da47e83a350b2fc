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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "infobargain/engine.h"
#include "infobargain/llm.h"
#include "infobargain/scenarios.h"
#include "json.hpp"

namespace infobargain {
namespace {

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(INFOBARGAIN_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Reply(const std::vector<double>& values) {
  return RenderDecision({"fine", values});
}

TEST_SUITE("llm") {
  TEST_CASE("logged replies parse despite invalid escapes") {
    const auto s = ParseDecision(ReadData("sender_reply.txt"), 2);
    CHECK(s.values == std::vector<double>{0.499, 1.0});
    CHECK(s.analysis.find("As the sender") == 0);
    const auto r = ParseDecision(ReadData("receiver_reply.txt"), 2);
    CHECK(r.values == std::vector<double>{0.0, 1.0});
  }

  TEST_CASE("surrounding prose and code fences are ignored") {
    const auto d = ParseDecision("Sure!\n```json\n{\"Analysis\": \"a {b}\", \"Decision\": [0.2, 0.8],}\n```");
    CHECK(d.values == std::vector<double>{0.2, 0.8});
    CHECK(d.analysis == "a {b}");
  }

  TEST_CASE("malformed replies are classified") {
    CHECK_THROWS_AS(ParseDecision("no json here"), ParseError);
    CHECK_THROWS_AS(ParseDecision("{\"Analysis\": \"x\"}"), ParseError);
    try {
      ParseDecision("{\"Analysis\": \"x\", \"Decision\": [0.5, 1.5]}");
      FAIL("expected a range error");
    } catch (const ValidationError& e) {
      CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(ParseDecision("{\"Analysis\": \"x\", \"Decision\": [0.5]}", 2), ValidationError);
    // Bargaining proposals are not probabilities.
    CHECK(ParseDecision("{\"Analysis\": \"x\", \"Decision\": [40]}", 1, false).values[0] == 40);
  }

  TEST_CASE("render and parse are inverse") {
    const Decision d{"line\nbreak \"quoted\"", {0.1, 1.0 / 3.0}};
    const auto back = ParseDecision(RenderDecision(d), 2);
    CHECK(back.values == d.values);
    CHECK(back.analysis == d.analysis);
    CHECK(FormatNumber(0.499) == "0.499");
    CHECK(FormatNumber(1.0) == "1");
  }

  TEST_CASE("decision vectors map to schemes and rules") {
    const auto s = SchemeFromDecision({0.499, 1}, 2, 2);
    CHECK(s == SignalingScheme::Binary(0.499, 1));
    CHECK(SchemeToDecision(s) == std::vector<double>{0.499, 1});
    const auto big = SchemeFromDecision({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3, 3);
    CHECK(big == SignalingScheme::Deterministic({0, 1, 2}, 3));
    CHECK(RuleToDecision(ActionRule::Binary(0, 1)) == std::vector<double>{0, 1});
    CHECK_THROWS_AS(SchemeFromDecision({0.5, 0.5, 0.5}, 3, 3), ValidationError);
  }

  TEST_CASE("prompts carry the identity, the anchors and the turn line") {
    const auto task = GradingTask();
    PromptContext c;
    c.task = &task;
    c.agent_id = 1;
    c.role = Role::kReceiver;
    c.position = Position::kResponder;
    c.proposal = std::vector<double>{0.499, 1};
    const auto msgs = BuildPrompt(c);
    REQUIRE(msgs.size() == 2);
    CHECK(msgs[0].role == "system");
    CHECK(msgs[0].content.find("You are a self-interested rational player.") != std::string::npos);
    CHECK(msgs[0].content.find("Please STRICTLY adhere to the JSON templates") != std::string::npos);
    CHECK(msgs[0].content.find("- You are the agent 1") != std::string::npos);
    CHECK(msgs[0].content.find("- You are the receiver") != std::string::npos);
    CHECK(msgs[1].content ==
          "Now the proposer decides that x1=0.499 and x2=1. The current timestep is 0 and you "
          "are the responder. Please make a decision based on all the information you know.");
    CHECK(ExpectedArity(c) == 2);
  }

  TEST_CASE("bargaining prompts ask for one number") {
    const auto f = UnboundedFrontier();
    PromptContext c;
    c.frontier = &f;
    c.procedure = Procedure::kBargaining;
    c.position = Position::kProposer;
    CHECK(ExpectedArity(c) == 1);
    CHECK(BuildPrompt(c)[1].content.find("you are the proposer") != std::string::npos);
  }

  TEST_CASE("mock backend serves replies in order and then fails") {
    MockChatBackend b({"a", "b"});
    CHECK(b.Complete({}) == "a");
    CHECK(b.Complete({}) == "b");
    CHECK_THROWS_AS(b.Complete({}), TransportError);
    CHECK(b.calls() == 3);
  }

  TEST_CASE("agents re-prompt after an unusable reply") {
    auto backend = std::make_shared<MockChatBackend>(
        std::vector<std::string>{"I think 0.5", Reply({0.5, 1.0})});
    LlmAgent agent({}, backend);
    const auto task = GradingTask();
    PersuasionContext ctx;
    ctx.task = &task;
    std::vector<nlohmann::json> log;
    ctx.record = [&](const nlohmann::json& e) { log.push_back(e); };
    CHECK(agent.ProposeScheme(ctx) == SignalingScheme::Binary(0.5, 1));
    REQUIRE(log.size() == 2);
    CHECK(log[0].contains("error"));
    CHECK(log[1]["decision"] == nlohmann::json{0.5, 1.0});
  }

  TEST_CASE("exhausted retries become failures") {
    RetryPolicy retry{1, 1};
    LlmAgentConfig cfg;
    cfg.retry = retry;
    auto garbage = std::make_shared<MockChatBackend>(std::vector<std::string>{"x", "y", "z", "w"});
    LlmAgent parse_fail(cfg, garbage);
    const auto task = GradingTask();
    PersuasionContext ctx;
    ctx.task = &task;
    CHECK_THROWS_AS(parse_fail.ProposeScheme(ctx), ProtocolError);
    auto dead = std::make_shared<MockChatBackend>(std::vector<std::string>{});
    LlmAgent transport_fail(cfg, dead);
    CHECK_THROWS_AS(transport_fail.ProposeScheme(ctx), AgentFailure);
    CHECK(dead->calls() == 2);
  }

  TEST_CASE("aborted runs record the failure in the trace") {
    auto dead = std::make_shared<MockChatBackend>(std::vector<std::string>{});
    LlmAgent a({}, dead), b({}, dead);
    const auto t = RunLongTerm(GradingTask(), a, b, {}, 1);
    CHECK(t.aborted);
    CHECK(t.failure.rfind("agent_failure", 0) == 0);
  }

  TEST_CASE("replay reproduces a recorded run") {
    auto b0 = std::make_shared<MockChatBackend>(std::vector<std::string>{ReadData("sender_reply.txt")});
    auto b1 = std::make_shared<MockChatBackend>(std::vector<std::string>{ReadData("receiver_reply.txt")});
    LlmAgent s({}, b0), r({}, b1);
    LongTermOptions o;
    o.realization_steps = 30;
    const auto first = RunLongTerm(GradingTask(), s, r, o, 8);
    CHECK(first.consensus_reached);
    LlmAgent rs({}, std::make_shared<ReplayChatBackend>(first, 0));
    LlmAgent rr({}, std::make_shared<ReplayChatBackend>(first, 1));
    const auto second = RunLongTerm(GradingTask(), rs, rr, o, 8);
    CHECK(TraceToString(second) == TraceToString(first));
  }

  TEST_CASE("http backend posts chat completions") {
    httplib::Server server;
    std::string seen_auth;
    nlohmann::json seen_body;
    server.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
      seen_auth = req.get_header_value("Authorization");
      seen_body = nlohmann::json::parse(req.body);
      nlohmann::json out = {{"choices", {{{"message", {{"role", "assistant"}, {"content", "hello"}}}}}}};
      res.set_content(out.dump(), "application/json");
    });
    server.Post("/broken", [](const httplib::Request&, httplib::Response& res) { res.status = 500; });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    ::setenv("INFOBARGAIN_TEST_KEY", "secret", 1);
    HttpBackendConfig cfg;
    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
    cfg.api_key_env = "INFOBARGAIN_TEST_KEY";
    cfg.timeout_seconds = 5;
    HttpChatBackend backend(cfg);
    ChatRequest req{"some-model", "0.5", {{"user", "hi"}}, 0};
    CHECK(backend.Complete(req) == "hello");
    CHECK(seen_auth == "Bearer secret");
    CHECK(seen_body["model"] == "some-model");
    CHECK(seen_body["temperature"] == 0.5);
    CHECK(seen_body["messages"][0]["content"] == "hi");

    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/broken";
    CHECK_THROWS_AS(HttpChatBackend(cfg).Complete(req), TransportError);
    CHECK_THROWS_AS(HttpChatBackend(HttpBackendConfig{"no-scheme"}), ConfigurationError);
    server.stop();
    th.join();
  }
}

}  // namespace
}  // namespace infobargain
