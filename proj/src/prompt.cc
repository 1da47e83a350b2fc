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

#include <charconv>
#include <cmath>
#include <sstream>

#include "infobargain/llm.h"

namespace infobargain {
namespace {

// Small fractions read better than 17 digits.
std::string FormatProbability(double p) {
  for (int den = 2; den <= 12; ++den) {
    const double num = std::round(p * den);
    if (num > 0 && num < den && std::abs(p - num / den) < 1e-12) {
      int a = static_cast<int>(num), b = den;
      for (int g = a; g > 1; --g) {
        if (a % g == 0 && b % g == 0) {
          a /= g;
          b /= g;
          break;
        }
      }
      return std::to_string(a) + "/" + std::to_string(b);
    }
  }
  return FormatNumber(p);
}

std::string IndexList(std::size_t n) {
  if (n == 2) return "0 or 1";
  std::string out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) out += k + 1 == n ? " or " : ", ";
    out += std::to_string(k);
  }
  return out;
}

bool IsNumericLabel(const std::string& label, std::size_t index) {
  return label == std::to_string(index);
}

std::string LabelSuffix(const std::vector<std::string>& labels) {
  bool any = false;
  for (std::size_t k = 0; k < labels.size(); ++k) any |= !IsNumericLabel(labels[k], k);
  if (!any) return "";
  std::string out = " (";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(k) + " = " + labels[k];
  }
  return out + ")";
}

const char* kSelfAwareness =
    "## Self-Awareness\n\n"
    "You are a self-interested rational player.\n"
    "- Self-interested: only your own expected payoff matters to you. You may reason about "
    "the other player's payoff, but only as a means to raise your own.\n"
    "- Rational: between two strategies you always take the one with the higher expected "
    "payoff, however small the difference.\n"
    "- So before deciding, check that your choice pays at least as much as every "
    "alternative you could pick.\n\n";

std::string PersuasionScenario(const std::string& tag) {
  if (tag == "grading_students") {
    return "A professor (the sender) writes recommendation letters for students, and a "
           "recruiter (the receiver) decides whether to hire each student. State 1 means the "
           "student is strong and state 0 that the student is weak; signal 1 is a strong "
           "recommendation; action 1 means hire.\n";
  }
  if (tag == "selling_products") {
    return "A seller (the sender) describes a product to a buyer (the receiver), who decides "
           "whether to buy it. State 1 means the product is good and state 0 that it is "
           "poor; signal 1 is a favourable description; action 1 means buy.\n";
  }
  return "The game is abstract: states, signals and actions are plain numbers with no "
         "real-world meaning.\n";
}

std::string BargainingScenario(const std::string& tag) {
  if (tag == "splitting_coins") {
    return "Two players split a pile of coins between themselves.\n";
  }
  if (tag == "making_deals") {
    return "A seller and a buyer negotiate a price; the gains from the trade are split "
           "according to the agreed price.\n";
  }
  return "The game is abstract: only the numbers matter.\n";
}

// Decision variable names for the proposer or responder.
std::vector<std::string> Variables(std::size_t rows, std::size_t cols, char letter,
                                   const char* symbol, const char* given, const char* what) {
  std::vector<std::string> out;
  if (rows == 2 && cols == 2) {
    out.push_back(std::string(1, letter) + "1");
    out.push_back(std::string(1, letter) + "2");
    return out;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.push_back(std::string(symbol) + "(" + what + "=" + std::to_string(c) + " | " + given +
                    "=" + std::to_string(r) + ")");
    }
  }
  return out;
}

std::string JoinDecision(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0) out += ", ";
    out += names[k];
  }
  return out + "]";
}

void ExpectedPayoffBinary(std::ostringstream& os, const char* who, const char* r) {
  os << "- The " << who << "'s expected payoff is:\n    E(" << r << ") = \n";
  const char* terms[8][4] = {
      {"0", "(1-x1)", "(1-y1)", "0"}, {"0", "(1-x1)", "y1", "1"},
      {"0", "x1", "(1-y2)", "0"},     {"0", "x1", "y2", "1"},
      {"1", "(1-x2)", "(1-y1)", "0"}, {"1", "(1-x2)", "y1", "1"},
      {"1", "x2", "(1-y2)", "0"},     {"1", "x2", "y2", "1"},
  };
  for (int k = 0; k < 8; ++k) {
    os << "        " << (k == 0 ? "" : "+ ") << "mu_0(s=" << terms[k][0] << ") * " << terms[k][1]
       << " * " << terms[k][2] << " * " << r << "(s=" << terms[k][0] << ", a=" << terms[k][3]
       << ")\n";
  }
  os << "\n";
}

void PersuasionDescription(std::ostringstream& os, const PromptContext& c) {
  const PersuasionTask& task = *c.task;
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  os << "## Task Description\n\n"
     << "You and one other self-interested rational player play a game. One of you is the "
        "sender and the other the receiver; each wants to maximize its own reward.\n\n"
     << "### Task Scenario\n\n"
     << PersuasionScenario(c.scenario);
  os << "- Environmental state: " << IndexList(ns) << LabelSuffix(task.states) << "\n";
  os << "- Prior state distribution: $";
  for (std::size_t s = 0; s < ns; ++s) {
    if (s > 0) os << (s + 1 == ns ? " and " : ", ");
    os << "mu_0(" << s << ") = " << FormatProbability(task.prior[s]);
  }
  os << "$\n";
  os << "- The sender's signal: " << IndexList(na) << "\n";
  os << "- The receiver's action: " << IndexList(na) << LabelSuffix(task.actions) << "\n";
  os << "- The sender chooses a signaling scheme $varphi: S to Delta(Sigma)$ ($S$ is the "
        "state space, $Sigma$ the signal space, $Delta(Sigma)$ the distributions over "
        "$Sigma$).\n";
  os << "- The receiver chooses an action rule $pi: Sigma to Delta(A)$ ($A$ is the action "
        "space, $Delta(A)$ the distributions over $A$).\n\n";
  os << "### Reward Function\n\n";
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < na; ++a) {
      const std::string ri = FormatNumber(task.reward_sender(s, a));
      const std::string rj = FormatNumber(task.reward_receiver(s, a));
      os << "- state=" << s << ", action=" << a << ": sender reward r^i(s=" << s << ", a=" << a
         << ")=" << ri << ", receiver reward r^j(s=" << s << ", a=" << a << ")=" << rj << "\n";
    }
  }
  os << "\n";
  if (task.IsBinary()) {
    os << "Write x1, x2, y1 and y2 for\n"
       << "- $varphi(sigma=1 | s=0)$, the chance the sender sends signal 1 in state 0,\n"
       << "- $varphi(sigma=1 | s=1)$, the chance the sender sends signal 1 in state 1,\n"
       << "- $pi(a=1 | sigma=0)$, the chance the receiver takes action 1 after signal 0, and\n"
       << "- $pi(a=1 | sigma=1)$, the chance the receiver takes action 1 after signal 1.\n"
       << "Then:\n";
    ExpectedPayoffBinary(os, "sender", "r^i");
    ExpectedPayoffBinary(os, "receiver", "r^j");
  } else {
    os << "With $varphi(sigma | s)$ and $pi(a | sigma)$ as above:\n"
       << "- The sender's expected payoff is E(r^i) = sum over s, sigma, a of mu_0(s) * "
          "varphi(sigma | s) * pi(a | sigma) * r^i(s, a)\n"
       << "- The receiver's expected payoff is E(r^j) = sum over s, sigma, a of mu_0(s) * "
          "varphi(sigma | s) * pi(a | sigma) * r^j(s, a)\n\n";
  }
}

const char* kRuleOptions =
    "        - $pi_0$: ignore the signals and always play the best response to the prior "
    "belief.\n"
    "        - $pi_1$: form the posterior belief from the prior, the committed $varphi$ and "
    "each signal, then play the best response to it.\n"
    "        - any other action rule $pi: Sigma to Delta(A)$.\n";

const char* kExpectation =
    "The receiver announces a signaling scheme $varphi_1$ and promises to follow $pi_1$ if "
    "the sender commits to a scheme $varphi$ that gives the receiver an expected reward no "
    "lower than $varphi_1$ would; otherwise it follows $pi_0$.";

void StoppingNote(std::ostringstream& os, const StoppingRule& stop) {
  os << "Note that:\nAfter each pass the loop stops with probability "
     << FormatNumber(stop.stop_probability)
     << ". The timestep starts at 0 and grows by 1 per pass; at timestep "
     << stop.max_timestep << " the loop stops for sure.\n\n";
}

void Simulation(std::ostringstream& os, bool many) {
  os << (many ? "Then a simulation stage follows in which nobody decides anything new; the "
                "environment samples $n$ states and both players act on their declared "
                "policies.\n1. Repeat until $n$ states have been sampled:\n"
              : "Then one round is played:\n1. Once:\n")
     << "    2. The environment samples a state $s$ from $mu_0$.\n"
     << "    3. The sender draws a signal $sigma$ from $varphi$.\n"
     << "    4. The receiver draws an action $a$ from its action rule $pi$.\n"
     << "    5. Both players are paid according to $s$ and $a$.\n\n";
}

void PersuasionProcedure(std::ostringstream& os, const PromptContext& c) {
  os << "### Task Procedure\n\n";
  if (c.procedure == Procedure::kOneShotPersuasion || c.procedure == Procedure::kCheapTalk) {
    const bool commit = c.procedure == Procedure::kOneShotPersuasion;
    os << "The sender is the proposer and the receiver the responder.\n";
    if (commit) {
      os << "- The sender picks a signaling scheme $varphi$ and commits to it; the receiver "
            "sees it.\n";
    } else {
      os << "- The sender picks a signaling scheme $varphi$ privately; the receiver never "
            "sees it and only observes the signal.\n";
    }
    os << "- The receiver picks an action rule. Named options:\n" << kRuleOptions << "\n";
    Simulation(os, false);
    return;
  }
  os << "Roles in one round of the bargaining stage:\n"
     << "- Sender as proposer, receiver as responder:\n"
     << "    - The sender picks a signaling scheme $varphi$ and commits to it; the receiver "
        "sees it.\n"
     << "    - The receiver picks an action rule. Named options:\n"
     << kRuleOptions
     << "- Receiver as proposer, sender as responder:\n"
     << "    - " << kExpectation << "\n"
     << "    - The sender picks a signaling scheme $varphi$.\n\n"
     << "Bargaining stage:\n"
     << "1. The first proposer is "
     << (c.coin_flip ? "chosen by a coin flip." : "agent 0.") << "\n"
     << "2. Repeat until a consensus is reached or the stage ends. Consensus means the "
        "receiver, as responder, decides $pi_1$, or the sender, as responder, commits to a "
        "$varphi$ giving the receiver at least the expected reward of $varphi_1$.\n"
     << "    3. The proposer decides its policy.\n"
     << "    4. The responder decides its policy.\n"
     << (c.dynamics == RoleDynamics::kAlternating
             ? "    5. Without a consensus the two players swap roles: the responder becomes "
               "the proposer and the proposer the responder.\n"
             : "    5. Without a consensus the roles stay as they are.\n");
  Simulation(os, true);
  StoppingNote(os, c.stopping);
}

void PersuasionFormat(std::ostringstream& os, const PromptContext& c) {
  const PersuasionTask& task = *c.task;
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  const auto xs = Variables(ns, na, 'x', "varphi", "s", "sigma");
  const auto ys = Variables(na, na, 'y', "pi", "sigma", "a");
  os << "### Format\n\n"
     << "#### If You Are the Proposer\n"
     << "Reply in JSON following this template:\n"
     << "{\n    \"Analysis\": \"(Your Summarized Analysis)\", \n    \"Decision\": "
     << JoinDecision(xs) << "\n}\n"
     << "where:\n";
  if (task.IsBinary()) {
    os << "- x1 is $varphi(sigma=1 | s=0)$, the chance of sending signal 1 in state 0.\n"
       << "- x2 is $varphi(sigma=1 | s=1)$, the chance of sending signal 1 in state 1.\n";
  } else {
    os << "- the entries are $varphi(sigma | s)$ row by row; each row sums to 1.\n";
  }
  os << "- A sender's decision is its signaling scheme.\n"
     << "- A receiver's decision is the scheme $varphi_1$ it expects from the sender, with "
        "the promise described in the procedure.\n\n"
     << "#### If You Are the Responder\n"
     << "Reply in JSON following this template:\n"
     << "{\n    \"Analysis\": \"(Your Summarized Analysis)\", \n    \"Decision\": "
     << JoinDecision(ys) << "\n}\n"
     << "If you are the receiver:\n";
  if (task.IsBinary()) {
    os << "    - y1 is $pi(a=1 | sigma=0)$, the chance of taking action 1 after signal 0.\n"
       << "    - y2 is $pi(a=1 | sigma=1)$, the chance of taking action 1 after signal 1.\n";
  } else {
    os << "    - the entries are $pi(a | sigma)$ row by row; each row sums to 1.\n";
  }
  os << "    - The decision is your action rule.\n"
     << "If you are the sender:\n"
     << "    - Reply with " << JoinDecision(xs) << " in the proposer's layout.\n"
     << "    - The decision is your signaling scheme; it may equal the announced one or "
        "differ from it.\n\n";
}

void BargainingDescription(std::ostringstream& os, const PromptContext& c) {
  const BargainingFrontier& f = *c.frontier;
  os << "## Task Description\n\n"
     << "You and one other self-interested rational player bargain over how to split a "
        "surplus. In each round one player is the proposer and the other the responder.\n\n"
     << "### Task Scenario\n\n"
     << BargainingScenario(c.scenario);
  if (f.name == "bounded") {
    os << "- The proposer picks x in [0, 1/2]. If the responder accepts, the proposer gets "
          "(1+2x)/3 and the responder gets (1-2x)/3.\n";
  } else {
    const Split whole = f.shares(f.hi);
    os << "- The proposer picks x in [" << FormatNumber(f.lo) << ", " << FormatNumber(f.hi)
       << "]. If the responder accepts, the proposer keeps the fraction x of a total of "
       << FormatNumber(whole.proposer + whole.responder)
       << " and the responder gets the rest.\n";
  }
  os << "- Without an agreement both players get 0.\n";
  if (c.own_discount && c.other_discount) {
    os << "- Payoffs agreed at timestep t are multiplied by delta^t; your delta is "
       << FormatNumber(*c.own_discount) << " and the other player's is "
       << FormatNumber(*c.other_discount) << ".\n";
  }
  os << "\n### Task Procedure\n\n";
  if (c.one_shot) {
    os << "1. The proposer (agent 0) offers a split x.\n"
       << "2. The responder accepts or rejects; a rejection ends the game with nothing for "
          "either player.\n\n";
    return;
  }
  os << "1. The first proposer is " << (c.coin_flip ? "chosen by a coin flip." : "agent 0.")
     << "\n"
     << "2. Repeat until an offer is accepted or the game ends:\n"
     << "    3. The proposer offers a split x.\n"
     << "    4. The responder accepts or rejects it.\n"
     << (c.dynamics == RoleDynamics::kAlternating
             ? "    5. After a rejection the two players swap roles.\n\n"
             : "    5. After a rejection the roles stay as they are.\n\n");
  StoppingNote(os, c.stopping);
}

void BargainingFormat(std::ostringstream& os) {
  os << "### Format\n\n"
     << "#### If You Are the Proposer\n"
     << "Reply in JSON following this template:\n"
     << "{\n    \"Analysis\": \"(Your Summarized Analysis)\", \n    \"Decision\": [x]\n}\n"
     << "where x is the split you offer.\n\n"
     << "#### If You Are the Responder\n"
     << "Reply in JSON following this template:\n"
     << "{\n    \"Analysis\": \"(Your Summarized Analysis)\", \n    \"Decision\": [z]\n}\n"
     << "where z is 1 to accept the offer and 0 to reject it.\n\n";
}

std::string ProposalText(const PromptContext& c) {
  const std::vector<double>& v = *c.proposal;
  std::string out = "Now the proposer decides that ";
  const bool binary_scheme = c.task != nullptr && c.task->IsBinary() && v.size() == 2;
  if (binary_scheme) {
    out += "x1=" + FormatNumber(v[0]) + " and x2=" + FormatNumber(v[1]);
  } else if (c.frontier != nullptr && v.size() == 1) {
    out += "x=" + FormatNumber(v[0]);
  } else {
    out += "Decision=[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out += ", ";
      out += FormatNumber(v[k]);
    }
    out += "]";
  }
  return out + ". ";
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::size_t ExpectedArity(const PromptContext& c) {
  if (c.frontier != nullptr) return 1;
  if (c.task == nullptr) throw ConfigurationError("prompt context has no task");
  const std::size_t ns = c.task->num_states();
  const std::size_t na = c.task->num_actions();
  if (c.task->IsBinary()) return 2;
  const bool rule = c.role == Role::kReceiver && c.position == Position::kResponder;
  return rule ? na * na : ns * na;
}

std::vector<ChatMessage> BuildPrompt(const PromptContext& c) {
  if ((c.task == nullptr) == (c.frontier == nullptr)) {
    throw ConfigurationError("prompt context needs exactly one of a task or a frontier");
  }
  std::ostringstream os;
  os << kSelfAwareness;
  if (c.task != nullptr) {
    PersuasionDescription(os, c);
    PersuasionProcedure(os, c);
    PersuasionFormat(os, c);
  } else {
    BargainingDescription(os, c);
    BargainingFormat(os);
  }
  os << "Please STRICTLY adhere to the JSON templates when outputting, and do not output "
        "anything else. Reason step by step before deciding, and use everything you know. "
        "Both you and the other player are self-interested rational players, so weigh what "
        "your decision leads to and keep the analysis and the decision consistent.\n\n";
  os << "## Identity\n\n- You are the agent " << c.agent_id;
  if (c.task != nullptr) os << "\n- You are the " << (c.role == Role::kSender ? "sender" : "receiver");
  std::string turn;
  const bool proposer = c.position == Position::kProposer;
  if (!proposer && c.proposal) turn = ProposalText(c);
  turn += "The current timestep is " + std::to_string(c.timestep) + " and you are the " +
          (proposer ? "proposer" : "responder") +
          ". Please make a decision based on all the information you know.";
  return {{"system", os.str()}, {"user", turn}};
}

}  // namespace infobargain
