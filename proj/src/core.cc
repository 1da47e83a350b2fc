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

#include "infobargain/core.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace infobargain {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw ShapeError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(c));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(row(i).begin(), row(i).end());
  }
  return out;
}

double Matrix::MaxAbsDiff(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("MaxAbsDiff: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

std::vector<std::string> Validate(const PersuasionTask& task) {
  std::vector<std::string> report;
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  if (ns == 0) report.push_back("states empty");
  if (na == 0) report.push_back("actions empty");
  if (task.prior.size() != ns) {
    report.push_back("prior has " + std::to_string(task.prior.size()) +
                     " entries for " + std::to_string(ns) + " states");
  }
  double total = 0.0;
  bool finite = true;
  for (std::size_t s = 0; s < task.prior.size(); ++s) {
    const double p = task.prior[s];
    if (!std::isfinite(p)) {
      finite = false;
      report.push_back("prior entry " + std::to_string(s) + " not finite");
    } else if (p < 0.0) {
      report.push_back("prior entry " + std::to_string(s) + " negative");
    }
    total += p;
  }
  if (finite && !task.prior.empty() &&
      std::abs(total - 1.0) > kProbabilityTolerance) {
    report.push_back("prior not normalized");
  }
  auto check_table = [&](const Matrix& m, const char* name) {
    if (m.rows() != ns || m.cols() != na) {
      std::ostringstream msg;
      msg << name << " is " << m.rows() << "x" << m.cols() << ", expected "
          << ns << "x" << na;
      report.push_back(msg.str());
      return;
    }
    for (double v : m.data()) {
      if (!std::isfinite(v)) {
        report.push_back(std::string(name) + " has a non-finite entry");
        return;
      }
    }
  };
  check_table(task.reward_sender, "reward_sender");
  check_table(task.reward_receiver, "reward_receiver");
  return report;
}

void RequireValid(const PersuasionTask& task) {
  const auto report = Validate(task);
  if (report.empty()) return;
  std::string msg = "invalid task";
  if (!task.label.empty()) msg += " '" + task.label + "'";
  msg += ":";
  for (const auto& line : report) msg += " " + line + ";";
  throw ValidationError(msg);
}

template <typename Tag>
StochasticMatrix<Tag>::StochasticMatrix(Matrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) {
    throw ValidationError("stochastic matrix must be non-empty");
  }
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      const double v = matrix_(r, c);
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("entry (" + std::to_string(r) + ", " +
                                  std::to_string(c) +
                                  ") is negative or not finite",
                              r * matrix_.cols() + c);
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "row " << r << " sums to " << sum << ", not 1";
      throw ValidationError(msg.str(), r);
    }
  }
}

template <typename Tag>
StochasticMatrix<Tag> StochasticMatrix<Tag>::Binary(double p_row0,
                                                    double p_row1) {
  return StochasticMatrix(
      Matrix::FromRows({{1.0 - p_row0, p_row0}, {1.0 - p_row1, p_row1}}));
}

template <typename Tag>
StochasticMatrix<Tag> StochasticMatrix<Tag>::Deterministic(
    const std::vector<std::size_t>& choice, std::size_t num_cols) {
  Matrix m(choice.size(), num_cols, 0.0);
  for (std::size_t r = 0; r < choice.size(); ++r) {
    if (choice[r] >= num_cols) throw ShapeError("choice out of range");
    m(r, choice[r]) = 1.0;
  }
  return StochasticMatrix(std::move(m));
}

template <typename Tag>
std::pair<double, double> StochasticMatrix<Tag>::BinaryParams() const {
  if (matrix_.rows() != 2 || matrix_.cols() != 2) {
    throw ShapeError("binary parametrization needs a 2x2 matrix");
  }
  return {matrix_(0, 1), matrix_(1, 1)};
}

template class StochasticMatrix<internal::SchemeTag>;
template class StochasticMatrix<internal::RuleTag>;

namespace {

void CheckShapes(const PersuasionTask& task, const SignalingScheme& scheme,
                 const ActionRule& rule) {
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  if (task.prior.size() != ns || task.reward_sender.rows() != ns ||
      task.reward_sender.cols() != na || task.reward_receiver.rows() != ns ||
      task.reward_receiver.cols() != na) {
    throw ShapeError("task tables do not match its state/action sets");
  }
  if (scheme.num_rows() != ns) {
    throw ShapeError("scheme has " + std::to_string(scheme.num_rows()) +
                     " rows for " + std::to_string(ns) + " states");
  }
  if (rule.num_rows() != scheme.num_cols()) {
    throw ShapeError("rule has " + std::to_string(rule.num_rows()) +
                     " rows for " + std::to_string(scheme.num_cols()) +
                     " signals");
  }
  if (rule.num_cols() != na) {
    throw ShapeError("rule has " + std::to_string(rule.num_cols()) +
                     " columns for " + std::to_string(na) + " actions");
  }
}

}  // namespace

PayoffPair Evaluate(const PersuasionTask& task, const SignalingScheme& scheme,
                    const ActionRule& rule) {
  CheckShapes(task, scheme, rule);
  PayoffPair out;
  const std::size_t ns = task.num_states();
  const std::size_t nsig = scheme.num_cols();
  const std::size_t na = task.num_actions();
  for (std::size_t s = 0; s < ns; ++s) {
    double ri = 0.0;
    double rj = 0.0;
    for (std::size_t sig = 0; sig < nsig; ++sig) {
      const double ps = scheme(s, sig);
      if (ps == 0.0) continue;
      double ei = 0.0;
      double ej = 0.0;
      for (std::size_t a = 0; a < na; ++a) {
        ei += rule(sig, a) * task.reward_sender(s, a);
        ej += rule(sig, a) * task.reward_receiver(s, a);
      }
      ri += ps * ei;
      rj += ps * ej;
    }
    out.sender += task.prior[s] * ri;
    out.receiver += task.prior[s] * rj;
  }
  return out;
}

double ExpectedReward(const PersuasionTask& task, const Matrix& reward,
                      const SignalingScheme& scheme, const ActionRule& rule) {
  CheckShapes(task, scheme, rule);
  if (reward.rows() != task.num_states() || reward.cols() != task.num_actions()) {
    throw ShapeError("reward table shape mismatch");
  }
  double total = 0.0;
  for (std::size_t s = 0; s < task.num_states(); ++s) {
    double rs = 0.0;
    for (std::size_t sig = 0; sig < scheme.num_cols(); ++sig) {
      double e = 0.0;
      for (std::size_t a = 0; a < task.num_actions(); ++a) {
        e += rule(sig, a) * reward(s, a);
      }
      rs += scheme(s, sig) * e;
    }
    total += task.prior[s] * rs;
  }
  return total;
}

ActionRule ObedientRule(std::size_t num_actions) {
  std::vector<std::size_t> choice(num_actions);
  for (std::size_t a = 0; a < num_actions; ++a) choice[a] = a;
  return ActionRule::Deterministic(choice, num_actions);
}

}  // namespace infobargain
