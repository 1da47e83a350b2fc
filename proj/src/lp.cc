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

#include "infobargain/lp.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <string>

namespace infobargain {
namespace {

constexpr double kPivotTolerance = 1e-10;
constexpr double kReducedCostTolerance = 1e-11;
constexpr double kPhaseOneTolerance = 1e-9;
constexpr std::size_t kTraceDepth = 40;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows * cols, 0.0), b_(rows, 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * cols_ + c]; }
  double& rhs(std::size_t r) { return b_[r]; }
  double rhs(std::size_t r) const { return b_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void Pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) /= p;
    b_[r] /= p;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
      b_[i] -= f * b_[r];
      if (b_[i] < 0.0 && b_[i] > -kPhaseOneTolerance) b_[i] = 0.0;
    }
    basis_[r] = c;
  }

  void EraseRow(std::size_t r) {
    t_.erase(t_.begin() + r * cols_, t_.begin() + (r + 1) * cols_);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
};

enum class Outcome { kOptimal, kUnbounded };

class Simplex {
 public:
  Simplex(Tableau& tableau, std::deque<std::string>& trace, int& iterations,
          int max_iterations)
      : tab_(tableau), trace_(trace), iterations_(iterations),
        max_iterations_(max_iterations) {}

  // Minimizes cost . x over columns with allowed[j] set.
  Outcome Run(const std::vector<double>& cost, const std::vector<bool>& allowed,
              int phase) {
    const std::size_t n = tab_.cols();
    std::vector<bool> in_basis(n, false);
    while (true) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (std::size_t i = 0; i < tab_.rows(); ++i) in_basis[tab_.basis(i)] = true;
      // Bland: first improving column.
      std::size_t enter = n;
      double enter_rc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!allowed[j] || in_basis[j]) continue;
        double rc = cost[j];
        for (std::size_t i = 0; i < tab_.rows(); ++i) {
          rc -= cost[tab_.basis(i)] * tab_.at(i, j);
        }
        if (rc < -kReducedCostTolerance) {
          enter = j;
          enter_rc = rc;
          break;
        }
      }
      if (enter == n) return Outcome::kOptimal;
      std::size_t leave = tab_.rows();
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < tab_.rows(); ++i) {
        const double a = tab_.at(i, enter);
        if (a <= kPivotTolerance) continue;
        const double ratio = tab_.rhs(i) / a;
        if (leave == tab_.rows() || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && tab_.basis(i) < tab_.basis(leave))) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == tab_.rows()) {
        Record(phase, enter, leave, enter_rc);
        return Outcome::kUnbounded;
      }
      Record(phase, enter, leave, enter_rc);
      tab_.Pivot(leave, enter);
      if (++iterations_ > max_iterations_) {
        throw SolverError("simplex iteration limit exceeded",
                          std::vector<std::string>(trace_.begin(), trace_.end()));
      }
    }
  }

 private:
  void Record(int phase, std::size_t enter, std::size_t leave, double rc) {
    std::ostringstream line;
    line.precision(6);
    line << "phase " << phase << " iter " << iterations_ << ": enter x" << enter
         << " (rc " << rc << ")";
    if (leave < tab_.rows()) {
      line << " leave row " << leave << " (x" << tab_.basis(leave) << ")";
    } else {
      line << " no leaving row";
    }
    trace_.push_back(line.str());
    if (trace_.size() > kTraceDepth) trace_.pop_front();
  }

  Tableau& tab_;
  std::deque<std::string>& trace_;
  int& iterations_;
  int max_iterations_;
};

}  // namespace

LpSolution SolveLp(const LinearProgram& program) {
  const std::size_t n = program.num_variables();
  const std::size_t m = program.constraints.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (program.constraints[i].coefficients.size() != n) {
      throw ShapeError("constraint " + std::to_string(i) + " has " +
                       std::to_string(program.constraints[i].coefficients.size()) +
                       " coefficients for " + std::to_string(n) + " variables");
    }
  }
  // Normalize to nonnegative right-hand sides.
  std::vector<double> sign(m, 1.0);
  std::vector<Relation> rel(m);
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = program.constraints[i];
    rel[i] = c.relation;
    if (c.rhs < 0.0) {
      sign[i] = -1.0;
      if (rel[i] == Relation::kLessEqual) {
        rel[i] = Relation::kGreaterEqual;
      } else if (rel[i] == Relation::kGreaterEqual) {
        rel[i] = Relation::kLessEqual;
      }
    }
    if (rel[i] != Relation::kEqual) ++num_slack;
    if (rel[i] != Relation::kLessEqual) ++num_artificial;
  }
  const std::size_t cols = n + num_slack + num_artificial;
  Tableau tab(m, cols);
  std::vector<std::size_t> identity_col(m);
  std::vector<bool> is_artificial(cols, false);
  std::size_t next_slack = n;
  std::size_t next_artificial = n + num_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = program.constraints[i];
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign[i] * c.coefficients[j];
    tab.rhs(i) = sign[i] * c.rhs;
    if (rel[i] == Relation::kLessEqual) {
      tab.at(i, next_slack) = 1.0;
      identity_col[i] = next_slack++;
    } else {
      if (rel[i] == Relation::kGreaterEqual) tab.at(i, next_slack++) = -1.0;
      tab.at(i, next_artificial) = 1.0;
      is_artificial[next_artificial] = true;
      identity_col[i] = next_artificial++;
    }
    tab.basis(i) = identity_col[i];
  }

  std::deque<std::string> trace;
  int iterations = 0;
  const int max_iterations = static_cast<int>(200 * (m + cols)) + 1000;
  Simplex simplex(tab, trace, iterations, max_iterations);

  if (num_artificial > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) cost[j] = is_artificial[j] ? 1.0 : 0.0;
    std::vector<bool> allowed(cols, true);
    if (simplex.Run(cost, allowed, 1) == Outcome::kUnbounded) {
      throw SolverError("phase one reported unbounded",
                        std::vector<std::string>(trace.begin(), trace.end()));
    }
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      infeasibility += cost[tab.basis(i)] * tab.rhs(i);
    }
    if (infeasibility > kPhaseOneTolerance) {
      std::vector<double> certificate(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        double y = 0.0;
        for (std::size_t k = 0; k < tab.rows(); ++k) {
          y += cost[tab.basis(k)] * tab.at(k, identity_col[i]);
        }
        certificate[i] = sign[i] * y;
      }
      std::ostringstream msg;
      msg << "linear program is infeasible (phase-one residual "
          << infeasibility << ")";
      throw InfeasibleError(msg.str(), std::move(certificate));
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (!is_artificial[tab.basis(i)]) {
        ++i;
        continue;
      }
      std::size_t replacement = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_artificial[j] && std::abs(tab.at(i, j)) > kPivotTolerance) {
          replacement = j;
          break;
        }
      }
      if (replacement == cols) {
        tab.EraseRow(i);
      } else {
        tab.Pivot(i, replacement);
        ++i;
      }
    }
  }

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = -program.objective[j];
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = 0; j < cols; ++j) allowed[j] = !is_artificial[j];
  if (simplex.Run(cost, allowed, 2) == Outcome::kUnbounded) {
    throw UnboundedError("linear program is unbounded");
  }

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis(i) < n) sol.x[tab.basis(i)] = std::max(0.0, tab.rhs(i));
  }
  for (std::size_t j = 0; j < n; ++j) sol.value += program.objective[j] * sol.x[j];
  sol.iterations = iterations;

  // Residual check guards against silent numerical drift.
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = program.constraints[i];
    double lhs = 0.0;
    double scale = std::abs(c.rhs);
    for (std::size_t j = 0; j < n; ++j) {
      lhs += c.coefficients[j] * sol.x[j];
      scale = std::max(scale, std::abs(c.coefficients[j] * sol.x[j]));
    }
    const double tol = 1e-7 * std::max(1.0, scale);
    const bool ok = (c.relation == Relation::kLessEqual && lhs <= c.rhs + tol) ||
                    (c.relation == Relation::kGreaterEqual && lhs >= c.rhs - tol) ||
                    (c.relation == Relation::kEqual && std::abs(lhs - c.rhs) <= tol);
    if (!ok) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "simplex solution violates constraint " << i << " (lhs " << lhs
          << ", rhs " << c.rhs << ")";
      throw SolverError(msg.str(),
                        std::vector<std::string>(trace.begin(), trace.end()));
    }
  }
  return sol;
}

bool IsFarkasCertificate(const LinearProgram& program,
                         const std::vector<double>& y, double tol) {
  const std::size_t m = program.constraints.size();
  if (y.size() != m) return false;
  double yb = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = program.constraints[i];
    if (c.relation == Relation::kLessEqual && y[i] > tol) return false;
    if (c.relation == Relation::kGreaterEqual && y[i] < -tol) return false;
    yb += y[i] * c.rhs;
  }
  if (yb <= tol) return false;
  for (std::size_t j = 0; j < program.num_variables(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      col += y[i] * program.constraints[i].coefficients[j];
    }
    if (col > tol) return false;
  }
  return true;
}

}  // namespace infobargain
