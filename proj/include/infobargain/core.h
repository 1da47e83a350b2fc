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

#ifndef INFOBARGAIN_CORE_H_
#define INFOBARGAIN_CORE_H_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infobargain/errors.h"

namespace infobargain {

// Tolerance for probability invariants (row sums, prior normalization).
inline constexpr double kProbabilityTolerance = 1e-12;
// Tolerance for comparisons of solver outputs.
inline constexpr double kSolverTolerance = 1e-9;

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<double>& data() const { return data_; }
  std::vector<std::vector<double>> ToRows() const;

  // Largest absolute entrywise difference; shapes must agree.
  double MaxAbsDiff(const Matrix& other) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Expected payoffs (R^i for the sender, R^j for the receiver).
struct PayoffPair {
  double sender = 0.0;
  double receiver = 0.0;
  bool operator==(const PayoffPair&) const = default;
};

// States, prior, actions and the two reward tables. Signals are identified
// with actions, so a scheme has |actions| columns unless stated otherwise.
// Plain data: check with Validate(); every solver entry point does.
struct PersuasionTask {
  std::vector<std::string> states;
  std::vector<double> prior;
  std::vector<std::string> actions;
  Matrix reward_sender;    // |states| x |actions|
  Matrix reward_receiver;  // |states| x |actions|
  std::string label;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_actions() const { return actions.size(); }
  bool IsBinary() const { return num_states() == 2 && num_actions() == 2; }
};

// Lists every violated invariant; empty iff the task is well formed.
std::vector<std::string> Validate(const PersuasionTask& task);

// Throws ValidationError joining Validate()'s report when it is non-empty.
void RequireValid(const PersuasionTask& task);

namespace internal {
struct SchemeTag {};
struct RuleTag {};
}  // namespace internal

// Row-stochastic matrix with a strong tag so that schemes and rules cannot
// be swapped by accident. Rows are validated at construction.
template <typename Tag>
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Matrix matrix);
  StochasticMatrix(std::initializer_list<std::vector<double>> rows)
      : StochasticMatrix(Matrix::FromRows(rows)) {}

  // Binary view: entries (0,1) and (1,1), i.e. probabilities of the second
  // column in each of the two rows.
  static StochasticMatrix Binary(double p_row0, double p_row1);
  // Deterministic map row -> column.
  static StochasticMatrix Deterministic(const std::vector<std::size_t>& choice,
                                        std::size_t num_cols);

  std::size_t num_rows() const { return matrix_.rows(); }
  std::size_t num_cols() const { return matrix_.cols(); }
  double operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
  std::span<const double> row(std::size_t r) const { return matrix_.row(r); }
  const Matrix& matrix() const { return matrix_; }
  // (p_row0, p_row1) for 2x2 matrices; throws ShapeError otherwise.
  std::pair<double, double> BinaryParams() const;
  // Concatenated rows.
  std::vector<double> Flatten() const { return matrix_.data(); }

  bool operator==(const StochasticMatrix&) const = default;

 private:
  Matrix matrix_;
};

// phi(sigma | s): |states| rows x |signals| columns.
using SignalingScheme = StochasticMatrix<internal::SchemeTag>;
// pi(a | sigma): |signals| rows x |actions| columns.
using ActionRule = StochasticMatrix<internal::RuleTag>;

// Sum over s, sigma, a of mu0(s) phi(sigma|s) pi(a|sigma) r(s,a), for both
// reward tables.
PayoffPair Evaluate(const PersuasionTask& task, const SignalingScheme& scheme,
                    const ActionRule& rule);

// Single-table variant used by solvers.
double ExpectedReward(const PersuasionTask& task, const Matrix& reward,
                      const SignalingScheme& scheme, const ActionRule& rule);

// Identity rule: play the recommended action.
ActionRule ObedientRule(std::size_t num_actions);

// Curve eta -> payoffs over [lo, hi].
struct ParametricFrontier {
  std::function<PayoffPair(double)> curve;
  double lo = 0.0;
  double hi = 1.0;
};

// Feasibility set plus disagreement point.
struct BargainingGame {
  std::variant<std::vector<PayoffPair>, ParametricFrontier> feasibility;
  PayoffPair disagreement;

  bool IsFinite() const {
    return std::holds_alternative<std::vector<PayoffPair>>(feasibility);
  }
  const std::vector<PayoffPair>& points() const {
    return std::get<std::vector<PayoffPair>>(feasibility);
  }
  const ParametricFrontier& frontier() const {
    return std::get<ParametricFrontier>(feasibility);
  }
};

}  // namespace infobargain

#endif  // INFOBARGAIN_CORE_H_
