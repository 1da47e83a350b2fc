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

#ifndef INFOBARGAIN_LP_H_
#define INFOBARGAIN_LP_H_

#include <vector>

#include "infobargain/errors.h"

namespace infobargain {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;

  std::size_t num_variables() const { return objective.size(); }
  void Add(std::vector<double> coefficients, Relation relation, double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
  }
};

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

// Dense two-phase simplex with Bland's rule. Returns a basic (vertex)
// optimum; the result depends only on the input ordering.
// Throws InfeasibleError (with Farkas certificate), UnboundedError, or
// SolverError (with pivot trace), and ShapeError on ragged input.
LpSolution SolveLp(const LinearProgram& program);

// True when y certifies infeasibility of the program (tolerance tol).
bool IsFarkasCertificate(const LinearProgram& program,
                         const std::vector<double>& y, double tol = 1e-9);

}  // namespace infobargain

#endif  // INFOBARGAIN_LP_H_
