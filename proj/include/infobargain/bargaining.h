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

#ifndef INFOBARGAIN_BARGAINING_H_
#define INFOBARGAIN_BARGAINING_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infobargain/core.h"

namespace infobargain {

struct RubinsteinSpec {
  double pie = 1.0;
  double delta_1 = 1.0;  // first proposer's patience
  double delta_2 = 1.0;  // first responder's patience

  // Throws ValidationError unless pie > 0 and both deltas lie in [0, 1].
  void Validate() const;
};

struct Agreement {
  PayoffPair payoffs;
  std::optional<double> parameter;   // eta or x on a curve
  std::optional<std::size_t> index;  // position in a finite set
  std::optional<int> timestep;       // set by simulations
};

struct NashOptions {
  std::size_t grid_samples = 10001;
  double golden_tolerance = 1e-13;
};

double NashProduct(const PayoffPair& y, const PayoffPair& d);

// Maximizes the Nash product over points with y >= d. Finite sets are
// enumerated (lowest index wins ties); curves use a grid scan followed by
// golden-section refinement (smallest parameter wins ties).
// Throws PreconditionError when no point strictly improves on d for both.
Agreement NashSolution(const BargainingGame& game, const NashOptions& options = {});

struct Split {
  double proposer = 0.0;
  double responder = 0.0;
};

// Unique SPE shares: proposer pie (1 - d2) / (1 - d1 d2).
// Throws SingularityError when d1 = d2 = 1.
Split RubinsteinSplit(const RubinsteinSpec& spec);

// Ultimatum-game SPE. With accept-at-indifference the proposer keeps the
// pie; otherwise it concedes one unit of granularity, which must then be
// positive (a continuous pie has no minimal concession).
Agreement UltimatumSpe(double pie, bool responder_accepts_at_indifference,
                       double granularity = 0.0);

struct AxiomReport {
  bool pareto = false;
  bool symmetry = false;
  bool symmetry_applicable = false;  // game is swap-invariant
  bool iia = false;
  bool affine_invariance = false;
  std::vector<std::string> notes;

  bool AllPass() const { return pareto && symmetry && iia && affine_invariance; }
};

using BargainingSolver = std::function<Agreement(const BargainingGame&)>;

// Runs the four Nash axioms against the solver on the game.
AxiomReport CheckAxioms(const BargainingSolver& solver, const BargainingGame& game);

}  // namespace infobargain

#endif  // INFOBARGAIN_BARGAINING_H_
