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

#include "infobargain/bargaining.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace infobargain {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool StrictlyImproves(const PayoffPair& y, const PayoffPair& d) {
  return y.sender > d.sender && y.receiver > d.receiver;
}

double GuardedProduct(const PayoffPair& y, const PayoffPair& d) {
  if (y.sender < d.sender || y.receiver < d.receiver) return kNegInf;
  return NashProduct(y, d);
}

[[noreturn]] void ThrowNoBetterOutcome() {
  throw PreconditionError(
      "better-outcomes condition fails: no feasible agreement gives both "
      "players strictly more than the disagreement point");
}

double SampleAt(const ParametricFrontier& f, std::size_t k, std::size_t n) {
  if (k + 1 == n) return f.hi;
  return f.lo + (f.hi - f.lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

std::vector<PayoffPair> SampleCurve(const ParametricFrontier& f, std::size_t n) {
  std::vector<PayoffPair> pts(n);
  for (std::size_t k = 0; k < n; ++k) pts[k] = f.curve(SampleAt(f, k, n));
  return pts;
}

Agreement SolveFinite(const BargainingGame& game) {
  const auto& pts = game.points();
  const PayoffPair& d = game.disagreement;
  if (std::none_of(pts.begin(), pts.end(),
                   [&](const PayoffPair& y) { return StrictlyImproves(y, d); })) {
    ThrowNoBetterOutcome();
  }
  double best = kNegInf;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double p = GuardedProduct(pts[k], d);
    if (p > best) {
      best = p;
      arg = k;
    }
  }
  Agreement out;
  out.payoffs = pts[arg];
  out.index = arg;
  return out;
}

Agreement SolveCurve(const BargainingGame& game, const NashOptions& options) {
  const ParametricFrontier& f = game.frontier();
  const PayoffPair& d = game.disagreement;
  if (!(f.hi >= f.lo)) throw ValidationError("curve interval is empty");
  const std::size_t n = std::max<std::size_t>(options.grid_samples, 2);
  bool improvable = false;
  double best = kNegInf;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const PayoffPair y = f.curve(SampleAt(f, k, n));
    improvable = improvable || StrictlyImproves(y, d);
    const double p = GuardedProduct(y, d);
    if (p > best) {
      best = p;
      arg = k;
    }
  }
  if (!improvable) ThrowNoBetterOutcome();

  double t_best = SampleAt(f, arg, n);
  // Golden-section search on the bracketing cells.
  double a = SampleAt(f, arg == 0 ? 0 : arg - 1, n);
  double b = SampleAt(f, arg + 1 >= n ? n - 1 : arg + 1, n);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto objective = [&](double t) { return GuardedProduct(f.curve(t), d); };
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = objective(c);
  double fe = objective(e);
  for (int it = 0; it < 200 && (b - a) > options.golden_tolerance; ++it) {
    if (fc >= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = objective(e);
    }
  }
  const double t_golden = 0.5 * (a + b);
  if (objective(t_golden) > best) t_best = t_golden;

  Agreement out;
  out.parameter = t_best;
  out.payoffs = f.curve(t_best);
  return out;
}

PayoffPair Affine(const PayoffPair& y, const PayoffPair& alpha,
                  const PayoffPair& beta) {
  return {alpha.sender * y.sender + beta.sender,
          alpha.receiver * y.receiver + beta.receiver};
}

bool Close(const PayoffPair& a, const PayoffPair& b, double tol) {
  const double scale = std::max({1.0, std::abs(a.sender), std::abs(a.receiver)});
  return std::abs(a.sender - b.sender) <= tol * scale &&
         std::abs(a.receiver - b.receiver) <= tol * scale;
}

double SegmentDistance(const PayoffPair& p, const PayoffPair& a,
                       const PayoffPair& b) {
  const double vx = b.sender - a.sender;
  const double vy = b.receiver - a.receiver;
  const double wx = p.sender - a.sender;
  const double wy = p.receiver - a.receiver;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? (wx * vx + wy * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = wx - t * vx;
  const double dy = wy - t * vy;
  return std::sqrt(dx * dx + dy * dy);
}

bool SwapInvariant(const BargainingGame& game) {
  const PayoffPair& d = game.disagreement;
  if (std::abs(d.sender - d.receiver) > kProbabilityTolerance) return false;
  if (game.IsFinite()) {
    const auto& pts = game.points();
    for (const auto& y : pts) {
      const PayoffPair swapped{y.receiver, y.sender};
      const bool found = std::any_of(pts.begin(), pts.end(), [&](const PayoffPair& z) {
        return Close(z, swapped, kSolverTolerance);
      });
      if (!found) return false;
    }
    return true;
  }
  const auto pts = SampleCurve(game.frontier(), 2001);
  double scale = 1.0;
  for (const auto& y : pts) {
    scale = std::max({scale, std::abs(y.sender), std::abs(y.receiver)});
  }
  for (const auto& y : pts) {
    const PayoffPair swapped{y.receiver, y.sender};
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < pts.size() && dist > 1e-7 * scale; ++k) {
      dist = std::min(dist, SegmentDistance(swapped, pts[k], pts[k + 1]));
    }
    if (dist > 1e-7 * scale) return false;
  }
  return true;
}

std::string Describe(const PayoffPair& y) {
  std::ostringstream out;
  out.precision(10);
  out << "(" << y.sender << ", " << y.receiver << ")";
  return out.str();
}

}  // namespace

void RubinsteinSpec::Validate() const {
  if (!(pie > 0.0) || !std::isfinite(pie)) {
    throw ValidationError("pie must be positive and finite");
  }
  for (double delta : {delta_1, delta_2}) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
      throw ValidationError("discount factors must lie in [0, 1]");
    }
  }
}

double NashProduct(const PayoffPair& y, const PayoffPair& d) {
  return (y.sender - d.sender) * (y.receiver - d.receiver);
}

Agreement NashSolution(const BargainingGame& game, const NashOptions& options) {
  if (game.IsFinite()) {
    if (game.points().empty()) throw ValidationError("feasibility set is empty");
    return SolveFinite(game);
  }
  if (!game.frontier().curve) throw ValidationError("curve is not set");
  return SolveCurve(game, options);
}

Split RubinsteinSplit(const RubinsteinSpec& spec) {
  spec.Validate();
  if (spec.delta_1 == 1.0 && spec.delta_2 == 1.0) {
    throw SingularityError(
        "proposer share is singular at delta_1 = delta_2 = 1; the limit as "
        "both discount factors approach 1 is the split (0.5, 0.5) * pie");
  }
  const double x = (1.0 - spec.delta_2) / (1.0 - spec.delta_1 * spec.delta_2);
  Split out;
  out.proposer = spec.pie * x;
  out.responder = spec.pie - out.proposer;
  return out;
}

Agreement UltimatumSpe(double pie, bool responder_accepts_at_indifference,
                       double granularity) {
  if (!(pie > 0.0) || !std::isfinite(pie)) {
    throw ValidationError("pie must be positive and finite");
  }
  Agreement out;
  if (responder_accepts_at_indifference) {
    out.payoffs = {pie, 0.0};
  } else {
    if (!(granularity > 0.0)) {
      throw PreconditionError(
          "a responder who rejects at indifference needs a positive "
          "granularity: a continuous pie has no smallest acceptable offer");
    }
    if (granularity > pie) {
      throw PreconditionError("granularity exceeds the pie");
    }
    out.payoffs = {pie - granularity, granularity};
  }
  out.parameter = out.payoffs.sender;
  return out;
}

AxiomReport CheckAxioms(const BargainingSolver& solver, const BargainingGame& game) {
  AxiomReport report;
  const Agreement sol = solver(game);
  const bool finite = game.IsFinite();
  const double tol = finite ? kSolverTolerance : 1e-6;

  // Pareto.
  {
    const auto pts = finite ? game.points() : SampleCurve(game.frontier(), 10001);
    report.pareto = true;
    for (const auto& y : pts) {
      const bool weakly = y.sender >= sol.payoffs.sender - kSolverTolerance &&
                          y.receiver >= sol.payoffs.receiver - kSolverTolerance;
      const bool strictly = y.sender > sol.payoffs.sender + kSolverTolerance ||
                            y.receiver > sol.payoffs.receiver + kSolverTolerance;
      if (weakly && strictly) {
        report.pareto = false;
        report.notes.push_back("Pareto: " + Describe(y) + " dominates " +
                               Describe(sol.payoffs));
        break;
      }
    }
  }

  // Symmetry.
  report.symmetry_applicable = SwapInvariant(game);
  if (report.symmetry_applicable) {
    report.symmetry = std::abs(sol.payoffs.sender - sol.payoffs.receiver) <=
                      tol * std::max(1.0, std::abs(sol.payoffs.sender));
    if (!report.symmetry) {
      report.notes.push_back("symmetry: swap-invariant game solved at " +
                             Describe(sol.payoffs));
    }
  } else {
    report.symmetry = true;
    report.notes.push_back("symmetry: game is not swap-invariant; vacuous pass");
  }

  // Independence of irrelevant alternatives.
  report.iia = true;
  auto iia_compare = [&](const BargainingGame& sub, const std::string& what) {
    Agreement again;
    try {
      again = solver(sub);
    } catch (const PreconditionError&) {
      return;  // sub-game no longer satisfies the solver's precondition
    }
    if (!Close(again.payoffs, sol.payoffs, tol)) {
      report.iia = false;
      report.notes.push_back("IIA: " + what + " moved the solution to " +
                             Describe(again.payoffs));
    }
  };
  if (finite) {
    const auto& pts = game.points();
    std::vector<std::size_t> removable;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!Close(pts[k], sol.payoffs, kSolverTolerance)) removable.push_back(k);
    }
    const std::size_t stride = std::max<std::size_t>(1, removable.size() / 64);
    for (std::size_t r = 0; r < removable.size() && report.iia; r += stride) {
      BargainingGame sub = game;
      auto& sub_pts = std::get<std::vector<PayoffPair>>(sub.feasibility);
      sub_pts.erase(sub_pts.begin() + static_cast<std::ptrdiff_t>(removable[r]));
      iia_compare(sub, "removing point " + std::to_string(removable[r]));
    }
    if (report.iia && !removable.empty()) {
      BargainingGame sub = game;
      sub.feasibility = std::vector<PayoffPair>{sol.payoffs};
      iia_compare(sub, "removing every other point");
    }
  } else if (sol.parameter.has_value()) {
    const ParametricFrontier& f = game.frontier();
    const double t = *sol.parameter;
    const double w = (f.hi - f.lo) / 4.0;
    const std::vector<std::pair<double, double>> windows = {
        {std::max(f.lo, t - w), std::min(f.hi, t + w)},
        {f.lo, t},
        {t, f.hi}};
    for (const auto& [lo, hi] : windows) {
      if (!report.iia) break;
      BargainingGame sub = game;
      auto& sf = std::get<ParametricFrontier>(sub.feasibility);
      sf.lo = lo;
      sf.hi = hi;
      std::ostringstream what;
      what << "restricting the curve to [" << lo << ", " << hi << "]";
      iia_compare(sub, what.str());
    }
  } else {
    report.iia = false;
    report.notes.push_back("IIA: solver returned no curve parameter");
  }

  // Invariance to positive affine rescaling.
  {
    const PayoffPair alpha{2.0, 0.5};
    const PayoffPair beta{1.0, -3.0};
    BargainingGame mapped;
    mapped.disagreement = Affine(game.disagreement, alpha, beta);
    if (finite) {
      std::vector<PayoffPair> pts;
      for (const auto& y : game.points()) pts.push_back(Affine(y, alpha, beta));
      mapped.feasibility = std::move(pts);
    } else {
      ParametricFrontier f = game.frontier();
      auto inner = f.curve;
      f.curve = [inner, alpha, beta](double t) { return Affine(inner(t), alpha, beta); };
      mapped.feasibility = std::move(f);
    }
    const Agreement moved = solver(mapped);
    const PayoffPair expected = Affine(sol.payoffs, alpha, beta);
    report.affine_invariance = Close(moved.payoffs, expected, tol);
    if (!report.affine_invariance) {
      report.notes.push_back("affine: expected " + Describe(expected) + ", got " +
                             Describe(moved.payoffs));
    }
  }
  return report;
}

}  // namespace infobargain
