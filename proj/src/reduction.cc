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

#include "infobargain/reduction.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "infobargain/lp.h"
#include "infobargain/persuasion.h"

namespace infobargain {
namespace {

constexpr double kFloorSlack = 1e-12;
constexpr double kDedupTolerance = 1e-9;
constexpr std::size_t kChunkSchemes = 64;

// Spatial hash over payoff pairs; a point is new when no stored point lies
// within the tolerance in both coordinates.
class PointDeduper {
 public:
  bool Insert(const PayoffPair& y) {
    const std::int64_t cx = Cell(y.sender);
    const std::int64_t cy = Cell(y.receiver);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(Key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const PayoffPair& z : it->second) {
          if (std::abs(z.sender - y.sender) <= kDedupTolerance &&
              std::abs(z.receiver - y.receiver) <= kDedupTolerance) {
            return false;
          }
        }
      }
    }
    cells_[Key(cx, cy)].push_back(y);
    return true;
  }

 private:
  static std::int64_t Cell(double v) {
    return static_cast<std::int64_t>(std::floor(v / kDedupTolerance));
  }
  static std::uint64_t Key(std::int64_t x, std::int64_t y) {
    const auto ux = static_cast<std::uint64_t>(x);
    const auto uy = static_cast<std::uint64_t>(y);
    return ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x632BE59BD9B4E019ULL + (ux << 6));
  }
  std::unordered_map<std::uint64_t, std::vector<PayoffPair>> cells_;
};

// All vectors of `parts` nonnegative integers summing to `total`, in
// lexicographically decreasing order of the leading entries.
void Compositions(std::size_t total, std::size_t parts,
                  std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t k = total + 1; k-- > 0;) {
    prefix.push_back(k);
    Compositions(total - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<double>> SimplexGrid(std::size_t steps, std::size_t parts) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> prefix;
  Compositions(steps, parts, prefix, comps);
  std::vector<std::vector<double>> grid;
  grid.reserve(comps.size());
  for (const auto& c : comps) {
    std::vector<double> row(parts);
    for (std::size_t k = 0; k < parts; ++k) {
      row[k] = static_cast<double>(c[k]) / static_cast<double>(steps);
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

// Row-major matrix for grid index `index` (row 0 is the most significant
// digit in base |row_grid|).
std::vector<double> DecodeMatrix(std::size_t index, std::size_t rows,
                                 const std::vector<std::vector<double>>& row_grid) {
  const std::size_t base = row_grid.size();
  const std::size_t cols = row_grid.front().size();
  std::vector<double> m(rows * cols);
  for (std::size_t r = rows; r-- > 0;) {
    const auto& row = row_grid[index % base];
    std::copy(row.begin(), row.end(), m.begin() + static_cast<std::ptrdiff_t>(r * cols));
    index /= base;
  }
  return m;
}

Matrix ToMatrix(const std::vector<double>& flat, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::copy(flat.begin(), flat.end(), m.row(0).begin());
  return m;
}

std::size_t FrontierCount(double lo, double hi, double res) {
  if (!(res > 0.0)) throw ValidationError("resolution must be positive");
  if (!(hi >= lo)) throw ValidationError("family interval is empty");
  return static_cast<std::size_t>(std::floor((hi - lo) / res + 1e-9)) + 1;
}

double FrontierParameter(const SchemeFamily& f, double res, std::size_t k) {
  return std::min(f.hi, f.lo + static_cast<double>(k) * res);
}

std::size_t GridSteps(double res) {
  if (!(res > 0.0) || res > 1.0) throw ValidationError("grid step must lie in (0, 1]");
  const double steps = std::round(1.0 / res);
  if (std::abs(steps * res - 1.0) > 1e-9) {
    throw ValidationError("grid step must divide 1 evenly");
  }
  return static_cast<std::size_t>(steps);
}

struct ProfileGrid {
  std::vector<std::vector<double>> scheme_rows;
  std::vector<std::vector<double>> rule_rows;
  std::size_t num_schemes = 0;
  std::size_t num_rules = 0;
};

ProfileGrid MakeProfileGrid(const PersuasionTask& task, std::size_t steps,
                            std::size_t max_points) {
  ProfileGrid g;
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  g.scheme_rows = SimplexGrid(steps, na);
  g.rule_rows = SimplexGrid(steps, na);
  const double schemes = std::pow(static_cast<double>(g.scheme_rows.size()),
                                  static_cast<double>(ns));
  const double rules = std::pow(static_cast<double>(g.rule_rows.size()),
                                static_cast<double>(na));
  if (schemes * rules > static_cast<double>(max_points)) {
    throw PreconditionError("full-profile grid has " + std::to_string(schemes * rules) +
                            " points, above the limit of " +
                            std::to_string(max_points) + "; coarsen the resolution");
  }
  g.num_schemes = static_cast<std::size_t>(schemes);
  g.num_rules = static_cast<std::size_t>(rules);
  return g;
}

FeasibilityBuild EmptyBuild(const PersuasionTask& task, FeasibilityMode mode,
                            double res) {
  FeasibilityBuild b;
  b.mode = mode;
  b.resolution = res;
  b.num_states = task.num_states();
  b.num_signals = task.num_actions();
  b.num_actions = task.num_actions();
  return b;
}

FeasiblePoint FrontierPoint(const PersuasionTask& task, const SchemeFamily& family,
                            double t) {
  SignalingScheme scheme = family.scheme_at(t);
  ActionRule rule = BestResponsePosterior(task, scheme);
  FeasiblePoint p;
  p.payoffs = Evaluate(task, scheme, rule);
  p.scheme = scheme.Flatten();
  p.rule = rule.Flatten();
  p.parameter = t;
  return p;
}

FeasibilityBuild BuildFrontier(const PersuasionTask& task,
                               const FeasibilityOptions& options, bool parallel) {
  const double res = options.resolution.value_or(1e-3);
  const SchemeFamily family =
      options.family.has_value() ? *options.family : ParetoFrontierFamily(task);
  const std::size_t count = FrontierCount(family.lo, family.hi, res);
  std::vector<FeasiblePoint> raw(count);
  if (parallel) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t k = 0; k < count; ++k) {
      try {
        raw[k] = FrontierPoint(task, family, FrontierParameter(family, res, k));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      raw[k] = FrontierPoint(task, family, FrontierParameter(family, res, k));
    }
  }
  FeasibilityBuild build = EmptyBuild(task, FeasibilityMode::kObedientFrontier, res);
  if (!raw.empty()) build.num_signals = raw.front().rule.size() / task.num_actions();
  PointDeduper dedup;
  for (auto& p : raw) {
    if (dedup.Insert(p.payoffs)) build.points.push_back(std::move(p));
  }
  return build;
}

// Both builds run this kernel so they agree bit for bit; `parallel` only
// switches the OpenMP team on.
FeasibilityBuild BuildProfiles(const PersuasionTask& task, const FeasibilityOptions& options,
                               bool parallel) {
  const double res = options.resolution.value_or(1.0 / 50.0);
  const std::size_t steps = GridSteps(res);
  const ProfileGrid g = MakeProfileGrid(task, steps, options.max_grid_points);
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  const std::size_t nsig = na;

  // Rules decoded once; shared read-only across threads.
  std::vector<std::vector<double>> rules(g.num_rules);
  for (std::size_t j = 0; j < g.num_rules; ++j) rules[j] = DecodeMatrix(j, nsig, g.rule_rows);

  FeasibilityBuild build = EmptyBuild(task, FeasibilityMode::kFullProfile, res);
  PointDeduper dedup;
  std::vector<PayoffPair> buffer(kChunkSchemes * g.num_rules);
  for (std::size_t first = 0; first < g.num_schemes; first += kChunkSchemes) {
    const std::size_t last = std::min(g.num_schemes, first + kChunkSchemes);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::size_t i = first; i < last; ++i) {
      const std::vector<double> phi = DecodeMatrix(i, ns, g.scheme_rows);
      // W[sig][a] = sum_s mu0(s) phi(sig|s) r(s, a); payoffs are linear in pi.
      std::vector<double> wi(nsig * na, 0.0);
      std::vector<double> wj(nsig * na, 0.0);
      for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t sig = 0; sig < nsig; ++sig) {
          const double mass = task.prior[s] * phi[s * nsig + sig];
          if (mass == 0.0) continue;
          for (std::size_t a = 0; a < na; ++a) {
            wi[sig * na + a] += mass * task.reward_sender(s, a);
            wj[sig * na + a] += mass * task.reward_receiver(s, a);
          }
        }
      }
      PayoffPair* out = buffer.data() + (i - first) * g.num_rules;
      for (std::size_t j = 0; j < g.num_rules; ++j) {
        const std::vector<double>& pi = rules[j];
        double ri = 0.0;
        double rj = 0.0;
        for (std::size_t k = 0; k < nsig * na; ++k) {
          ri += pi[k] * wi[k];
          rj += pi[k] * wj[k];
        }
        out[j] = {ri, rj};
      }
    }
    for (std::size_t i = first; i < last; ++i) {
      const PayoffPair* row = buffer.data() + (i - first) * g.num_rules;
      for (std::size_t j = 0; j < g.num_rules; ++j) {
        if (!dedup.Insert(row[j])) continue;
        FeasiblePoint p;
        p.payoffs = row[j];
        p.scheme = DecodeMatrix(i, ns, g.scheme_rows);
        p.rule = rules[j];
        build.points.push_back(std::move(p));
      }
    }
  }
  return build;
}

// Clip LP round-off and renormalize rows of a rows x cols scheme.
SignalingScheme CleanScheme(const std::vector<double>& x, std::size_t rows,
                            std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = x[r * cols + c] < 1e-14 ? 0.0 : x[r * cols + c];
      m(r, c) = v;
      sum += v;
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) /= sum;
  }
  return SignalingScheme(std::move(m));
}

}  // namespace

PayoffPair DisagreementPoint(const PersuasionTask& task) {
  return Evaluate(task, BabblingScheme(task), BestResponsePrior(task));
}

std::optional<SignalingScheme> OptimizeObedient(const PersuasionTask& task,
                                                const ObedientTarget& target) {
  LinearProgram lp = ObedienceProgram(task);
  const auto ci = PayoffCoefficients(task, task.reward_sender);
  const auto cj = PayoffCoefficients(task, task.reward_receiver);
  lp.objective.assign(ci.size(), 0.0);
  for (std::size_t k = 0; k < ci.size(); ++k) {
    lp.objective[k] = target.sender_weight * ci[k] + target.receiver_weight * cj[k];
  }
  if (target.min_sender) lp.Add(ci, Relation::kGreaterEqual, *target.min_sender - kFloorSlack);
  if (target.min_receiver) {
    lp.Add(cj, Relation::kGreaterEqual, *target.min_receiver - kFloorSlack);
  }
  try {
    return SchemeFromLpSolution(task, SolveLp(lp).x);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

BetterOutcomes CheckBetterOutcomes(const PersuasionTask& task) {
  const PayoffPair d = DisagreementPoint(task);
  // Variables: phi entries, then t. maximize t s.t. gains >= t, obedience.
  LinearProgram lp = ObedienceProgram(task);
  const std::size_t n = lp.num_variables();
  for (auto& c : lp.constraints) c.coefficients.push_back(0.0);
  lp.objective.assign(n + 1, 0.0);
  lp.objective[n] = 1.0;
  auto ci = PayoffCoefficients(task, task.reward_sender);
  auto cj = PayoffCoefficients(task, task.reward_receiver);
  ci.push_back(-1.0);
  cj.push_back(-1.0);
  lp.Add(ci, Relation::kGreaterEqual, d.sender);
  lp.Add(cj, Relation::kGreaterEqual, d.receiver);
  const LpSolution sol = SolveLp(lp);
  BetterOutcomes out;
  out.margin = sol.x[n];
  if (out.margin <= kSolverTolerance) return out;
  SignalingScheme scheme = SchemeFromLpSolution(task, sol.x);
  ActionRule rule = BestResponsePosterior(task, scheme);
  const PayoffPair payoffs = Evaluate(task, scheme, rule);
  out.holds = payoffs.sender > d.sender && payoffs.receiver > d.receiver;
  if (out.holds) out.witness = BetterOutcomeWitness{scheme, rule, payoffs};
  return out;
}

SchemeFamily ParetoFrontierFamily(const PersuasionTask& task) {
  const double best_sender = SolveOptimalScheme(task).payoffs.sender;
  const ActionRule obey = ObedientRule(task.num_actions());
  auto receiver_value = [&](const std::optional<SignalingScheme>& s) {
    if (!s) throw SolverError("frontier endpoint LP infeasible", {});
    return Evaluate(task, *s, obey).receiver;
  };
  const double lo = receiver_value(OptimizeObedient(task, {0.0, 1.0, best_sender, {}}));
  const double hi = receiver_value(OptimizeObedient(task, {0.0, 1.0, {}, {}}));
  SchemeFamily f;
  f.lo = 0.0;
  f.hi = 1.0;
  f.parameter_name = "tau";
  f.scheme_at = [task, lo, hi](double tau) {
    const double floor = lo + tau * (hi - lo);
    auto s = OptimizeObedient(task, {1.0, 0.0, {}, floor});
    if (!s) throw SolverError("frontier LP infeasible", {});
    return *s;
  };
  return f;
}

SchemeFamily LinearSchemeFamily(const SignalingScheme& at_lo,
                                const SignalingScheme& at_hi, double lo, double hi,
                                std::string parameter_name) {
  if (at_lo.num_rows() != at_hi.num_rows() || at_lo.num_cols() != at_hi.num_cols()) {
    throw ShapeError("family endpoints differ in shape");
  }
  if (!(hi > lo)) throw ValidationError("family interval is empty");
  SchemeFamily f;
  f.lo = lo;
  f.hi = hi;
  f.parameter_name = std::move(parameter_name);
  f.scheme_at = [at_lo, at_hi, lo, hi](double t) {
    const double w = (t - lo) / (hi - lo);
    Matrix m(at_lo.num_rows(), at_lo.num_cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = (1.0 - w) * at_lo(r, c) + w * at_hi(r, c);
      }
    }
    return SignalingScheme(std::move(m));
  };
  return f;
}

SignalingScheme FeasibilityBuild::SchemeOf(std::size_t k) const {
  return SignalingScheme(ToMatrix(points.at(k).scheme, num_states, num_signals));
}

ActionRule FeasibilityBuild::RuleOf(std::size_t k) const {
  return ActionRule(ToMatrix(points.at(k).rule, num_signals, num_actions));
}

FeasibilityBuild BuildFeasibility(const PersuasionTask& task,
                                  const FeasibilityOptions& options) {
  RequireValid(task);
  if (options.mode == FeasibilityMode::kObedientFrontier) {
    return BuildFrontier(task, options, /*parallel=*/true);
  }
  return BuildProfiles(task, options, /*parallel=*/true);
}

FeasibilityBuild BuildFeasibilitySerial(const PersuasionTask& task,
                                        const FeasibilityOptions& options) {
  RequireValid(task);
  if (options.mode == FeasibilityMode::kObedientFrontier) {
    return BuildFrontier(task, options, /*parallel=*/false);
  }
  return BuildProfiles(task, options, /*parallel=*/false);
}

BargainingGame BuildBargainingGame(const PersuasionTask& task,
                                   const FeasibilityBuild& build) {
  if (!CheckBetterOutcomes(task).holds) {
    throw PreconditionError(
        "better-outcomes condition fails for task '" + task.label +
        "': no obedient scheme beats the disagreement point for both players");
  }
  BargainingGame game;
  game.disagreement = DisagreementPoint(task);
  std::vector<PayoffPair> pts;
  pts.reserve(build.points.size());
  bool improvable = false;
  for (const auto& p : build.points) {
    pts.push_back(p.payoffs);
    improvable = improvable || (p.payoffs.sender > game.disagreement.sender &&
                                p.payoffs.receiver > game.disagreement.receiver);
  }
  if (!improvable) {
    throw PreconditionError(
        "the built feasibility set has no point beating the disagreement point "
        "for both players; refine the resolution");
  }
  game.feasibility = std::move(pts);
  return game;
}

void WriteFeasibilityCsv(std::ostream& out, const FeasibilityBuild& build) {
  const bool frontier = build.mode == FeasibilityMode::kObedientFrontier;
  if (frontier) out << "parameter,";
  for (std::size_t s = 0; s < build.num_states; ++s) {
    for (std::size_t sig = 0; sig < build.num_signals; ++sig) {
      out << "phi_" << s << "_" << sig << ",";
    }
  }
  for (std::size_t sig = 0; sig < build.num_signals; ++sig) {
    for (std::size_t a = 0; a < build.num_actions; ++a) {
      out << "pi_" << sig << "_" << a << ",";
    }
  }
  out << "sender,receiver\n";
  const auto old_precision = out.precision(17);
  for (const auto& p : build.points) {
    if (frontier) out << p.parameter.value_or(0.0) << ",";
    for (double v : p.scheme) out << v << ",";
    for (double v : p.rule) out << v << ",";
    out << p.payoffs.sender << "," << p.payoffs.receiver << "\n";
  }
  out.precision(old_precision);
}

NashPersuasion SolveViaNashProduct(const PersuasionTask& task, double resolution) {
  RequireValid(task);
  if (!CheckBetterOutcomes(task).holds) {
    throw PreconditionError(
        "better-outcomes condition fails: the Nash product has no strictly "
        "positive value");
  }
  return SolveViaNashProduct(task, ParetoFrontierFamily(task), resolution);
}

NashPersuasion SolveViaNashProduct(const PersuasionTask& task,
                                   const SchemeFamily& family, double resolution) {
  RequireValid(task);
  BargainingGame game;
  game.disagreement = DisagreementPoint(task);
  ParametricFrontier curve;
  curve.lo = family.lo;
  curve.hi = family.hi;
  curve.curve = [&task, &family](double t) {
    const SignalingScheme s = family.scheme_at(t);
    return Evaluate(task, s, BestResponsePosterior(task, s));
  };
  game.feasibility = curve;
  NashOptions options;
  options.grid_samples = FrontierCount(family.lo, family.hi, resolution);
  Agreement agreement = NashSolution(game, options);
  SignalingScheme scheme = family.scheme_at(*agreement.parameter);
  ActionRule rule = BestResponsePosterior(task, scheme);
  return NashPersuasion{std::move(scheme), std::move(rule), agreement};
}

bool IsUninformative(const SignalingScheme& scheme) {
  for (std::size_t r = 1; r < scheme.num_rows(); ++r) {
    for (std::size_t c = 0; c < scheme.num_cols(); ++c) {
      if (std::abs(scheme(r, c) - scheme(0, c)) > kSolverTolerance) return false;
    }
  }
  return true;
}

CommitmentUpdater DefaultCommitmentUpdater(const PersuasionTask& task) {
  RequireValid(task);
  return [task](const SignalingScheme& phi, const ActionRule& pi) {
    const std::size_t ns = task.num_states();
    const std::size_t na = task.num_actions();
    const std::size_t nsig = pi.num_rows();
    if (phi.num_cols() != nsig || pi.num_cols() != na || phi.num_rows() != ns) {
      throw ShapeError("profile does not match task");
    }
    // Variables phi'(s, sig), row-major.
    LinearProgram lp;
    lp.objective.assign(ns * nsig, 0.0);
    std::vector<double> receiver_row(ns * nsig, 0.0);
    for (std::size_t s = 0; s < ns; ++s) {
      for (std::size_t sig = 0; sig < nsig; ++sig) {
        double ei = 0.0;
        double ej = 0.0;
        for (std::size_t a = 0; a < na; ++a) {
          ei += pi(sig, a) * task.reward_sender(s, a);
          ej += pi(sig, a) * task.reward_receiver(s, a);
        }
        lp.objective[s * nsig + sig] = task.prior[s] * ei;
        receiver_row[s * nsig + sig] = task.prior[s] * ej;
      }
      std::vector<double> row(ns * nsig, 0.0);
      for (std::size_t sig = 0; sig < nsig; ++sig) row[s * nsig + sig] = 1.0;
      lp.Add(std::move(row), Relation::kEqual, 1.0);
    }
    // The declared rule must stay a best response on every signal.
    for (std::size_t sig = 0; sig < nsig; ++sig) {
      for (std::size_t a = 0; a < na; ++a) {
        if (pi(sig, a) <= kProbabilityTolerance) continue;
        for (std::size_t alt = 0; alt < na; ++alt) {
          if (alt == a) continue;
          std::vector<double> row(ns * nsig, 0.0);
          for (std::size_t s = 0; s < ns; ++s) {
            row[s * nsig + sig] = task.prior[s] * (task.reward_receiver(s, a) -
                                                   task.reward_receiver(s, alt));
          }
          lp.Add(std::move(row), Relation::kGreaterEqual, 0.0);
        }
      }
    }
    const PayoffPair current = Evaluate(task, phi, pi);
    lp.Add(receiver_row, Relation::kGreaterEqual, current.receiver - kFloorSlack);

    SignalingScheme next = phi;
    try {
      const LpSolution sol = SolveLp(lp);
      bool phi_admissible = true;
      const auto flat = phi.Flatten();
      for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (std::size_t k = 0; k < flat.size(); ++k) lhs += c.coefficients[k] * flat[k];
        if ((c.relation == Relation::kGreaterEqual && lhs < c.rhs - kSolverTolerance) ||
            (c.relation == Relation::kEqual && std::abs(lhs - c.rhs) > kSolverTolerance)) {
          phi_admissible = false;
          break;
        }
      }
      if (!(phi_admissible && current.sender >= sol.value - kSolverTolerance)) {
        next = CleanScheme(sol.x, ns, nsig);
      }
    } catch (const InfeasibleError&) {
      // No admissible deviation; the sender keeps its scheme.
    }
    return std::make_pair(next, BestResponsePosterior(task, phi));
  };
}

bool VerifyJointCommitment(const PersuasionTask& task, const SignalingScheme& scheme,
                           const ActionRule& rule, const CommitmentUpdater& updater) {
  const CommitmentUpdater f = updater ? updater : DefaultCommitmentUpdater(task);
  const auto [next_scheme, next_rule] = f(scheme, rule);
  if (next_scheme.num_rows() != scheme.num_rows() ||
      next_scheme.num_cols() != scheme.num_cols() ||
      next_rule.num_rows() != rule.num_rows() || next_rule.num_cols() != rule.num_cols()) {
    return false;
  }
  const bool fixed = next_scheme.matrix().MaxAbsDiff(scheme.matrix()) <= kSolverTolerance &&
                     next_rule.matrix().MaxAbsDiff(rule.matrix()) <= kSolverTolerance;
  if (!fixed) return false;
  if (IsUninformative(scheme)) return false;
  const ActionRule pi0 = BestResponsePrior(task, rule.num_rows());
  return rule.matrix().MaxAbsDiff(pi0.matrix()) > kSolverTolerance;
}

}  // namespace infobargain
