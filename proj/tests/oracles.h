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

// Reference computations for tests. Nothing here calls into the solvers
// under test; the LP oracle enumerates vertices directly.

#ifndef INFOBARGAIN_TESTS_ORACLES_H_
#define INFOBARGAIN_TESTS_ORACLES_H_

#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "infobargain/core.h"

namespace infobargain::testing {

inline PersuasionTask RandomTask(std::mt19937_64& gen, std::size_t ns, std::size_t na) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> signed_unit(-1.0, 1.0);
  PersuasionTask t;
  double total = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    t.states.push_back("s" + std::to_string(s));
    t.prior.push_back(0.05 + unit(gen));
    total += t.prior.back();
  }
  for (double& p : t.prior) p /= total;
  for (std::size_t a = 0; a < na; ++a) t.actions.push_back("a" + std::to_string(a));
  t.reward_sender = Matrix(ns, na);
  t.reward_receiver = Matrix(ns, na);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < na; ++a) {
      t.reward_sender(s, a) = unit(gen);
      t.reward_receiver(s, a) = signed_unit(gen);
    }
  }
  t.label = "random";
  return t;
}

inline SignalingScheme RandomScheme(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  std::exponential_distribution<double> e(1.0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double total = 0.0;
    for (std::size_t c = 0; c < cols; ++c) total += (m(r, c) = e(gen));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) /= total;
    // Renormalize the last entry so the row sums to one in floating point.
    double rest = 0.0;
    for (std::size_t c = 0; c + 1 < cols; ++c) rest += m(r, c);
    m(r, cols - 1) = std::max(0.0, 1.0 - rest);
  }
  return SignalingScheme(std::move(m));
}

inline ActionRule RandomRule(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  return ActionRule(RandomScheme(gen, rows, cols).matrix());
}

// Sender value of the obedience program for signal = action, by brute-force
// enumeration of basic solutions. Variables phi(s, a) row-major.
inline double VertexEnumerationValue(const PersuasionTask& task) {
  const std::size_t ns = task.num_states();
  const std::size_t na = task.num_actions();
  const std::size_t n = ns * na;
  std::vector<std::vector<double>> eq;  // rows of the equality system
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t a = 0; a < na; ++a) row[s * na + a] = 1.0;
    row[n] = 1.0;
    eq.push_back(row);
  }
  std::vector<std::vector<double>> ineq;  // g . x >= 0
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(n, 0.0);
    row[k] = 1.0;
    ineq.push_back(row);
  }
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      if (a == b) continue;
      std::vector<double> row(n, 0.0);
      for (std::size_t s = 0; s < ns; ++s) {
        row[s * na + a] =
            task.prior[s] * (task.reward_receiver(s, a) - task.reward_receiver(s, b));
      }
      ineq.push_back(row);
    }
  }
  const std::size_t pick = n - ns;
  double best = -1e300;
  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // Assemble [A | b] and eliminate with partial pivoting.
    std::vector<std::vector<double>> m = eq;
    for (std::size_t k : idx) {
      std::vector<double> row = ineq[k];
      row.push_back(0.0);
      m.push_back(row);
    }
    bool singular = false;
    for (std::size_t c = 0; c < n && !singular; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
      }
      if (std::abs(m[p][c]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(m[p], m[c]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = m[r][c] / m[c][c];
        if (f == 0.0) continue;
        for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
      }
    }
    if (!singular) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = m[k][n] / m[k][k];
      bool feasible = true;
      for (const auto& g : ineq) {
        double v = 0.0;
        for (std::size_t k = 0; k < n; ++k) v += g[k] * x[k];
        if (v < -1e-9) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        double value = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
          for (std::size_t a = 0; a < na; ++a) {
            value += task.prior[s] * x[s * na + a] * task.reward_sender(s, a);
          }
        }
        best = std::max(best, value);
      }
    }
    // Next combination.
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == ineq.size() - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

// Grid search over 2x2 schemes (x1, x2) with the given step; a grid point
// counts only when every recommendation is obeyed.
inline double SchemeGridValue2x2(const PersuasionTask& task, double step) {
  const int n = static_cast<int>(std::lround(1.0 / step));
  const auto& rj = task.reward_receiver;
  const auto& ri = task.reward_sender;
  const double m0 = task.prior[0];
  const double m1 = task.prior[1];
  double best = -1e300;
  for (int i = 0; i <= n; ++i) {
    const double x1 = static_cast<double>(i) / n;
    for (int j = 0; j <= n; ++j) {
      const double x2 = static_cast<double>(j) / n;
      // Unnormalized posteriors after signal 1 and signal 0.
      const double g1 = m0 * x1 * (rj(0, 1) - rj(0, 0)) + m1 * x2 * (rj(1, 1) - rj(1, 0));
      const double g0 =
          m0 * (1 - x1) * (rj(0, 0) - rj(0, 1)) + m1 * (1 - x2) * (rj(1, 0) - rj(1, 1));
      if (g1 < -1e-12 || g0 < -1e-12) continue;
      const double v = m0 * ((1 - x1) * ri(0, 0) + x1 * ri(0, 1)) +
                       m1 * ((1 - x2) * ri(1, 0) + x2 * ri(1, 1));
      best = std::max(best, v);
    }
  }
  return best;
}

// Textbook sample correlation.
inline double NaivePearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// P(T = t) for t = 1..cap under per-round stopping probability p.
inline std::vector<double> TruncatedGeometricPmf(double p, int cap) {
  std::vector<double> pmf(cap);
  for (int t = 1; t < cap; ++t) pmf[t - 1] = std::pow(1.0 - p, t - 1) * p;
  pmf[cap - 1] = std::pow(1.0 - p, cap - 1);
  return pmf;
}

}  // namespace infobargain::testing

#endif  // INFOBARGAIN_TESTS_ORACLES_H_
