// Copyright 2026 The grouppb Authors
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

/**
 * @file lp.hpp
 * @brief LP relaxation and an exact rational simplex.
 *
 *   maximize  Σ a(p) x_p
 *   s.t.      Σ_{p ∈ F} c(p) x_p ≤ b(F)   for every group F
 *             Σ_p c(p) x_p ≤ B
 *             0 ≤ x_p ≤ 1
 *
 * The simplex keeps a dense tableau with one slack per row and one slack
 * t_p = 1 - x_p per upper bound, starts from x = 0 (always feasible since
 * every right-hand side is non-negative) and pivots by Bland's rule.
 */

#ifndef GROUPPB_LP_HPP
#define GROUPPB_LP_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/rational.hpp"

namespace grouppb {

struct LpRow {
  std::string name;  // group id or "GLOBAL"
  std::vector<Rational> coeffs;  // dense, aligned with LpModel::variables
  Rational rhs;
};

struct LpModel {
  std::vector<std::string> variables;  // project ids
  std::vector<std::size_t> project_index;  // instance index per variable
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  /// Projects left out because they alone break some budget.
  std::vector<std::string> removed;
};

struct BasicSolution {
  std::vector<Rational> values;  // aligned with LpModel::variables
  /// Model variables in the final basis, ascending.
  std::vector<std::size_t> basis;
  Rational objective_value;
  std::uint64_t pivots = 0;

  std::size_t fractional_count() const {
    std::size_t k = 0;
    for (const auto& v : values) k += (v > 0 && v < 1) ? 1 : 0;
    return k;
  }
};

/// Projects whose cost alone exceeds B or the budget of a group they are in.
inline std::vector<bool> individually_feasible(const Problem& prob) {
  std::vector<bool> ok(prob.m(), true);
  for (std::size_t p = 0; p < prob.m(); ++p) {
    ok[p] = prob.cost[p] <= prob.budget;
    for (std::size_t j = 0; j < prob.g() && ok[p]; ++j) {
      if (prob.groups[j].test(p) && prob.cost[p] > prob.group_budget[j]) ok[p] = false;
    }
  }
  return ok;
}

inline LpModel lp_relaxation(const Instance& inst) {
  const Problem prob = compile(inst);
  const auto ok = individually_feasible(prob);
  LpModel model;
  for (std::size_t p = 0; p < prob.m(); ++p) {
    if (!ok[p]) {
      model.removed.push_back(inst.projects[p].id);
      continue;
    }
    model.variables.push_back(inst.projects[p].id);
    model.project_index.push_back(p);
    model.objective.emplace_back(prob.score[p]);
  }
  auto make_row = [&](std::string name, const Problem::Set* members, Amount rhs) {
    LpRow row;
    row.name = std::move(name);
    row.rhs = Rational(rhs);
    for (std::size_t p : model.project_index) {
      row.coeffs.emplace_back((members == nullptr || members->test(p)) ? prob.cost[p] : 0);
    }
    model.rows.push_back(std::move(row));
  };
  for (std::size_t j = 0; j < prob.g(); ++j) make_row(inst.groups[j].id, &prob.groups[j], prob.group_budget[j]);
  make_row("GLOBAL", nullptr, prob.budget);
  return model;
}

/// Optimal basic solution. Requires non-negative right-hand sides.
inline BasicSolution simplex_solve(const LpModel& model) {
  const std::size_t n = model.variables.size();
  const std::size_t r = model.rows.size();
  const std::size_t rows = r + n;
  const std::size_t cols = n + r + n;  // x, row slacks, bound slacks
  for (const auto& row : model.rows) {
    if (row.rhs < 0) throw Error(ErrorCode::InvalidArgument, "negative right-hand side in row " + row.name);
  }

  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = model.rows[i].coeffs[j];
    tab[i][n + i] = 1;
    tab[i][cols] = model.rows[i].rhs;
    basis[i] = n + i;
  }
  for (std::size_t k = 0; k < n; ++k) {
    tab[r + k][k] = 1;
    tab[r + k][n + r + k] = 1;
    tab[r + k][cols] = 1;
    basis[r + k] = n + r + k;
  }
  // Reduced costs; z[cols] holds minus the objective value.
  std::vector<Rational> z(cols + 1);
  for (std::size_t j = 0; j < n; ++j) z[j] = model.objective[j];

  BasicSolution sol;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Every column is bounded by its bound row, so a leaving row exists.
    const Rational pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational factor = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (tab[leave][j] != 0) tab[i][j] -= factor * tab[leave][j];
      }
    }
    if (z[enter] != 0) {
      const Rational factor = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (tab[leave][j] != 0) z[j] -= factor * tab[leave][j];
      }
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.values.assign(n, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < n) {
      sol.values[basis[i]] = tab[i][cols];
      sol.basis.push_back(basis[i]);
    }
  }
  std::sort(sol.basis.begin(), sol.basis.end());
  sol.objective_value = -z[cols];
  return sol;
}

}  // namespace grouppb

#endif  // GROUPPB_LP_HPP
