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
 * @file milp.hpp
 * @brief Mixed integer formulation over (group set, score) types.
 *
 * Projects of type (R, w) lie in exactly the groups R and have score w. With
 * the members of each type sorted by cost, c(R,w,i) is the i-th cheapest:
 *
 *   maximize   Σ w · x_{R,w}
 *   s.t.       x_{R,w} = Σ_i y_{R,w,i}                         (coupling)
 *              Σ_{R ∋ F} Σ_i c(R,w,i) · y_{R,w,i} ≤ b(F)        (per group)
 *              Σ_{R} Σ_i c(R,w,i) · y_{R,w,i} ≤ B              (global)
 *              x_{R,w} ∈ {0, ..., |(R,w)|},  y_{R,w,i} ∈ [0, 1]
 *
 * Any solution can be rounded to y = 1 on the x_{R,w} cheapest members of
 * each type without raising a left-hand side, so the integer optimum equals
 * the instance optimum. Solving is left to external tools.
 */

#ifndef GROUPPB_MILP_HPP
#define GROUPPB_MILP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/oracle.hpp"

namespace grouppb {

struct MilpType {
  std::vector<std::string> groups;   // R, sorted ids
  std::vector<std::size_t> group_indices;
  Amount score = 0;                  // w
  std::vector<std::string> members;  // cheapest first, ties by id
  std::vector<Amount> costs;         // c(R,w,i), non-decreasing

  std::size_t multiplicity() const { return members.size(); }
};

struct MilpModel {
  /// Ordered by R (lexicographic on sorted ids), then by w.
  std::vector<MilpType> types;
  std::vector<std::string> group_ids;
  std::vector<Amount> group_budgets;
  Amount budget = 0;

  std::size_t integer_vars() const { return types.size(); }
  std::size_t real_vars() const {
    std::size_t k = 0;
    for (const auto& t : types) k += t.multiplicity();
    return k;
  }
  /// Coupling rows, both bounds of every y, group rows and the global row.
  std::size_t row_count() const { return types.size() + 2 * real_vars() + group_ids.size() + 1; }
};

inline MilpModel build_milp(const Instance& inst) {
  const Problem prob = compile(inst);
  MilpModel model;
  model.budget = prob.budget;
  for (std::size_t j = 0; j < prob.g(); ++j) {
    model.group_ids.push_back(inst.groups[j].id);
    model.group_budgets.push_back(prob.group_budget[j]);
  }
  using Key = std::pair<std::vector<std::string>, Amount>;
  std::vector<std::pair<Key, std::size_t>> keyed;  // (key, project)
  for (std::size_t p = 0; p < prob.m(); ++p) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < prob.g(); ++j) {
      if (prob.groups[j].test(p)) r.push_back(inst.groups[j].id);
    }
    std::sort(r.begin(), r.end());
    keyed.push_back({{std::move(r), prob.score[p]}, p});
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    return std::tie(a.first, prob.cost[a.second], inst.projects[a.second].id) <
           std::tie(b.first, prob.cost[b.second], inst.projects[b.second].id);
  });
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (k == 0 || keyed[k].first != keyed[k - 1].first) {
      MilpType t;
      t.groups = keyed[k].first.first;
      t.score = keyed[k].first.second;
      for (const auto& id : t.groups) {
        t.group_indices.push_back(static_cast<std::size_t>(
            std::find(model.group_ids.begin(), model.group_ids.end(), id) - model.group_ids.begin()));
      }
      model.types.push_back(std::move(t));
    }
    const std::size_t p = keyed[k].second;
    model.types.back().members.push_back(inst.projects[p].id);
    model.types.back().costs.push_back(prob.cost[p]);
  }
  return model;
}

namespace detail {

inline std::string milp_type_tag(const MilpType& t) {
  std::string r;
  for (std::size_t k = 0; k < t.groups.size(); ++k) {
    if (k > 0) r += '.';
    r += t.groups[k];
  }
  return r + "_" + std::to_string(t.score);
}

}  // namespace detail

inline std::string milp_x_name(const MilpType& t) { return "x_" + detail::milp_type_tag(t); }

inline std::string milp_y_name(const MilpType& t, std::size_t i) {
  return "y_" + detail::milp_type_tag(t) + "_" + std::to_string(i + 1);
}

/// LP-format text. Group sets in names are joined with '.', and an empty
/// group set leaves the slot empty ("x__3").
inline std::string export_lp_format(const MilpModel& model) {
  std::ostringstream out;
  auto term = [&](bool& first, Amount coeff, const std::string& var) {
    if (first) {
      out << (coeff < 0 ? " - " : " ") << (coeff < 0 ? -coeff : coeff) << ' ' << var;
    } else {
      out << (coeff < 0 ? " - " : " + ") << (coeff < 0 ? -coeff : coeff) << ' ' << var;
    }
    first = false;
  };

  out << "\\ Group-PB MILP over project types\n";
  out << "Maximize\n obj:";
  bool first = true;
  for (const auto& t : model.types) term(first, t.score, milp_x_name(t));
  if (first) out << " 0";
  out << "\nSubject To\n";

  for (const auto& t : model.types) {
    out << " couple_" << detail::milp_type_tag(t) << ": " << milp_x_name(t);
    for (std::size_t i = 0; i < t.multiplicity(); ++i) out << " - " << milp_y_name(t, i);
    out << " = 0\n";
  }
  auto budget_row = [&](const std::string& name, std::optional<std::size_t> group, Amount rhs) {
    std::ostringstream terms;
    bool any = false;
    for (const auto& t : model.types) {
      if (group && std::find(t.group_indices.begin(), t.group_indices.end(), *group) == t.group_indices.end()) {
        continue;
      }
      for (std::size_t i = 0; i < t.multiplicity(); ++i) {
        terms << (any ? " + " : "") << t.costs[i] << ' ' << milp_y_name(t, i);
        any = true;
      }
    }
    if (any) out << ' ' << name << ": " << terms.str() << " <= " << rhs << '\n';
  };
  for (std::size_t j = 0; j < model.group_ids.size(); ++j) {
    budget_row("group_" + model.group_ids[j], j, model.group_budgets[j]);
  }
  budget_row("global", std::nullopt, model.budget);

  out << "Bounds\n";
  for (const auto& t : model.types) out << " 0 <= " << milp_x_name(t) << " <= " << t.multiplicity() << '\n';
  for (const auto& t : model.types) {
    for (std::size_t i = 0; i < t.multiplicity(); ++i) out << " 0 <= " << milp_y_name(t, i) << " <= 1\n";
  }
  out << "General\n";
  for (const auto& t : model.types) out << ' ' << milp_x_name(t) << '\n';
  out << "End\n";
  return out.str();
}

/// Best objective over all integer x with cheapest-first y. Throws
/// Error(TooLarge) above `limit` assignments.
inline Amount milp_enumerate(const MilpModel& model, std::uint64_t limit = 1'000'000) {
  std::uint64_t space = 1;
  for (const auto& t : model.types) {
    space *= t.multiplicity() + 1;
    if (space > limit) throw Error(ErrorCode::TooLarge, "MILP assignment space exceeds " + std::to_string(limit));
  }
  const std::size_t n = model.types.size();
  // Prefix sums give the cost of the x cheapest members.
  std::vector<std::vector<Amount>> prefix(n);
  for (std::size_t k = 0; k < n; ++k) {
    prefix[k].assign(1, 0);
    for (Amount c : model.types[k].costs) prefix[k].push_back(prefix[k].back() + c);
  }
  std::vector<std::size_t> x(n, 0);
  Amount best = -1;
  for (std::uint64_t step = 0; step < space; ++step) {
    std::vector<Amount> group(model.group_ids.size(), 0);
    Amount total = 0;
    Amount value = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Amount c = prefix[k][x[k]];
      total += c;
      value += model.types[k].score * static_cast<Amount>(x[k]);
      for (std::size_t j : model.types[k].group_indices) group[j] += c;
    }
    bool ok = total <= model.budget;
    for (std::size_t j = 0; j < group.size() && ok; ++j) ok = group[j] <= model.group_budgets[j];
    if (ok) best = std::max(best, value);
    for (std::size_t k = 0; k < n; ++k) {
      if (++x[k] <= model.types[k].multiplicity()) break;
      x[k] = 0;
    }
  }
  return best;
}

/// True iff the exhaustive MILP optimum equals the brute-force optimum.
inline bool validate_milp_tiny(const MilpModel& model, const Instance& inst) {
  const Amount milp = milp_enumerate(model);
  const OracleResult oracle = solve_bruteforce(inst);
  return oracle.optimum_utility && *oracle.optimum_utility == milp;
}

}  // namespace grouppb

#endif  // GROUPPB_MILP_HPP
