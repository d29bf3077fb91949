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
 * @file types.hpp
 * @brief Project types and the type-enumeration solvers.
 *
 * The type of a project is the exact set R of groups containing it. Every
 * group's cost is a sum over the types R with F ∈ R, so a bundle can be
 * replaced, type by type, with the cheapest subset of the same type reaching
 * the same utility without breaking any budget.
 *
 * The decision solver splits the target u over the non-empty types as a
 * composition μ_1 + ... + μ_t = u, takes the cheapest subset of each type
 * with utility at least μ_R, and checks every budget on the aggregate.
 */

#ifndef GROUPPB_TYPES_HPP
#define GROUPPB_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/outcome.hpp"

namespace grouppb {

struct ProjectType {
  Problem::Set groups;                  // R, indexed by group
  std::vector<std::string> group_ids;   // R by id, sorted
  std::vector<std::size_t> members;     // project indices, ascending
  std::vector<std::string> member_ids;  // sorted
};

struct TypeIndex {
  /// Non-empty types ordered by their first member.
  std::vector<ProjectType> types;
  std::size_t t() const { return types.size(); }
};

namespace detail {

inline TypeIndex type_index(const Problem& prob, const std::vector<std::string>& group_ids,
                            const std::vector<std::string>& project_ids) {
  TypeIndex idx;
  std::map<Problem::Set, std::size_t> slot;
  for (std::size_t p = 0; p < prob.m(); ++p) {
    Problem::Set r(prob.g());
    for (std::size_t j = 0; j < prob.g(); ++j) {
      if (prob.groups[j].test(p)) r.set(j);
    }
    auto [it, inserted] = slot.try_emplace(r, idx.types.size());
    if (inserted) {
      ProjectType type;
      type.groups = r;
      for (std::size_t j = 0; j < prob.g(); ++j) {
        if (r.test(j)) type.group_ids.push_back(group_ids[j]);
      }
      std::sort(type.group_ids.begin(), type.group_ids.end());
      idx.types.push_back(std::move(type));
    }
    idx.types[it->second].members.push_back(p);
    idx.types[it->second].member_ids.push_back(project_ids[p]);
  }
  return idx;
}

}  // namespace detail

inline TypeIndex type_index(const Instance& inst) {
  std::vector<std::string> gids;
  std::vector<std::string> pids;
  for (const auto& g : inst.groups) gids.push_back(g.id);
  for (const auto& p : inst.projects) pids.push_back(p.id);
  return detail::type_index(compile(inst), gids, pids);
}

enum class TableMode { AtLeast, Exact };

/// Per type: cost[μ] and the project indices realizing it (kInfinity and an
/// empty list when unreachable).
struct TypeTable {
  std::vector<Amount> cost;
  std::vector<std::vector<std::size_t>> bundle;
};

struct TypeDpTable {
  TableMode mode = TableMode::AtLeast;
  Amount u_cap = 0;
  std::vector<TypeTable> tables;  // aligned with TypeIndex::types
};

namespace detail {

/// 0/1 knapsack over `members` minimizing cost per utility in [0, cap]. With
/// `saturate`, utilities above cap land on cap.
inline TypeTable type_knapsack(const Problem& prob, const std::vector<std::size_t>& members,
                               std::size_t cap, bool saturate) {
  TypeTable tab;
  tab.cost.assign(cap + 1, kInfinity);
  tab.bundle.assign(cap + 1, {});
  tab.cost[0] = 0;
  for (std::size_t p : members) {
    const auto a = static_cast<std::size_t>(prob.score[p]);
    if (a == 0) continue;
    TypeTable next = tab;
    for (std::size_t z = 0; z <= cap; ++z) {
      if (tab.cost[z] == kInfinity) continue;
      std::size_t to = z + a;
      if (to > cap) {
        if (!saturate) continue;
        to = cap;
      }
      const Amount c = tab.cost[z] + prob.cost[p];
      if (c < next.cost[to]) {
        next.cost[to] = c;
        next.bundle[to] = tab.bundle[z];
        next.bundle[to].push_back(p);
      }
    }
    tab = std::move(next);
  }
  return tab;
}

inline TypeDpTable type_tables(const Problem& prob, const TypeIndex& idx, Amount u_cap, TableMode mode) {
  TypeDpTable out;
  out.mode = mode;
  out.u_cap = u_cap;
  const auto cap = static_cast<std::size_t>(std::max<Amount>(u_cap, 0));
  for (const auto& type : idx.types) {
    TypeTable tab = type_knapsack(prob, type.members, cap, mode == TableMode::AtLeast);
    if (mode == TableMode::AtLeast) {
      for (std::size_t z = cap; z-- > 0;) {
        if (tab.cost[z + 1] < tab.cost[z]) {
          tab.cost[z] = tab.cost[z + 1];
          tab.bundle[z] = tab.bundle[z + 1];
        }
      }
    }
    out.tables.push_back(std::move(tab));
  }
  return out;
}

}  // namespace detail

/// Cheapest subsets per type. AtLeast: utility ≥ μ; Exact: utility = μ.
inline TypeDpTable type_min_cost_tables(const Instance& inst, const TypeIndex& idx, Amount u_cap,
                                        TableMode mode) {
  return detail::type_tables(compile(inst), idx, u_cap, mode);
}

struct TypesOptions {
  std::uint64_t node_cap = 10'000'000;
};

/// Number of compositions of u into t non-negative parts, saturating at
/// 2^63. Used as the up-front size estimate of one decision call.
inline std::uint64_t estimate_type_compositions(std::size_t t, Amount u) {
  if (t == 0) return 1;
  // C(u + t - 1, t - 1), built incrementally.
  long double value = 1;
  for (std::size_t i = 1; i < t; ++i) {
    value = value * static_cast<long double>(u + static_cast<Amount>(i)) / static_cast<long double>(i);
    if (value > 9.2e18L) return std::uint64_t{1} << 63;
  }
  return static_cast<std::uint64_t>(std::llround(value));
}

namespace detail {

class TypeSearch {
 public:
  TypeSearch(const Problem& prob, const TypeIndex& idx, const TypeDpTable& tables,
             std::uint64_t node_cap, std::uint64_t& nodes)
      : prob_(prob), idx_(idx), tables_(tables), node_cap_(node_cap), nodes_(nodes) {
    const std::size_t t = idx.t();
    reach_.assign(t + 1, 0);
    for (std::size_t r = t; r-- > 0;) {
      const auto& cost = tables.tables[r].cost;
      std::size_t top = 0;
      for (std::size_t z = 0; z < cost.size(); ++z) {
        if (cost[z] != kInfinity) top = z;
      }
      reach_[r] = reach_[r + 1] + static_cast<Amount>(top);
    }
    used_.assign(prob.g() + 1, 0);
    pick_.assign(t, 0);
  }

  /// Looks for allocations summing to exactly u. With `minimize`, keeps the
  /// cheapest; otherwise stops at the first.
  std::optional<std::vector<std::size_t>> run(Amount u, bool minimize) {
    minimize_ = minimize;
    best_cost_ = kInfinity;
    best_.reset();
    if (reach_[0] >= u) descend(0, u);
    if (!best_) return std::nullopt;
    std::vector<std::size_t> indices;
    for (std::size_t r = 0; r < idx_.t(); ++r) {
      const auto& b = tables_.tables[r].bundle[(*best_)[r]];
      indices.insert(indices.end(), b.begin(), b.end());
    }
    std::sort(indices.begin(), indices.end());
    return indices;
  }

 private:
  bool descend(std::size_t r, Amount remaining) {
    if (++nodes_ > node_cap_) {
      throw Error(ErrorCode::SearchBudgetExceeded, "type enumeration exceeded the node cap");
    }
    const std::size_t t = idx_.t();
    if (r == t) {
      if (remaining != 0) return false;
      const Amount total = used_[prob_.g()];
      if (total < best_cost_) {
        best_cost_ = total;
        best_ = pick_;
      }
      return !minimize_;
    }
    const auto& tab = tables_.tables[r];
    const auto& groups = idx_.types[r].groups;
    const Amount lo = std::max<Amount>(0, remaining - reach_[r + 1]);
    for (Amount mu = lo; mu <= remaining; ++mu) {
      if (static_cast<std::size_t>(mu) >= tab.cost.size()) break;
      const Amount c = tab.cost[static_cast<std::size_t>(mu)];
      // At-least costs are non-decreasing in μ, so the first miss ends the scan.
      if (c == kInfinity || !fits(groups, c)) break;
      charge(groups, c, +1);
      pick_[r] = static_cast<std::size_t>(mu);
      const bool stop = descend(r + 1, remaining - mu);
      charge(groups, c, -1);
      if (stop) return true;
    }
    return false;
  }

  bool fits(const Problem::Set& groups, Amount c) const {
    if (used_[prob_.g()] + c > prob_.budget) return false;
    if (minimize_ && used_[prob_.g()] + c >= best_cost_) return false;
    for (auto j = groups.find_first(); j != Problem::Set::npos; j = groups.find_next(j)) {
      if (used_[j] + c > prob_.group_budget[j]) return false;
    }
    return true;
  }

  void charge(const Problem::Set& groups, Amount c, int sign) {
    used_[prob_.g()] += sign * c;
    for (auto j = groups.find_first(); j != Problem::Set::npos; j = groups.find_next(j)) {
      used_[j] += sign * c;
    }
  }

  const Problem& prob_;
  const TypeIndex& idx_;
  const TypeDpTable& tables_;
  std::uint64_t node_cap_;
  std::uint64_t& nodes_;
  std::vector<Amount> reach_;  // max utility reachable from types r..t-1
  std::vector<Amount> used_;   // per group, global last
  std::vector<std::size_t> pick_;
  std::optional<std::vector<std::size_t>> best_;
  Amount best_cost_ = kInfinity;
  bool minimize_ = false;
};

inline std::optional<std::vector<std::size_t>> types_decide(const Problem& prob, const TypeIndex& idx,
                                                            Amount u, bool minimize,
                                                            std::uint64_t node_cap, std::uint64_t& nodes) {
  if (u <= 0) return std::vector<std::size_t>{};
  const TypeDpTable tables = type_tables(prob, idx, u, TableMode::AtLeast);
  TypeSearch search(prob, idx, tables, node_cap, nodes);
  return search.run(u, minimize);
}

inline TypeIndex problem_types(const Instance& inst, const Problem& prob) {
  std::vector<std::string> gids;
  std::vector<std::string> pids;
  for (const auto& g : inst.groups) gids.push_back(g.id);
  for (const auto& p : inst.projects) pids.push_back(p.id);
  return type_index(prob, gids, pids);
}

}  // namespace detail

/// A feasible bundle of utility at least u, or nullopt if none exists.
/// Throws Error(SearchBudgetExceeded).
inline std::optional<Bundle> solve_types_decision(const Instance& inst, Amount u,
                                                  const TypesOptions& options = {}) {
  detail::require_no_min_utility(inst, "types");
  const Problem prob = compile(inst);
  const TypeIndex idx = detail::problem_types(inst, prob);
  std::uint64_t nodes = 0;
  auto found = detail::types_decide(prob, idx, u, false, options.node_cap, nodes);
  if (!found) return std::nullopt;
  return make_bundle(inst, prob, *found);
}

/// Exact optimum by binary search over u; the witness has minimum cost
/// among optimal bundles. Throws Error(SearchBudgetExceeded).
inline SolveOutcome solve_types_max(const Instance& inst, const TypesOptions& options = {}) {
  detail::require_no_min_utility(inst, "types");
  SolveStats stats;
  const Problem prob = compile(inst);
  std::vector<std::size_t> witness;
  {
    ScopedTimer timer(stats);
    const TypeIndex idx = detail::problem_types(inst, prob);
    Amount lo = 0;
    Amount hi = prob.total_score();
    while (lo < hi) {
      const Amount mid = lo + (hi - lo + 1) / 2;
      if (detail::types_decide(prob, idx, mid, false, options.node_cap, stats.nodes)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    witness = *detail::types_decide(prob, idx, lo, true, options.node_cap, stats.nodes);
  }
  SolveOutcome out = detail::make_outcome(inst, prob, witness, "types");
  out.stats = stats;
  return out;
}

}  // namespace grouppb

#endif  // GROUPPB_TYPES_HPP
