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
 * @file deletion.hpp
 * @brief Distance to a hierarchical family and the solvers built on it.
 *
 * Two groups conflict when they intersect and neither contains the other. A
 * group deletion set removes one group of every conflicting pair; a project
 * deletion set removes, for every conflicting pair, all of G1 ∩ G2, G1 \ G2
 * or G2 \ G1. Both minimum sets are found by depth-bounded branching with
 * iterative deepening, always branching on the first conflicting pair in
 * group-id order.
 *
 * Given a deletion set with project set Q (members of the deleted groups, or
 * the deleted projects), the combined solvers try every funded subset
 * S0 ⊆ Q, charge it against all budgets, and solve the hierarchical rest
 * P \ Q exactly.
 */

#ifndef GROUPPB_DELETION_HPP
#define GROUPPB_DELETION_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/hier.hpp"
#include "grouppb/layers.hpp"
#include "grouppb/outcome.hpp"

namespace grouppb {

enum class DeletionKind { Group, Project };

inline std::string_view to_string(DeletionKind kind) {
  return kind == DeletionKind::Group ? "group" : "project";
}

struct DeletionAnalysis {
  DeletionKind kind = DeletionKind::Group;
  std::vector<std::string> deleted_ids;  // sorted
  std::size_t size = 0;
  /// The node budget ran out; deleted_ids is then a valid but possibly
  /// non-minimum set found greedily.
  bool search_budget_hit = false;
};

namespace detail {

class DeletionSearch {
 public:
  DeletionSearch(const SetFamily& fam, std::uint64_t node_cap) : fam_(fam), node_cap_(node_cap) {
    order_.resize(fam.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return fam.ids[a] < fam.ids[b]; });
  }

  /// First conflicting pair in id order among groups not removed, with the
  /// given projects removed from every group.
  std::optional<std::pair<std::size_t, std::size_t>> first_conflict(
      const std::vector<bool>& removed_group, const Problem::Set& removed_projects) const {
    for (std::size_t a = 0; a < order_.size(); ++a) {
      const std::size_t i = order_[a];
      if (removed_group[i]) continue;
      const Problem::Set x = fam_.sets[i] - removed_projects;
      for (std::size_t b = a + 1; b < order_.size(); ++b) {
        const std::size_t j = order_[b];
        if (removed_group[j]) continue;
        const Problem::Set y = fam_.sets[j] - removed_projects;
        if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x)) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  bool groups(std::vector<bool>& removed, std::size_t budget) {
    if (++nodes_ > node_cap_) throw Error(ErrorCode::SearchBudgetExceeded, "deletion search");
    const auto pair = first_conflict(removed, empty());
    if (!pair) return true;
    if (budget == 0) return false;
    for (std::size_t pick : {pair->first, pair->second}) {
      removed[pick] = true;
      if (groups(removed, budget - 1)) return true;
      removed[pick] = false;
    }
    return false;
  }

  bool projects(Problem::Set& removed, std::size_t budget) {
    if (++nodes_ > node_cap_) throw Error(ErrorCode::SearchBudgetExceeded, "deletion search");
    const std::vector<bool> none(fam_.size(), false);
    const auto pair = first_conflict(none, removed);
    if (!pair) return true;
    const Problem::Set x = fam_.sets[pair->first] - removed;
    const Problem::Set y = fam_.sets[pair->second] - removed;
    for (const Problem::Set& branch : {x & y, x - y, y - x}) {
      const std::size_t cost = branch.count();
      if (cost > budget) continue;
      const Problem::Set before = removed;
      removed |= branch;
      if (projects(removed, budget - cost)) return true;
      removed = before;
    }
    return false;
  }

  Problem::Set empty() const { return Problem::Set(fam_.universe_size); }

 private:
  const SetFamily& fam_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
};

inline std::string element_name(const SetFamily& fam, std::size_t e) {
  return e < fam.elements.size() ? fam.elements[e] : std::to_string(e);
}

}  // namespace detail

/// Minimum number of groups whose removal leaves a hierarchical family, or
/// nullopt if more than `cap` are needed.
inline std::optional<DeletionAnalysis> min_group_deletion_set(const SetFamily& fam, std::size_t cap,
                                                              std::uint64_t node_cap = 10'000'000) {
  detail::DeletionSearch search(fam, node_cap);
  DeletionAnalysis out;
  out.kind = DeletionKind::Group;
  std::vector<bool> removed(fam.size(), false);
  try {
    bool found = false;
    for (std::size_t k = 0; k <= cap && !found; ++k) {
      std::fill(removed.begin(), removed.end(), false);
      found = search.groups(removed, k);
    }
    if (!found) return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    // Greedy fallback: drop the second group of each remaining conflict.
    std::fill(removed.begin(), removed.end(), false);
    while (auto pair = search.first_conflict(removed, search.empty())) removed[pair->second] = true;
    out.search_budget_hit = true;
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (removed[i]) out.deleted_ids.push_back(fam.ids[i]);
  }
  std::sort(out.deleted_ids.begin(), out.deleted_ids.end());
  out.size = out.deleted_ids.size();
  return out;
}

/// Minimum number of projects whose removal from every group leaves a
/// hierarchical family, or nullopt if more than `cap` are needed.
inline std::optional<DeletionAnalysis> min_project_deletion_set(const SetFamily& fam, std::size_t cap,
                                                                std::uint64_t node_cap = 10'000'000) {
  detail::DeletionSearch search(fam, node_cap);
  DeletionAnalysis out;
  out.kind = DeletionKind::Project;
  Problem::Set removed = search.empty();
  try {
    bool found = false;
    for (std::size_t k = 0; k <= cap && !found; ++k) {
      removed.reset();
      found = search.projects(removed, k);
    }
    if (!found) return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    removed.reset();
    const std::vector<bool> none(fam.size(), false);
    while (auto pair = search.first_conflict(none, removed)) {
      removed |= (fam.sets[pair->first] & fam.sets[pair->second]);
    }
    out.search_budget_hit = true;
  }
  for (auto e = removed.find_first(); e != Problem::Set::npos; e = removed.find_next(e)) {
    out.deleted_ids.push_back(detail::element_name(fam, e));
  }
  std::sort(out.deleted_ids.begin(), out.deleted_ids.end());
  out.size = out.deleted_ids.size();
  return out;
}

struct DeletionSolveOptions {
  unsigned threads = 1;
  std::uint64_t cell_cap = 100'000'000;
  /// Largest |Q| accepted; 2^|Q| funded subsets are tried.
  std::size_t max_fixed = 30;
};

namespace detail {

struct FixedBest {
  bool found = false;
  Amount utility = 0;
  Amount cost = 0;
  std::vector<std::size_t> indices;
  std::uint64_t cells = 0;
};

/// Tries every funded S0 ⊆ `fixed`, solving the rest (everything outside
/// `fixed`) with the tree DP under the reduced budgets.
inline FixedBest solve_with_fixed(const Problem& prob, const std::vector<std::size_t>& fixed,
                                  const DeletionSolveOptions& options) {
  if (fixed.size() > options.max_fixed) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                std::to_string(fixed.size()) + " projects to enumerate exceeds the limit");
  }
  Problem::Set rest = prob.full_set();
  for (std::size_t p : fixed) rest.reset(p);
  // Validates the hierarchy of the remainder once up front.
  (void)build_hier_tree(prob, rest);

  const std::uint64_t total = std::uint64_t{1} << fixed.size();
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    FixedBest best;
    Problem residual = prob;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      Amount cost = 0;
      Amount util = 0;
      std::vector<std::size_t> chosen;
      for (std::size_t k = 0; k < fixed.size(); ++k) {
        if (mask >> k & 1U) {
          chosen.push_back(fixed[k]);
          cost += prob.cost[fixed[k]];
          util += prob.score[fixed[k]];
        }
      }
      if (cost > prob.budget) continue;
      residual.budget = prob.budget - cost;
      bool ok = true;
      for (std::size_t j = 0; j < prob.g() && ok; ++j) {
        Amount used = 0;
        for (std::size_t p : chosen) {
          if (prob.groups[j].test(p)) used += prob.cost[p];
        }
        ok = used <= prob.group_budget[j];
        residual.group_budget[j] = prob.group_budget[j] - used;
      }
      if (!ok) continue;
      HierOptions ho;
      ho.cell_cap = options.cell_cap;
      HierResult sub = solve_hier_problem(residual, rest, ho);
      best.cells += sub.cells;
      std::vector<std::size_t> indices = chosen;
      indices.insert(indices.end(), sub.indices.begin(), sub.indices.end());
      std::sort(indices.begin(), indices.end());
      const Amount total_util = util + sub.best_utility;
      Amount total_cost = cost;
      for (std::size_t p : sub.indices) total_cost += prob.cost[p];
      if (!best.found ||
          better_witness(total_util, total_cost, indices, best.utility, best.cost, best.indices)) {
        best.found = true;
        best.utility = total_util;
        best.cost = total_cost;
        best.indices = std::move(indices);
      }
    }
    return best;
  };

  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.threads, total)));
  std::vector<FixedBest> parts(workers);
  if (workers == 1) {
    parts[0] = run(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          parts[w] = run(total * w / workers, total * (w + 1) / workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  FixedBest best;
  for (auto& part : parts) {
    best.cells += part.cells;
    if (part.found && (!best.found || better_witness(part.utility, part.cost, part.indices,
                                                     best.utility, best.cost, best.indices))) {
      best.found = true;
      best.utility = part.utility;
      best.cost = part.cost;
      best.indices = std::move(part.indices);
    }
  }
  return best;
}

inline SolveOutcome finish_fixed(const Instance& inst, const Problem& prob, std::size_t fixed_count,
                                 const std::function<FixedBest()>& body, const std::string& algorithm) {
  SolveStats stats;
  FixedBest best;
  {
    ScopedTimer timer(stats);
    best = body();
  }
  SolveOutcome out = make_outcome(inst, prob, best.indices, algorithm);
  stats.nodes = std::uint64_t{1} << fixed_count;
  stats.cells = best.cells;
  out.stats = stats;
  return out;
}

}  // namespace detail

/// Exact optimum given a group deletion set: funded subsets of the deleted
/// groups' members are enumerated, the hierarchical rest is solved by the
/// tree DP. Throws Error(InvalidDeletion) if the kept groups are not
/// hierarchical or an id is unknown.
inline SolveOutcome solve_group_deletion(const Instance& inst, const DeletionAnalysis& deletion,
                                         const DeletionSolveOptions& options = {}) {
  detail::require_no_min_utility(inst, "group-del");
  if (deletion.kind != DeletionKind::Group) {
    throw Error(ErrorCode::InvalidDeletion, "expected a group deletion set");
  }
  const Problem prob = compile(inst);
  Problem::Set q(prob.m());
  SetFamily kept;
  kept.universe_size = prob.m();
  for (std::size_t j = 0; j < inst.groups.size(); ++j) {
    const bool deleted = std::binary_search(deletion.deleted_ids.begin(), deletion.deleted_ids.end(),
                                            inst.groups[j].id);
    if (deleted) {
      q |= prob.groups[j];
    } else {
      kept.ids.push_back(inst.groups[j].id);
      kept.sets.push_back(prob.groups[j]);
    }
  }
  for (const auto& id : deletion.deleted_ids) {
    const bool known = std::any_of(inst.groups.begin(), inst.groups.end(),
                                   [&](const Group& g) { return g.id == id; });
    if (!known) throw Error(ErrorCode::InvalidDeletion, "unknown group '" + id + "'");
  }
  if (!is_hierarchical(kept)) {
    throw Error(ErrorCode::InvalidDeletion, "groups left after deletion are not hierarchical");
  }
  std::vector<std::size_t> fixed;
  for (auto p = q.find_first(); p != Problem::Set::npos; p = q.find_next(p)) fixed.push_back(p);
  return detail::finish_fixed(
      inst, prob, fixed.size(), [&] { return detail::solve_with_fixed(prob, fixed, options); },
      "group-del");
}

/// Exact optimum given a project deletion set: funded subsets of the deleted
/// projects are enumerated, the hierarchical rest is solved by the tree DP.
/// Throws Error(InvalidDeletion).
inline SolveOutcome solve_project_deletion(const Instance& inst, const DeletionAnalysis& deletion,
                                           const DeletionSolveOptions& options = {}) {
  detail::require_no_min_utility(inst, "proj-del");
  if (deletion.kind != DeletionKind::Project) {
    throw Error(ErrorCode::InvalidDeletion, "expected a project deletion set");
  }
  const Problem prob = compile(inst);
  std::vector<std::size_t> fixed;
  Problem::Set removed(prob.m());
  for (const auto& id : deletion.deleted_ids) {
    const auto idx = inst.project_index(id);
    if (!idx) throw Error(ErrorCode::InvalidDeletion, "unknown project '" + id + "'");
    fixed.push_back(*idx);
    removed.set(*idx);
  }
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  SetFamily rest = family_of(inst);
  for (auto& set : rest.sets) set -= removed;
  if (!is_hierarchical(rest)) {
    throw Error(ErrorCode::InvalidDeletion, "groups restricted to the remaining projects are not hierarchical");
  }
  return detail::finish_fixed(
      inst, prob, fixed.size(), [&] { return detail::solve_with_fixed(prob, fixed, options); },
      "proj-del");
}

}  // namespace grouppb

#endif  // GROUPPB_DELETION_HPP
