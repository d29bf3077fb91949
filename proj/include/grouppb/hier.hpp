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
 * @file hier.hpp
 * @brief Exact polynomial solver for hierarchical (laminar) group families.
 *
 * The groups form a tree under inclusion. A wrapper root holding every
 * project carries the global budget; projects not covered by any child of a
 * node hang below it as singleton leaves whose budget is their own cost, so
 * the children of every node partition its members.
 *
 * For every node S the solver computes T_S[z], the minimum cost of a bundle
 * inside S with utility exactly z that respects every budget in the subtree.
 * T_S is the min-plus convolution of the children's tables, starting from
 * T[0] = 0 and T[z > 0] = infinity; once all children are merged, entries
 * above the node's budget are discarded. The optimum is the largest z with a
 * finite root entry.
 */

#ifndef GROUPPB_HIER_HPP
#define GROUPPB_HIER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/layers.hpp"
#include "grouppb/outcome.hpp"

namespace grouppb {

struct HierNode {
  enum class Kind { Root, Group, Singleton };
  Kind kind = Kind::Root;
  /// Group index (Group), project index (Singleton), unused for Root.
  std::size_t ref = 0;
  Problem::Set members;
  Amount budget = 0;
  std::vector<std::size_t> children;
  std::string label;
};

struct HierTree {
  std::vector<HierNode> nodes;
  std::size_t root = 0;
};

struct HierOptions {
  /// Decision target u: the utility axis is cut at min(A, u) and the last
  /// entry then means "utility at least u".
  std::optional<Amount> target;
  std::uint64_t cell_cap = 100'000'000;
};

struct HierResult {
  /// Root table indexed by utility (see HierOptions::target for the last
  /// entry when a target is set).
  std::vector<Amount> profile;
  Amount best_utility = 0;
  std::vector<std::size_t> indices;
  std::uint64_t cells = 0;
  std::size_t tree_nodes = 0;
};

/// Tree of `prob`'s groups restricted to `active` projects. Groups that
/// become empty are dropped and groups that become identical are merged
/// (smallest budget wins). Throws Error(NotHierarchical).
inline HierTree build_hier_tree(const Problem& prob, const Problem::Set& active) {
  HierTree tree;
  HierNode root;
  root.kind = HierNode::Kind::Root;
  root.members = active;
  root.budget = prob.budget;
  root.label = "<root>";
  tree.nodes.push_back(std::move(root));

  std::map<Problem::Set, std::size_t> unique;  // restricted set -> node
  std::vector<std::size_t> group_nodes;
  for (std::size_t j = 0; j < prob.g(); ++j) {
    Problem::Set set = prob.groups[j] & active;
    if (set.none()) continue;
    auto [it, inserted] = unique.try_emplace(set, tree.nodes.size());
    if (!inserted) {
      auto& kept = tree.nodes[it->second];
      kept.budget = std::min(kept.budget, prob.group_budget[j]);
      continue;
    }
    HierNode node;
    node.kind = HierNode::Kind::Group;
    node.ref = j;
    node.members = std::move(set);
    node.budget = prob.group_budget[j];
    tree.nodes.push_back(std::move(node));
    group_nodes.push_back(tree.nodes.size() - 1);
  }

  for (std::size_t a = 0; a < group_nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < group_nodes.size(); ++b) {
      const auto& x = tree.nodes[group_nodes[a]].members;
      const auto& y = tree.nodes[group_nodes[b]].members;
      if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x)) {
        throw Error(ErrorCode::NotHierarchical, "group family is not hierarchical");
      }
    }
  }

  // Larger sets first; a node's parent is its smallest strict superset.
  std::stable_sort(group_nodes.begin(), group_nodes.end(), [&](std::size_t a, std::size_t b) {
    return tree.nodes[a].members.count() > tree.nodes[b].members.count();
  });
  for (std::size_t k = 0; k < group_nodes.size(); ++k) {
    const std::size_t v = group_nodes[k];
    std::size_t parent = tree.root;
    std::size_t parent_size = static_cast<std::size_t>(-1);
    for (std::size_t q = 0; q < k; ++q) {
      const std::size_t w = group_nodes[q];
      const auto size = tree.nodes[w].members.count();
      if (tree.nodes[v].members.is_subset_of(tree.nodes[w].members) && size < parent_size) {
        parent = w;
        parent_size = size;
      }
    }
    tree.nodes[parent].children.push_back(v);
  }

  // Singleton leaves for members not covered by any child.
  const std::size_t inner = tree.nodes.size();
  for (std::size_t v = 0; v < inner; ++v) {
    Problem::Set covered(prob.m());
    for (std::size_t c : tree.nodes[v].children) covered |= tree.nodes[c].members;
    const Problem::Set rest = tree.nodes[v].members - covered;
    for (auto p = rest.find_first(); p != Problem::Set::npos; p = rest.find_next(p)) {
      HierNode leaf;
      leaf.kind = HierNode::Kind::Singleton;
      leaf.ref = p;
      leaf.members = Problem::Set(prob.m());
      leaf.members.set(p);
      leaf.budget = prob.cost[p];
      tree.nodes.push_back(std::move(leaf));
      tree.nodes[v].children.push_back(tree.nodes.size() - 1);
    }
  }
  return tree;
}

/// Tree of a whole instance with readable labels.
inline HierTree build_hier_tree(const Instance& inst) {
  const Problem prob = compile(inst);
  HierTree tree = build_hier_tree(prob, prob.full_set());
  for (auto& node : tree.nodes) {
    switch (node.kind) {
      case HierNode::Kind::Root: break;
      case HierNode::Kind::Group: node.label = inst.groups[node.ref].id; break;
      case HierNode::Kind::Singleton: node.label = "{" + inst.projects[node.ref].id + "}"; break;
    }
  }
  return tree;
}

namespace detail {

class HierDp {
 public:
  HierDp(const Problem& prob, const HierTree& tree, std::size_t axis, bool saturate)
      : prob_(prob), tree_(tree), axis_(axis), saturate_(saturate), splits_(tree.nodes.size()) {}

  std::vector<Amount> solve(std::size_t v) {
    const HierNode& node = tree_.nodes[v];
    std::vector<Amount> table(axis_ + 1, kInfinity);
    table[0] = 0;
    if (node.kind == HierNode::Kind::Singleton) {
      const std::size_t z = clamp(prob_.score[node.ref]);
      table[z] = std::min(table[z], prob_.cost[node.ref]);
      return table;
    }
    for (std::size_t c : node.children) {
      const std::vector<Amount> child = solve(c);
      std::vector<Amount> merged(axis_ + 1, kInfinity);
      std::vector<Split> split(axis_ + 1);
      for (std::size_t zp = 0; zp <= axis_; ++zp) {
        if (table[zp] == kInfinity) continue;
        for (std::size_t zc = 0; zc <= axis_; ++zc) {
          if (child[zc] == kInfinity) continue;
          const std::size_t z = saturate_ ? std::min(zp + zc, axis_) : zp + zc;
          if (z > axis_) break;
          const Amount cost = table[zp] + child[zc];
          if (cost < merged[z]) {
            merged[z] = cost;
            split[z] = {static_cast<std::uint32_t>(zp), static_cast<std::uint32_t>(zc)};
          }
        }
      }
      table = std::move(merged);
      splits_[v].push_back(std::move(split));
    }
    for (auto& cost : table) {
      if (cost > node.budget) cost = kInfinity;
    }
    return table;
  }

  void reconstruct(std::size_t v, std::size_t z, std::vector<std::size_t>& out) const {
    const HierNode& node = tree_.nodes[v];
    if (node.kind == HierNode::Kind::Singleton) {
      if (z > 0) out.push_back(node.ref);
      return;
    }
    for (std::size_t j = node.children.size(); j-- > 0;) {
      const Split& s = splits_[v][j][z];
      reconstruct(node.children[j], s.child, out);
      z = s.prefix;
    }
  }

 private:
  struct Split {
    std::uint32_t prefix = 0;
    std::uint32_t child = 0;
  };

  std::size_t clamp(Amount z) const {
    return std::min(static_cast<std::size_t>(z), saturate_ ? axis_ : static_cast<std::size_t>(z));
  }

  const Problem& prob_;
  const HierTree& tree_;
  std::size_t axis_;
  bool saturate_;
  std::vector<std::vector<std::vector<Split>>> splits_;
};

}  // namespace detail

/// Solves `prob` restricted to the `active` projects.
inline HierResult solve_hier_problem(const Problem& prob, const Problem::Set& active,
                                     const HierOptions& options = {}) {
  const HierTree tree = build_hier_tree(prob, active);
  Amount active_score = 0;
  for (auto p = active.find_first(); p != Problem::Set::npos; p = active.find_next(p)) {
    active_score += prob.score[p];
  }
  bool saturate = false;
  Amount axis = active_score;
  if (options.target && *options.target < active_score) {
    axis = std::max<Amount>(*options.target, 0);
    saturate = true;
  }
  const auto width = static_cast<std::uint64_t>(axis) + 1;
  if (width > std::numeric_limits<std::uint32_t>::max() ||
      width * tree.nodes.size() > options.cell_cap) {
    throw Error(ErrorCode::TableTooLarge, "utility axis of " + std::to_string(width) +
                                              " entries exceeds the cell cap");
  }

  detail::HierDp dp(prob, tree, static_cast<std::size_t>(axis), saturate);
  HierResult res;
  res.profile = dp.solve(tree.root);
  res.tree_nodes = tree.nodes.size();
  res.cells = width * tree.nodes.size();
  for (std::size_t z = res.profile.size(); z-- > 0;) {
    if (res.profile[z] != kInfinity) {
      res.best_utility = static_cast<Amount>(z);
      dp.reconstruct(tree.root, z, res.indices);
      break;
    }
  }
  std::sort(res.indices.begin(), res.indices.end());
  return res;
}

/// Exact optimum of a hierarchical instance together with the per-utility
/// minimum-cost profile. Throws Error(NotHierarchical).
inline SolveOutcome solve_hier(const Instance& inst, const HierOptions& options = {}) {
  detail::require_no_min_utility(inst, "hier");
  SolveStats stats;
  HierResult res;
  const Problem prob = compile(inst);
  {
    ScopedTimer timer(stats);
    res = solve_hier_problem(prob, prob.full_set(), options);
  }
  SolveOutcome out = detail::make_outcome(inst, prob, res.indices, "hier");
  stats.cells = res.cells;
  stats.nodes = res.tree_nodes;
  out.stats = stats;
  out.profile = std::move(res.profile);
  return out;
}

}  // namespace grouppb

#endif  // GROUPPB_HIER_HPP
