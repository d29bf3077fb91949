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

// Shared fixtures and independent reference solvers for the test suites.

#ifndef GROUPPB_TESTS_SUPPORT_CORPUS_HPP
#define GROUPPB_TESTS_SUPPORT_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grouppb/grouppb.hpp"

namespace grouppb::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GROUPPB_TEST_DATA) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Example 1: four projects, two disjoint groups.
inline Instance example1() {
  RawInstance raw;
  raw.projects = {{"p1", 2}, {"p2", 1}, {"p3", 3}, {"p4", 1}};
  raw.voters = {{"v", {"p1", "p2", "p3"}}, {"v2", {"p3", "p4"}}};
  raw.groups = {{"F1", {"p1", "p3"}, 3, 0}, {"F2", {"p2", "p4"}, 2, 0}};
  raw.global_budget = 5;
  return validate_instance(std::move(raw));
}

/// Parameters of the i-th corpus instance: m ≤ 12, g ≤ 4, all three shapes,
/// small approval scores so every exact solver stays fast.
inline GenParams corpus_params(std::uint64_t i) {
  SplitMix64 rng(0x5eed0000 + i);
  GenParams p;
  p.m = 3 + rng.below(10);
  p.n = 1 + rng.below(4);
  p.g = rng.below(5);
  const Amount hi = 2 + static_cast<Amount>(rng.below(6));
  p.cost_range = {static_cast<Amount>(rng.below(2)), hi};
  p.app_range = {1, 1 + rng.below(3)};
  p.family_shape = static_cast<FamilyShape>(i % 3);
  static const std::pair<Amount, Amount> fractions[] = {{1, 3}, {1, 2}, {2, 3}, {1, 1}};
  const auto& f = fractions[rng.below(4)];
  p.budget_num = f.first;
  p.budget_den = f.second;
  p.seed = i;
  return p;
}

inline std::vector<Instance> small_corpus(std::size_t count, std::uint64_t offset = 0) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen_random(corpus_params(offset + i)));
  return out;
}

/// Laminar instance with `extra` random groups added on top, so both
/// deletion distances are usually small but non-zero.
inline Instance planted_conflicts(std::uint64_t seed, std::size_t extra) {
  SplitMix64 rng(0xc0ff1c7 + seed);
  GenParams p;
  p.m = 5 + rng.below(8);
  p.n = 1 + rng.below(4);
  p.g = 1 + rng.below(3);
  p.cost_range = {1, 2 + static_cast<Amount>(rng.below(4))};
  p.app_range = {1, 1 + rng.below(3)};
  p.family_shape = FamilyShape::Laminar;
  p.budget_num = 1 + static_cast<Amount>(rng.below(2));
  p.budget_den = 3;
  p.seed = seed;
  Instance base = gen_random(p);
  RawInstance raw{base.projects, base.voters, base.groups, base.global_budget};
  for (std::size_t k = 0; k < extra; ++k) {
    Group grp;
    grp.id = "X" + std::to_string(k + 1);
    const std::size_t size = 2 + rng.below(std::max<std::size_t>(1, p.m / 2));
    std::vector<std::size_t> idx(p.m);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t a = 0; a < size && a < p.m; ++a) {
      std::swap(idx[a], idx[a + rng.below(p.m - a)]);
      grp.members.push_back(base.projects[idx[a]].id);
    }
    Amount member_cost = 0;
    for (const auto& id : grp.members) member_cost += base.projects[*base.project_index(id)].cost;
    grp.budget = (member_cost + 1) / 2;
    raw.groups.push_back(std::move(grp));
  }
  return validate_instance(std::move(raw));
}

/// Largest independent set by enumerating vertex subsets.
inline std::size_t max_independent_set(const SimpleGraph& graph) {
  const std::size_t n = graph.vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[graph.vertices[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [a, b] : graph.edges) {
    adj[index[a]] |= 1U << index[b];
    adj[index[b]] |= 1U << index[a];
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if ((mask >> v & 1U) && (adj[v] & mask)) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Whether the numbers split into two halves of equal sum (subset-sum DP).
inline bool has_perfect_partition(const std::vector<Amount>& numbers) {
  const Amount total = std::accumulate(numbers.begin(), numbers.end(), Amount{0});
  if (total % 2 != 0) return false;
  std::vector<bool> reach(static_cast<std::size_t>(total / 2) + 1, false);
  reach[0] = true;
  for (Amount x : numbers) {
    for (Amount s = total / 2; s >= x; --s) {
      if (reach[static_cast<std::size_t>(s - x)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach[static_cast<std::size_t>(total / 2)];
}

/// Exact optimum by a dynamic program over projects in index order whose
/// state is the spend of every group still open (some members seen, some
/// not) plus the global spend. Independent of the library solvers.
inline Amount frontier_optimum(const Instance& inst) {
  const std::size_t m = inst.projects.size();
  const std::size_t g = inst.groups.size();
  std::vector<std::vector<std::size_t>> groups_of(m);
  std::vector<std::size_t> first(g, m);
  std::vector<std::size_t> last(g, 0);
  for (std::size_t j = 0; j < g; ++j) {
    for (const auto& id : inst.groups[j].members) {
      const std::size_t p = *inst.project_index(id);
      groups_of[p].push_back(j);
      first[j] = std::min(first[j], p);
      last[j] = std::max(last[j], p);
    }
  }
  const auto scores = approval_score_vector(inst);
  // Key: spend per open group (in `open` order), then the global spend.
  std::vector<std::size_t> open;
  std::map<std::vector<Amount>, Amount> states{{{0}, 0}};
  for (std::size_t p = 0; p < m; ++p) {
    // Open groups whose first member is p.
    std::vector<std::size_t> next_open = open;
    for (std::size_t j = 0; j < g; ++j) {
      if (first[j] == p) next_open.push_back(j);
    }
    std::map<std::vector<Amount>, Amount> widened;
    for (const auto& [key, util] : states) {
      std::vector<Amount> k2(next_open.size() + 1, 0);
      for (std::size_t a = 0; a < open.size(); ++a) k2[a] = key[a];
      k2.back() = key.back();
      widened[k2] = std::max(widened[k2], util);
    }
    open = next_open;
    std::map<std::vector<Amount>, Amount> next;
    auto relax = [&](const std::vector<Amount>& key, Amount util) {
      auto [it, inserted] = next.try_emplace(key, util);
      if (!inserted) it->second = std::max(it->second, util);
    };
    const Amount c = inst.projects[p].cost;
    for (const auto& [key, util] : widened) {
      relax(key, util);
      std::vector<Amount> taken = key;
      bool ok = (taken.back() += c) <= inst.global_budget;
      for (std::size_t a = 0; a < open.size() && ok; ++a) {
        const std::size_t j = open[a];
        if (std::find(groups_of[p].begin(), groups_of[p].end(), j) == groups_of[p].end()) continue;
        taken[a] += c;
        ok = taken[a] <= inst.groups[j].budget;
      }
      if (ok) relax(taken, util + scores[p]);
    }
    // Close groups whose last member is p.
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < open.size(); ++a) {
      if (last[open[a]] != p) keep.push_back(a);
    }
    states.clear();
    for (const auto& [key, util] : next) {
      std::vector<Amount> k2;
      for (std::size_t a : keep) k2.push_back(key[a]);
      k2.push_back(key.back());
      auto [it, inserted] = states.try_emplace(k2, util);
      if (!inserted) it->second = std::max(it->second, util);
    }
    std::vector<std::size_t> still;
    for (std::size_t a : keep) still.push_back(open[a]);
    open = still;
  }
  Amount best = 0;
  for (const auto& [key, util] : states) best = std::max(best, util);
  return best;
}

/// Smallest number of groups whose removal leaves a hierarchical family.
inline std::size_t exhaustive_group_deletion(const SetFamily& fam) {
  const std::size_t g = fam.size();
  std::size_t best = g;
  for (std::uint32_t mask = 0; mask < (1U << g); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    SetFamily rest;
    rest.universe_size = fam.universe_size;
    for (std::size_t j = 0; j < g; ++j) {
      if (!(mask >> j & 1U)) {
        rest.ids.push_back(fam.ids[j]);
        rest.sets.push_back(fam.sets[j]);
      }
    }
    if (is_hierarchical(rest)) best = k;
  }
  return best;
}

/// Smallest number of projects whose removal leaves a hierarchical family.
inline std::size_t exhaustive_project_deletion(const SetFamily& fam) {
  const std::size_t m = fam.universe_size;
  std::size_t best = m;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    SetFamily rest = fam;
    for (auto& set : rest.sets) {
      for (std::size_t e = 0; e < m; ++e) {
        if (mask >> e & 1U) set.reset(e);
      }
    }
    if (is_hierarchical(rest)) best = k;
  }
  return best;
}

/// Minimum layer count by trying every assignment of groups to layers
/// (restricted growth strings, so each partition is seen once).
inline std::size_t exhaustive_layerwidth(const SetFamily& fam) {
  const std::size_t g = fam.size();
  if (g == 0) return 0;
  std::size_t best = g;
  std::vector<std::size_t> label(g, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (used >= best) return;
    if (i == g) {
      best = used;
      return;
    }
    for (std::size_t c = 0; c <= used && c < best; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (label[j] == c && fam.sets[i].intersects(fam.sets[j])) ok = false;
      }
      if (!ok) continue;
      label[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

/// Random 3-regular graph on n vertices (n even) by the pairing model,
/// retried until simple.
inline SimpleGraph random_cubic_graph(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (;;) {
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v) points.insert(points.end(), {v, v, v});
    for (std::size_t a = points.size(); a > 1; --a) std::swap(points[a - 1], points[rng.below(a)]);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    bool simple = true;
    for (std::size_t a = 0; a < points.size() && simple; a += 2) {
      auto e = std::minmax(points[a], points[a + 1]);
      simple = e.first != e.second && edges.insert(e).second;
    }
    if (!simple) continue;
    SimpleGraph graph;
    for (std::size_t v = 0; v < n; ++v) graph.vertices.push_back("u" + std::to_string(v));
    for (const auto& [a, b] : edges) graph.edges.emplace_back(graph.vertices[a], graph.vertices[b]);
    return graph;
  }
}

/// Random simple graph on n vertices with edge probability num/den.
inline SimpleGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SimpleGraph graph;
  for (std::size_t v = 0; v < n; ++v) graph.vertices.push_back("u" + std::to_string(v));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.below(den) < num) graph.edges.emplace_back(graph.vertices[a], graph.vertices[b]);
    }
  }
  return graph;
}

/// Every multiset of positive integers with sum exactly `total`, as
/// non-increasing sequences.
inline void for_each_multiset(Amount total, const std::function<void(const std::vector<Amount>&)>& visit) {
  std::vector<Amount> parts;
  std::function<void(Amount, Amount)> rec = [&](Amount left, Amount cap) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (Amount x = std::min(left, cap); x >= 1; --x) {
      parts.push_back(x);
      rec(left - x, x);
      parts.pop_back();
    }
  };
  rec(total, total);
}

}  // namespace grouppb::testing

#endif  // GROUPPB_TESTS_SUPPORT_CORPUS_HPP
