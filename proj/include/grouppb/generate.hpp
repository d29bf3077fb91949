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
 * @file generate.hpp
 * @brief Seeded instance generators and reduction-based fixtures.
 *
 * Random instances are a deterministic function of GenParams on every
 * platform: the only entropy source is SplitMix64 over the seed, and bounded
 * integers are drawn by rejection sampling on the high bits.
 */

#ifndef GROUPPB_GENERATE_HPP
#define GROUPPB_GENERATE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grouppb/core.hpp"

namespace grouppb {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const int bits = std::bit_width(n - 1);
    for (;;) {
      const std::uint64_t r = next() >> (64 - bits);
      if (r < n) return r;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

enum class FamilyShape { RandomSubsets, Laminar, Partition };

struct GenParams {
  std::size_t m = 8;
  std::size_t n = 4;
  std::size_t g = 3;
  std::pair<Amount, Amount> cost_range{1, 5};
  std::pair<std::size_t, std::size_t> app_range{1, 3};
  FamilyShape family_shape = FamilyShape::RandomSubsets;
  /// budget_fraction = num / den, in (0, 1].
  Amount budget_num = 1;
  Amount budget_den = 2;
  std::uint64_t seed = 0;
};

namespace detail {

/// "p07" style ids that sort in numeric order.
inline std::string padded_id(std::string_view prefix, std::size_t index, std::size_t count) {
  std::string digits = std::to_string(index);
  const std::size_t width = std::to_string(count).size();
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return std::string(prefix) + digits;
}

inline Amount ceil_fraction(Amount value, Amount num, Amount den) {
  const auto scaled = static_cast<__int128>(value) * num;
  return static_cast<Amount>((scaled + den - 1) / den);
}

/// k distinct elements of [0, n) via partial Fisher-Yates.
inline std::vector<std::size_t> sample(SplitMix64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(n - i)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline std::vector<std::vector<std::size_t>> laminar_family(SplitMix64& rng, std::size_t m,
                                                            std::size_t g) {
  std::vector<std::vector<std::size_t>> family;
  if (g == 0 || m == 0) return family;
  family.push_back(sample(rng, m, 1 + rng.below(m)));
  std::deque<std::size_t> open{0};
  while (!open.empty() && family.size() < g) {
    const std::vector<std::size_t> node = family[open.front()];
    open.pop_front();
    if (node.size() < 2 || rng.below(2) == 0) continue;
    const std::size_t parts = std::min<std::size_t>(2 + rng.below(3), node.size());
    // Random surjection of node's members onto `parts` labels.
    std::vector<std::size_t> order(node.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<std::vector<std::size_t>> split(parts);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t label = i < parts ? i : rng.below(parts);
      split[label].push_back(node[order[i]]);
    }
    for (auto& part : split) {
      if (family.size() >= g) break;
      std::sort(part.begin(), part.end());
      family.push_back(std::move(part));
      open.push_back(family.size() - 1);
    }
  }
  return family;
}

}  // namespace detail

/// Random instance; identical params give identical instances.
///
/// Group budgets are ceil(fraction * member cost), the global budget is
/// ceil(fraction * total cost). The laminar shape recursively splits a random
/// project subset (stop with probability 1/2, else 2-4 non-empty parts), so
/// the family is hierarchical by construction. The partition shape puts each
/// project in at most one group. The result is validated but not normalized.
inline Instance gen_random(const GenParams& params) {
  if (params.m == 0 || params.n == 0) throw Error(ErrorCode::InvalidArgument, "m and n must be at least 1");
  if (params.cost_range.first > params.cost_range.second || params.cost_range.first < 0 ||
      params.app_range.first > params.app_range.second) {
    throw Error(ErrorCode::InvalidArgument, "ranges must satisfy 0 <= lo <= hi");
  }
  if (params.budget_num <= 0 || params.budget_den <= 0 || params.budget_num > params.budget_den) {
    throw Error(ErrorCode::InvalidArgument, "budget fraction must lie in (0, 1]");
  }
  SplitMix64 rng(params.seed);
  RawInstance raw;
  Amount total_cost = 0;
  for (std::size_t i = 0; i < params.m; ++i) {
    const Amount cost = rng.between(params.cost_range.first, params.cost_range.second);
    raw.projects.push_back({detail::padded_id("p", i + 1, params.m), cost});
    total_cost += cost;
  }
  for (std::size_t v = 0; v < params.n; ++v) {
    const std::size_t k = params.app_range.first +
                          rng.below(params.app_range.second - params.app_range.first + 1);
    Voter voter{detail::padded_id("v", v + 1, params.n), {}};
    for (std::size_t i : detail::sample(rng, params.m, k)) voter.approves.push_back(raw.projects[i].id);
    raw.voters.push_back(std::move(voter));
  }

  std::vector<std::vector<std::size_t>> family;
  switch (params.family_shape) {
    case FamilyShape::RandomSubsets:
      for (std::size_t j = 0; j < params.g; ++j) {
        family.push_back(detail::sample(rng, params.m, 1 + rng.below(params.m)));
      }
      break;
    case FamilyShape::Laminar:
      family = detail::laminar_family(rng, params.m, params.g);
      break;
    case FamilyShape::Partition: {
      std::vector<std::vector<std::size_t>> parts(params.g);
      for (std::size_t i = 0; i < params.m; ++i) {
        const std::size_t label = rng.below(params.g + 1);
        if (label < params.g) parts[label].push_back(i);
      }
      for (auto& part : parts) {
        if (!part.empty()) family.push_back(std::move(part));
      }
      break;
    }
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    Group grp;
    grp.id = detail::padded_id("F", j + 1, family.size());
    Amount member_cost = 0;
    for (std::size_t i : family[j]) {
      grp.members.push_back(raw.projects[i].id);
      member_cost += raw.projects[i].cost;
    }
    grp.budget = detail::ceil_fraction(member_cost, params.budget_num, params.budget_den);
    raw.groups.push_back(std::move(grp));
  }
  raw.global_budget = detail::ceil_fraction(total_cost, params.budget_num, params.budget_den);
  return validate_instance(std::move(raw));
}

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Throws Error(InvalidGraph) on self-loops, duplicate edges or vertices,
/// unknown endpoints and ids outside [A-Za-z0-9_-]+.
inline void validate_graph(const SimpleGraph& graph) {
  std::set<std::string> vertices;
  for (const auto& v : graph.vertices) {
    if (!is_valid_id(v)) throw Error(ErrorCode::InvalidGraph, "invalid vertex id '" + v + "'");
    if (!vertices.insert(v).second) throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + v + "'");
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [a, b] : graph.edges) {
    if (!vertices.count(a) || !vertices.count(b)) {
      throw Error(ErrorCode::InvalidGraph, "edge " + a + "-" + b + " has an unknown endpoint");
    }
    if (a == b) throw Error(ErrorCode::InvalidGraph, "self-loop at '" + a + "'");
    if (!seen.insert(std::minmax(a, b)).second) {
      throw Error(ErrorCode::InvalidGraph, "duplicate edge " + a + "-" + b);
    }
  }
}

enum class IsVariant { PerEdgeVoters, SingleVoter };

/// Independent-set reduction: one unit-cost project per vertex, one group of
/// budget 1 per edge, global budget k. PerEdgeVoters adds two voters per edge,
/// each approving one endpoint (utility 3k on 3-regular graphs);
/// SingleVoter adds one voter approving every project (utility k).
inline Instance gen_from_graph_is(const SimpleGraph& graph, Amount k, IsVariant variant) {
  validate_graph(graph);
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  RawInstance raw;
  for (const auto& v : graph.vertices) raw.projects.push_back({v, 1});
  std::size_t index = 0;
  for (const auto& [a, b] : graph.edges) {
    ++index;
    const auto [x, y] = std::minmax(a, b);
    const std::string eid = detail::padded_id("e", index, graph.edges.size());
    raw.groups.push_back({eid, {x, y}, 1, 0});
    if (variant == IsVariant::PerEdgeVoters) {
      raw.voters.push_back({"w" + eid.substr(1) + "a", {x}});
      raw.voters.push_back({"w" + eid.substr(1) + "b", {y}});
    }
  }
  if (variant == IsVariant::SingleVoter) {
    Voter all{"v", {}};
    for (const auto& v : graph.vertices) all.approves.push_back(v);
    raw.voters.push_back(std::move(all));
  }
  raw.global_budget = k;
  return validate_instance(std::move(raw));
}

/// Partition reduction: projects x_i^1, x_i^2 of cost x_i, a pair group of
/// budget x_i for each i, two side groups of budget sum/2, one voter
/// approving everything, global budget sum. The instance reaches utility
/// |numbers| iff the numbers split into two halves of equal sum.
/// Throws Error(OddTotal) when the sum is odd.
inline Instance gen_from_partition(const std::vector<Amount>& numbers) {
  if (numbers.empty()) throw Error(ErrorCode::InvalidArgument, "numbers must not be empty");
  Amount total = 0;
  for (Amount x : numbers) {
    if (x <= 0) throw Error(ErrorCode::InvalidArgument, "numbers must be positive");
    total += x;
  }
  if (total % 2 != 0) throw Error(ErrorCode::OddTotal, "sum " + std::to_string(total) + " is odd");
  RawInstance raw;
  Group side1{"side1", {}, total / 2, 0};
  Group side2{"side2", {}, total / 2, 0};
  Voter all{"v", {}};
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    const std::string base = detail::padded_id("x", i + 1, numbers.size());
    const std::string first = base + "_1";
    const std::string second = base + "_2";
    raw.projects.push_back({first, numbers[i]});
    raw.projects.push_back({second, numbers[i]});
    raw.groups.push_back({"pair" + base.substr(1), {first, second}, numbers[i], 0});
    side1.members.push_back(first);
    side2.members.push_back(second);
    all.approves.push_back(first);
    all.approves.push_back(second);
  }
  raw.groups.push_back(std::move(side1));
  raw.groups.push_back(std::move(side2));
  raw.voters.push_back(std::move(all));
  raw.global_budget = total;
  return validate_instance(std::move(raw));
}

}  // namespace grouppb

#endif  // GROUPPB_GENERATE_HPP
