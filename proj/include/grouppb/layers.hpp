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
 * @file layers.hpp
 * @brief Layer decompositions of a group family.
 *
 * A layer decomposition partitions the groups so that the groups inside a
 * layer are pairwise disjoint; its width is the number of layers. A layer
 * decomposition is exactly a proper coloring of the conflict graph (one
 * vertex per group, an edge per intersecting pair), so the minimum width is
 * the chromatic number of that graph.
 */

#ifndef GROUPPB_LAYERS_HPP
#define GROUPPB_LAYERS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "grouppb/core.hpp"

namespace grouppb {

/// A family of named subsets of a universe {0, ..., universe_size - 1}.
struct SetFamily {
  std::vector<std::string> ids;
  std::vector<Problem::Set> sets;
  std::size_t universe_size = 0;
  /// Element names, index-aligned with the universe (may be empty).
  std::vector<std::string> elements;

  std::size_t size() const { return sets.size(); }
};

inline SetFamily family_of(const Instance& inst) {
  const Problem prob = compile(inst);
  SetFamily fam;
  fam.universe_size = prob.m();
  for (const auto& p : inst.projects) fam.elements.push_back(p.id);
  for (std::size_t j = 0; j < inst.groups.size(); ++j) fam.ids.push_back(inst.groups[j].id);
  fam.sets = prob.groups;
  return fam;
}

/// Builds a family from named member lists; elements are numbered in sorted
/// order of their names.
inline SetFamily make_family(const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
  std::vector<std::string> elements;
  for (const auto& [id, members] : groups) elements.insert(elements.end(), members.begin(), members.end());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SetFamily fam;
  fam.universe_size = elements.size();
  fam.elements = elements;
  for (const auto& [id, members] : groups) {
    Problem::Set set(elements.size());
    for (const auto& e : members) {
      set.set(static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), e) - elements.begin()));
    }
    fam.ids.push_back(id);
    fam.sets.push_back(std::move(set));
  }
  return fam;
}

struct ConflictGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::vector<std::size_t>> adjacency;         // sorted

  std::size_t degree(std::size_t v) const { return adjacency[v].size(); }
};

inline ConflictGraph conflict_graph(const SetFamily& fam) {
  ConflictGraph graph;
  graph.vertex_count = fam.size();
  graph.adjacency.resize(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (fam.sets[i].intersects(fam.sets[j])) {
        graph.edges.emplace_back(i, j);
        graph.adjacency[i].push_back(j);
        graph.adjacency[j].push_back(i);
      }
    }
  }
  return graph;
}

/// Layers hold indices into the family.
struct LayerDecomposition {
  std::vector<std::vector<std::size_t>> layers;

  std::size_t width() const { return layers.size(); }
};

inline std::vector<std::vector<std::string>> layer_ids(const SetFamily& fam,
                                                       const LayerDecomposition& dec) {
  std::vector<std::vector<std::string>> out;
  for (const auto& layer : dec.layers) {
    auto& ids = out.emplace_back();
    for (std::size_t j : layer) ids.push_back(fam.ids[j]);
  }
  return out;
}

/// True iff `dec` partitions the family and every layer is pairwise disjoint.
inline bool is_valid_decomposition(const SetFamily& fam, const LayerDecomposition& dec) {
  std::vector<int> seen(fam.size(), 0);
  for (const auto& layer : dec.layers) {
    if (layer.empty()) return false;
    for (std::size_t a = 0; a < layer.size(); ++a) {
      if (layer[a] >= fam.size() || seen[layer[a]]++) return false;
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        if (layer[b] < fam.size() && fam.sets[layer[a]].intersects(fam.sets[layer[b]])) return false;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

namespace detail {

inline LayerDecomposition from_colors(const std::vector<std::size_t>& color, std::size_t colors) {
  LayerDecomposition dec;
  dec.layers.resize(colors);
  for (std::size_t v = 0; v < color.size(); ++v) dec.layers[color[v]].push_back(v);
  std::erase_if(dec.layers, [](const auto& layer) { return layer.empty(); });
  return dec;
}

}  // namespace detail

/// A decomposition of width at most 2 if the conflict graph is bipartite
/// (BFS 2-coloring), nullopt otherwise. An edgeless family yields a single
/// layer.
inline std::optional<LayerDecomposition> two_layer_decomposition(const SetFamily& fam) {
  const ConflictGraph graph = conflict_graph(fam);
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(fam.size(), kUncolored);
  for (std::size_t start = 0; start < fam.size(); ++start) {
    if (color[start] != kUncolored) continue;
    color[start] = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : graph.adjacency[v]) {
        if (color[w] == kUncolored) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return detail::from_colors(color, 2);
}

/// Every two groups are disjoint or nested.
inline bool is_hierarchical(const SetFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const auto& a = fam.sets[i];
      const auto& b = fam.sets[j];
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
  }
  return true;
}

struct OrderedLayering {
  /// Layering of the original groups only; the virtual root is not listed.
  LayerDecomposition decomposition;
  /// Whether the universe had to be added as an extra root set (it sits in
  /// a layer of its own in front of decomposition.layers).
  bool virtual_root = false;

  std::size_t augmented_width() const { return decomposition.width() + (virtual_root ? 1 : 0); }
};

/// Ordered layering of a hierarchical family: every group in layer i >= 1 is
/// a subset of some group in layer i - 1.
///
/// The universe is added as a root unless a group equals it. The
/// containment digraph is ordered topologically (size descending, ties by
/// id), an out-tree is grown from the root by DFS that visits out-neighbours
/// in that order, and each group lands in the layer given by its tree depth.
/// The augmented width equals the layerwidth of the root-augmented family.
///
/// Throws Error(NotHierarchical) or Error(InvalidArgument) if a group is
/// not contained in the universe.
inline OrderedLayering ordered_hier_layers(const SetFamily& fam, const Problem::Set& universe) {
  if (!is_hierarchical(fam)) throw Error(ErrorCode::NotHierarchical, "family is not hierarchical");
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (!fam.sets[j].is_subset_of(universe)) {
      throw Error(ErrorCode::InvalidArgument, "group '" + fam.ids[j] + "' is not inside the universe");
    }
  }

  // Vertices 0..size-1 are the groups; vertex `root` is the universe unless
  // some group already equals it.
  std::optional<std::size_t> explicit_root;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (fam.sets[j] == universe && (!explicit_root || fam.ids[j] < fam.ids[*explicit_root])) explicit_root = j;
  }
  const std::size_t n = fam.size() + (explicit_root ? 0 : 1);
  const std::size_t root = explicit_root.value_or(fam.size());
  auto set_of = [&](std::size_t v) -> const Problem::Set& { return v < fam.size() ? fam.sets[v] : universe; };

  // Topological order of the containment digraph.
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::sort(sigma.begin(), sigma.end(), [&](std::size_t a, std::size_t b) {
    if (a == root || b == root) return a == root && b != root;
    const auto ca = set_of(a).count();
    const auto cb = set_of(b).count();
    if (ca != cb) return ca > cb;
    return fam.ids[a] < fam.ids[b];
  });
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[sigma[k]] = k;

  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& sa = set_of(a);
      const auto& sb = set_of(b);
      // Arc a -> b for b inside a; equal sets are ordered by sigma.
      const bool strict = sb.is_subset_of(sa) && (sa != sb || position[a] < position[b]);
      if (strict) out[a].push_back(b);
    }
    std::sort(out[a].begin(), out[a].end(),
              [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
  }

  std::vector<std::size_t> depth(n, static_cast<std::size_t>(-1));
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
  depth[root] = 0;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == out[v].size()) {
      stack.pop_back();
      continue;
    }
    const std::size_t w = out[v][next++];
    if (depth[w] != static_cast<std::size_t>(-1)) continue;
    depth[w] = depth[v] + 1;
    stack.emplace_back(w, 0);
  }

  OrderedLayering result;
  result.virtual_root = !explicit_root.has_value();
  const std::size_t offset = result.virtual_root ? 1 : 0;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    // Empty groups conflict with nothing and go to the first layer.
    const std::size_t layer = fam.sets[j].none() ? 0 : depth[j] - offset;
    if (result.decomposition.layers.size() <= layer) result.decomposition.layers.resize(layer + 1);
    result.decomposition.layers[layer].push_back(j);
  }
  for (auto& layer : result.decomposition.layers) {
    std::sort(layer.begin(), layer.end(),
              [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
  }
  return result;
}

inline OrderedLayering ordered_hier_layers(const SetFamily& fam) {
  Problem::Set universe(fam.universe_size);
  for (const auto& s : fam.sets) universe |= s;
  return ordered_hier_layers(fam, universe);
}

/// Greedy coloring of the conflict graph in degree-descending order (ties by
/// group id). Width is at most max degree + 1.
inline LayerDecomposition greedy_layers(const SetFamily& fam) {
  const ConflictGraph graph = conflict_graph(fam);
  std::vector<std::size_t> order(fam.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (graph.degree(a) != graph.degree(b)) return graph.degree(a) > graph.degree(b);
    return fam.ids[a] < fam.ids[b];
  });
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(fam.size(), kUncolored);
  std::size_t colors = 0;
  for (std::size_t v : order) {
    std::vector<bool> used(colors + 1, false);
    for (std::size_t w : graph.adjacency[v]) {
      if (color[w] != kUncolored) used[color[w]] = true;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
    colors = std::max(colors, c + 1);
  }
  return detail::from_colors(color, colors);
}

/// Families larger than this are refused by exact_layerwidth().
inline constexpr std::size_t kExactLayerwidthLimit = 64;

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(const ConflictGraph& graph, std::size_t colors)
      : graph_(graph), colors_(colors), color_(graph.vertex_count, kNone) {
    order_.resize(graph.vertex_count);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return graph.degree(a) > graph.degree(b);
    });
  }

  bool run() { return assign(0, 0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t k, std::size_t used) {
    if (k == order_.size()) return true;
    const std::size_t v = order_[k];
    // Symmetry breaking: a fresh color is only ever the next unused one.
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::size_t w : graph_.adjacency[v]) clash = clash || color_[w] == c;
      if (clash) continue;
      color_[v] = c;
      if (assign(k + 1, std::max(used, c + 1))) return true;
      color_[v] = kNone;
    }
    return false;
  }

  const ConflictGraph& graph_;
  std::size_t colors_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> order_;
};

}  // namespace detail

/// Minimum layer-decomposition width (chromatic number of the conflict
/// graph), or nullopt if it exceeds `cap`. Throws Error(TooLarge) for more
/// than kExactLayerwidthLimit groups.
inline std::optional<std::size_t> exact_layerwidth(const SetFamily& fam, std::size_t cap) {
  if (fam.size() > kExactLayerwidthLimit) {
    throw Error(ErrorCode::TooLarge, "exact layerwidth is limited to " +
                                         std::to_string(kExactLayerwidthLimit) + " groups");
  }
  if (fam.size() == 0) return std::size_t{0};
  const ConflictGraph graph = conflict_graph(fam);
  for (std::size_t k = 1; k <= cap; ++k) {
    if (detail::ColoringSearch(graph, k).run()) return k;
  }
  return std::nullopt;
}

}  // namespace grouppb

#endif  // GROUPPB_LAYERS_HPP
