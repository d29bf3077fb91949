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
 * @file dimdp.hpp
 * @brief Exact (g+1)-dimensional knapsack dynamic program.
 *
 * One dimension per group (in id order) with size b(F) + 1, and a last
 * dimension of size B + 1 for the global budget. Project p has weight c(p)
 * on the global dimension and on every group containing it, zero elsewhere.
 * f(v) is the best utility whose weight vector fits in v.
 */

#ifndef GROUPPB_DIMDP_HPP
#define GROUPPB_DIMDP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/outcome.hpp"

namespace grouppb {

struct DimdpOptions {
  std::uint64_t cell_cap = 100'000'000;
};

/// Cells of the budget table, or nullopt if the product overflows 2^63.
inline std::optional<std::uint64_t> dimdp_cells(const Instance& inst) {
  std::uint64_t cells = 1;
  auto mul = [&](Amount size) {
    const auto s = static_cast<std::uint64_t>(size) + 1;
    if (cells > (std::uint64_t{1} << 63) / s) return false;
    cells *= s;
    return true;
  };
  for (const auto& g : inst.groups) {
    if (!mul(std::min(g.budget, inst.global_budget))) return std::nullopt;
  }
  if (!mul(inst.global_budget)) return std::nullopt;
  return cells;
}

/// Exact optimum; the witness has minimum cost among optimal bundles.
/// Throws Error(TableTooLarge) when the table exceeds the cell cap.
inline SolveOutcome solve_dimdp(const Instance& inst, const DimdpOptions& options = {}) {
  detail::require_no_min_utility(inst, "dimdp");
  const Problem prob = compile(inst);
  const auto cells = dimdp_cells(inst);
  if (!cells || *cells > options.cell_cap) {
    throw Error(ErrorCode::TableTooLarge,
                "budget table needs " + (cells ? std::to_string(*cells) : std::string("> 2^63")) +
                    " cells, cap is " + std::to_string(options.cell_cap));
  }
  SolveStats stats;
  stats.cells = *cells;
  std::vector<std::size_t> witness;
  {
    ScopedTimer timer(stats);
    const std::size_t dims = prob.g() + 1;
    // A group budget above B never binds beyond B, so its axis stops at B.
    std::vector<Amount> size(dims);
    for (std::size_t d = 0; d < prob.g(); ++d) size[d] = std::min(prob.group_budget[d], prob.budget) + 1;
    size[prob.g()] = prob.budget + 1;
    std::vector<std::uint64_t> stride(dims);
    std::uint64_t acc = 1;
    for (std::size_t d = dims; d-- > 0;) {
      stride[d] = acc;
      acc *= static_cast<std::uint64_t>(size[d]);
    }
    const std::uint64_t total = acc;

    std::vector<Amount> f(total, 0);
    const std::size_t m = prob.m();
    const std::size_t words = (total + 63) / 64;
    std::vector<std::vector<std::uint64_t>> take(m, std::vector<std::uint64_t>(words, 0));
    std::vector<Amount> weight(dims);
    std::vector<Amount> coord(dims);

    for (std::size_t p = 0; p < m; ++p) {
      std::uint64_t offset = 0;
      for (std::size_t d = 0; d < dims; ++d) {
        const bool in = d == prob.g() || prob.groups[d].test(p);
        weight[d] = in ? prob.cost[p] : 0;
        offset += static_cast<std::uint64_t>(weight[d]) * stride[d];
      }
      bool fits_somewhere = true;
      for (std::size_t d = 0; d < dims; ++d) fits_somewhere = fits_somewhere && weight[d] < size[d];
      if (!fits_somewhere || prob.score[p] == 0) continue;
      // Descending sweep so every read sees the table before item p.
      for (std::size_t d = 0; d < dims; ++d) coord[d] = size[d] - 1;
      for (std::uint64_t cell = total; cell-- > 0;) {
        bool ok = true;
        for (std::size_t d = 0; d < dims && ok; ++d) ok = coord[d] >= weight[d];
        if (ok) {
          const Amount with = f[cell - offset] + prob.score[p];
          if (with > f[cell]) {
            f[cell] = with;
            take[p][cell / 64] |= std::uint64_t{1} << (cell % 64);
          }
        }
        for (std::size_t d = dims; d-- > 0;) {
          if (coord[d] > 0) {
            --coord[d];
            break;
          }
          coord[d] = size[d] - 1;
        }
      }
    }

    // Full group budgets; the smallest global budget reaching the optimum
    // gives the cheapest optimal bundle.
    std::uint64_t base = 0;
    for (std::size_t d = 0; d < prob.g(); ++d) base += static_cast<std::uint64_t>(size[d] - 1) * stride[d];
    const Amount best = f[base + static_cast<std::uint64_t>(prob.budget)];
    std::uint64_t cell = base;
    while (f[cell] != best) ++cell;
    for (std::size_t p = m; p-- > 0;) {
      if (take[p][cell / 64] >> (cell % 64) & 1U) {
        witness.push_back(p);
        std::uint64_t offset = 0;
        for (std::size_t d = 0; d < dims; ++d) {
          if (d == prob.g() || prob.groups[d].test(p)) offset += static_cast<std::uint64_t>(prob.cost[p]) * stride[d];
        }
        cell -= offset;
      }
    }
  }
  SolveOutcome out = detail::make_outcome(inst, prob, witness, "dimdp");
  out.stats = stats;
  return out;
}

}  // namespace grouppb

#endif  // GROUPPB_DIMDP_HPP
