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
 * @file oracle.hpp
 * @brief Exhaustive 2^m solver. Ground truth for every other solver.
 *
 * The oracle is the only solver that honours group utility requirements.
 */

#ifndef GROUPPB_ORACLE_HPP
#define GROUPPB_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/outcome.hpp"

namespace grouppb {

struct OracleOptions {
  std::size_t max_projects = 24;
  unsigned threads = 1;
};

struct OracleResult {
  /// Empty if no bundle (not even the empty one) is feasible.
  std::optional<Amount> optimum_utility;
  std::optional<Bundle> witness;
  std::vector<std::size_t> witness_indices;
  /// Indexed by utility z in [0, A]; kInfinity where no feasible bundle has
  /// utility exactly z.
  std::vector<Amount> per_utility_min_cost;
  std::uint64_t subsets = 0;
};

namespace detail {

struct OracleChunk {
  bool found = false;
  Amount best_util = 0;
  Amount best_cost = 0;
  std::uint64_t best_mask = 0;
  std::vector<Amount> profile;
};

inline std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

inline bool better_mask(Amount ua, Amount ca, std::uint64_t ma, Amount ub, Amount cb,
                        std::uint64_t mb) {
  if (ua != ub) return ua > ub;
  if (ca != cb) return ca < cb;
  return better_witness(ua, ca, mask_to_indices(ma), ub, cb, mask_to_indices(mb));
}

inline OracleChunk oracle_range(const Problem& prob, const std::vector<std::uint64_t>& group_masks,
                                std::uint64_t begin, std::uint64_t end, Amount total_score) {
  OracleChunk chunk;
  chunk.profile.assign(static_cast<std::size_t>(total_score) + 1, kInfinity);
  const std::size_t g = group_masks.size();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    Amount cost = 0;
    Amount util = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int i = __builtin_ctzll(rest);
      cost += prob.cost[i];
      util += prob.score[i];
    }
    if (cost > prob.budget) continue;
    bool ok = true;
    for (std::size_t j = 0; j < g && ok; ++j) {
      Amount gc = 0;
      Amount gu = 0;
      for (std::uint64_t rest = mask & group_masks[j]; rest; rest &= rest - 1) {
        const int i = __builtin_ctzll(rest);
        gc += prob.cost[i];
        gu += prob.score[i];
      }
      ok = gc <= prob.group_budget[j] && gu >= prob.group_min_utility[j];
    }
    if (!ok) continue;
    auto& slot = chunk.profile[static_cast<std::size_t>(util)];
    slot = std::min(slot, cost);
    if (!chunk.found || better_mask(util, cost, mask, chunk.best_util, chunk.best_cost,
                                    chunk.best_mask)) {
      chunk.found = true;
      chunk.best_util = util;
      chunk.best_cost = cost;
      chunk.best_mask = mask;
    }
  }
  return chunk;
}

}  // namespace detail

/// Enumerates all 2^m bundles. Throws Error(TooLarge) above
/// options.max_projects (and never goes beyond 62 projects).
inline OracleResult solve_bruteforce_problem(const Problem& prob, OracleOptions options = {}) {
  const std::size_t m = prob.m();
  if (m > options.max_projects || m > 62) {
    throw Error(ErrorCode::TooLarge, "brute force limited to " +
                                         std::to_string(std::min<std::size_t>(options.max_projects, 62)) +
                                         " projects, instance has " + std::to_string(m));
  }
  std::vector<std::uint64_t> group_masks;
  for (const auto& set : prob.groups) {
    std::uint64_t mask = 0;
    for (auto i = set.find_first(); i != Problem::Set::npos; i = set.find_next(i)) {
      mask |= std::uint64_t{1} << i;
    }
    group_masks.push_back(mask);
  }
  const Amount total_score = prob.total_score();
  const std::uint64_t count = std::uint64_t{1} << m;
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));

  std::vector<detail::OracleChunk> chunks(threads);
  if (threads == 1) {
    chunks[0] = detail::oracle_range(prob, group_masks, 0, count, total_score);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = count * t / threads;
      const std::uint64_t end = count * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] {
        chunks[t] = detail::oracle_range(prob, group_masks, begin, end, total_score);
      });
    }
    for (auto& w : workers) w.join();
  }

  OracleResult res;
  res.subsets = count;
  res.per_utility_min_cost.assign(static_cast<std::size_t>(total_score) + 1, kInfinity);
  bool found = false;
  detail::OracleChunk best;
  for (const auto& c : chunks) {
    for (std::size_t z = 0; z < c.profile.size(); ++z) {
      res.per_utility_min_cost[z] = std::min(res.per_utility_min_cost[z], c.profile[z]);
    }
    if (c.found && (!found || detail::better_mask(c.best_util, c.best_cost, c.best_mask,
                                                  best.best_util, best.best_cost,
                                                  best.best_mask))) {
      found = true;
      best.best_util = c.best_util;
      best.best_cost = c.best_cost;
      best.best_mask = c.best_mask;
    }
  }
  if (found) {
    res.optimum_utility = best.best_util;
    res.witness_indices = detail::mask_to_indices(best.best_mask);
  }
  return res;
}

inline OracleResult solve_bruteforce(const Instance& inst, OracleOptions options = {}) {
  const Problem prob = compile(inst);
  OracleResult res = solve_bruteforce_problem(prob, options);
  if (res.optimum_utility) res.witness = make_bundle(inst, prob, res.witness_indices);
  return res;
}

/// The oracle as a regular solver. Throws Error(Infeasible) if no bundle
/// satisfies the utility requirements.
inline SolveOutcome solve_bruteforce_outcome(const Instance& inst, OracleOptions options = {}) {
  SolveStats stats;
  OracleResult res;
  Problem prob;
  {
    ScopedTimer timer(stats);
    prob = compile(inst);
    res = solve_bruteforce_problem(prob, options);
  }
  if (!res.optimum_utility) {
    throw Error(ErrorCode::Infeasible, "no bundle satisfies the group utility requirements");
  }
  SolveOutcome out = detail::make_outcome(inst, prob, res.witness_indices, "bruteforce");
  out.profile = std::move(res.per_utility_min_cost);
  stats.nodes = res.subsets;
  out.stats = stats;
  return out;
}

}  // namespace grouppb

#endif  // GROUPPB_ORACLE_HPP
