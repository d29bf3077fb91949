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
 * @file approx.hpp
 * @brief LP rounding and the approximation scheme parameterized by g.
 *
 * LP rounding returns the better of the integral part of a basic optimum
 * and the best single project. A basic optimum has at most g + 1 fractional
 * variables, each worth at most the best single project, which gives the
 * factor g + 2.
 *
 * The scheme works on project types. For each type R and value v it keeps
 * the cheapest subset of type R with utility exactly v as one derived
 * project. Derived scores are rounded down to powers of 1 + ε and only the
 * cheapest derived project per (type, power) survives. A search then picks
 * at most one derived project per type, the types picked being the guess of
 * which types are used at all, and maximizes the rounded score under all
 * budgets. The chosen derived projects map back to real bundles.
 */

#ifndef GROUPPB_APPROX_HPP
#define GROUPPB_APPROX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/lp.hpp"
#include "grouppb/outcome.hpp"
#include "grouppb/rational.hpp"
#include "grouppb/types.hpp"

namespace grouppb {

/// (g+2)-approximation by rounding a basic optimum of the LP relaxation.
inline SolveOutcome solve_lp_round(const Instance& inst) {
  detail::require_no_min_utility(inst, "lp-round");
  const Problem prob = compile(inst);
  SolveStats stats;
  std::vector<std::size_t> chosen;
  {
    ScopedTimer timer(stats);
    const LpModel model = lp_relaxation(inst);
    const BasicSolution sol = simplex_solve(model);
    stats.nodes = sol.pivots;

    std::vector<std::size_t> integral;
    for (std::size_t k = 0; k < model.variables.size(); ++k) {
      if (sol.values[k] == 1) integral.push_back(model.project_index[k]);
    }
    std::optional<std::size_t> single;
    for (std::size_t p : model.project_index) {
      if (prob.score[p] == 0) continue;
      if (!single || prob.score[p] > prob.score[*single]) single = p;
    }
    auto value = [&](const std::vector<std::size_t>& xs, Amount& cost) {
      Amount u = 0;
      cost = 0;
      for (std::size_t p : xs) {
        u += prob.score[p];
        cost += prob.cost[p];
      }
      return u;
    };
    chosen = integral;
    if (single) {
      std::vector<std::size_t> alt{*single};
      Amount ca = 0;
      Amount cb = 0;
      const Amount ua = value(integral, ca);
      const Amount ub = value(alt, cb);
      if (better_witness(ub, cb, alt, ua, ca, integral)) chosen = std::move(alt);
    }
  }
  SolveOutcome out = detail::make_outcome(inst, prob, chosen, "lp-round");
  out.exact = false;
  out.guarantee = Rational(static_cast<long long>(prob.g() + 2));
  out.stats = stats;
  return out;
}

struct FptasOptions {
  std::uint64_t node_cap = 10'000'000;
};

/// Largest k with (1 + eps)^k ≤ v, for v ≥ 1, by exact comparison.
inline std::size_t score_bucket(Amount v, const Rational& eps) {
  const Rational base = 1 + eps;
  Rational power = 1;
  std::size_t k = 0;
  for (;;) {
    Rational next = power * base;
    if (next > v) return k;
    power = std::move(next);
    ++k;
  }
}

namespace detail {

struct DerivedProject {
  std::size_t bucket = 0;
  Amount value = 0;  // exact utility of the underlying subset
  Amount cost = 0;
  BigInt scaled;     // (1+eps)^bucket scaled to a common integer denominator
};

class FptasSearch {
 public:
  FptasSearch(const Problem& prob, const TypeIndex& idx, std::vector<std::vector<DerivedProject>> items,
              std::uint64_t node_cap)
      : prob_(prob), idx_(idx), items_(std::move(items)), node_cap_(node_cap) {
    const std::size_t t = idx.t();
    ceiling_.assign(t + 1, BigInt(0));
    for (std::size_t r = t; r-- > 0;) {
      BigInt top = 0;
      for (const auto& d : items_[r]) top = std::max(top, d.scaled);
      ceiling_[r] = ceiling_[r + 1] + top;
    }
    used_.assign(prob.g() + 1, 0);
    pick_.assign(t, kNone);
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::size_t> run() {
    best_pick_.assign(idx_.t(), kNone);
    best_value_ = 0;
    descend(0, BigInt(0));
    return best_pick_;
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Maps the best choice back to real projects through the exact tables.
  std::vector<std::size_t> best_bundle(const TypeDpTable& tables) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < idx_.t(); ++r) {
      if (best_pick_[r] == kNone) continue;
      const auto v = static_cast<std::size_t>(items_[r][best_pick_[r]].value);
      const auto& b = tables.tables[r].bundle[v];
      out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void descend(std::size_t r, const BigInt& value) {
    if (++nodes_ > node_cap_) {
      throw Error(ErrorCode::SearchBudgetExceeded, "approximation search exceeded the node cap");
    }
    if (value > best_value_) {
      best_value_ = value;
      best_pick_ = pick_;
    }
    if (r == idx_.t() || value + ceiling_[r] <= best_value_) return;
    const auto& groups = idx_.types[r].groups;
    // Type r in the guess: one derived project, highest bucket first.
    for (std::size_t k = items_[r].size(); k-- > 0;) {
      const auto& d = items_[r][k];
      if (!fits(groups, d.cost)) continue;
      charge(groups, d.cost, +1);
      pick_[r] = k;
      descend(r + 1, value + d.scaled);
      pick_[r] = kNone;
      charge(groups, d.cost, -1);
      if (value + ceiling_[r] <= best_value_) return;
    }
    // Type r left out of the guess.
    descend(r + 1, value);
  }

  bool fits(const Problem::Set& groups, Amount c) const {
    if (used_[prob_.g()] + c > prob_.budget) return false;
    for (auto j = groups.find_first(); j != Problem::Set::npos; j = groups.find_next(j)) {
      if (used_[j] + c > prob_.group_budget[j]) return false;
    }
    return true;
  }

  void charge(const Problem::Set& groups, Amount c, int sign) {
    used_[prob_.g()] += sign * c;
    for (auto j = groups.find_first(); j != Problem::Set::npos; j = groups.find_next(j)) used_[j] += sign * c;
  }

  const Problem& prob_;
  const TypeIndex& idx_;
  std::vector<std::vector<DerivedProject>> items_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<BigInt> ceiling_;
  std::vector<Amount> used_;
  std::vector<std::size_t> pick_;
  std::vector<std::size_t> best_pick_;
  BigInt best_value_;
};

}  // namespace detail

/// (1+ε)-approximation. Throws Error(InvalidArgument) for ε ≤ 0 and
/// Error(SearchBudgetExceeded) past the node cap.
inline SolveOutcome solve_fptas_g(const Instance& inst, const Rational& epsilon,
                                  const FptasOptions& options = {}) {
  detail::require_no_min_utility(inst, "fptas-g");
  if (epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const Problem prob = compile(inst);
  SolveStats stats;
  std::vector<std::size_t> chosen;
  {
    ScopedTimer timer(stats);
    // Zero-score and individually infeasible projects never help.
    const auto ok = individually_feasible(prob);
    Problem kept = prob;
    std::vector<std::size_t> back;
    {
      std::vector<std::size_t> keep;
      for (std::size_t p = 0; p < prob.m(); ++p) {
        if (ok[p] && prob.score[p] > 0) keep.push_back(p);
      }
      kept.cost.clear();
      kept.score.clear();
      for (std::size_t p : keep) {
        kept.cost.push_back(prob.cost[p]);
        kept.score.push_back(prob.score[p]);
      }
      for (std::size_t j = 0; j < prob.g(); ++j) {
        Problem::Set set(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) {
          if (prob.groups[j].test(keep[k])) set.set(k);
        }
        kept.groups[j] = std::move(set);
      }
      back = std::move(keep);
    }
    std::vector<std::string> gids;
    std::vector<std::string> pids;
    for (const auto& g : inst.groups) gids.push_back(g.id);
    for (std::size_t p : back) pids.push_back(inst.projects[p].id);
    const TypeIndex idx = detail::type_index(kept, gids, pids);

    Amount a_max = 0;
    for (Amount a : kept.score) a_max += a;
    const TypeDpTable tables = detail::type_tables(kept, idx, a_max, TableMode::Exact);

    // Derived projects, bucketed.
    const std::size_t top_bucket = a_max > 0 ? score_bucket(a_max, epsilon) : 0;
    const Rational base = 1 + epsilon;
    const BigInt num = boost::multiprecision::numerator(base);
    const BigInt den = boost::multiprecision::denominator(base);
    std::vector<std::vector<detail::DerivedProject>> items(idx.t());
    for (std::size_t r = 0; r < idx.t(); ++r) {
      std::vector<std::optional<detail::DerivedProject>> best(top_bucket + 1);
      const auto& tab = tables.tables[r];
      for (std::size_t v = 1; v < tab.cost.size(); ++v) {
        if (tab.cost[v] == kInfinity) continue;
        const std::size_t k = score_bucket(static_cast<Amount>(v), epsilon);
        auto& slot = best[k];
        if (!slot || tab.cost[v] < slot->cost) {
          detail::DerivedProject d;
          d.bucket = k;
          d.value = static_cast<Amount>(v);
          d.cost = tab.cost[v];
          d.scaled = boost::multiprecision::pow(num, static_cast<unsigned>(k)) *
                     boost::multiprecision::pow(den, static_cast<unsigned>(top_bucket - k));
          slot = std::move(d);
        }
      }
      // Drop derived projects beaten on both bucket and cost.
      Amount cheapest_above = kInfinity;
      for (std::size_t k = best.size(); k-- > 0;) {
        if (!best[k]) continue;
        if (best[k]->cost >= cheapest_above) {
          best[k].reset();
          continue;
        }
        cheapest_above = best[k]->cost;
      }
      for (auto& slot : best) {
        if (slot) items[r].push_back(std::move(*slot));
      }
    }

    detail::FptasSearch search(kept, idx, std::move(items), options.node_cap);
    search.run();
    stats.nodes = search.nodes();
    for (std::size_t k : search.best_bundle(tables)) chosen.push_back(back[k]);
  }
  SolveOutcome out = detail::make_outcome(inst, prob, chosen, "fptas-g");
  out.exact = false;
  out.guarantee = 1 + epsilon;
  out.epsilon = epsilon;
  out.stats = stats;
  return out;
}

}  // namespace grouppb

#endif  // GROUPPB_APPROX_HPP
