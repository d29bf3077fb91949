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

#include <gtest/gtest.h>

#include "support/corpus.hpp"

namespace grouppb {
namespace {

TEST(Oracle, ExampleOne) {
  const auto res = solve_bruteforce(testing::example1());
  ASSERT_TRUE(res.optimum_utility);
  EXPECT_EQ(*res.optimum_utility, 4);
  EXPECT_EQ(res.witness->project_ids, (std::vector<std::string>{"p2", "p3", "p4"}));
  EXPECT_EQ(res.witness->total_cost, 5);
  EXPECT_EQ(res.subsets, 16u);
  EXPECT_EQ(res.per_utility_min_cost, (std::vector<Amount>{0, 1, 2, 4, 5, kInfinity}));
}

TEST(Oracle, UnreachableMinUtility) {
  Instance inst = testing::example1();
  inst.groups[0].min_utility = 3;
  const auto res = solve_bruteforce(inst);
  EXPECT_FALSE(res.optimum_utility);
  EXPECT_FALSE(res.witness);
  try {
    solve_bruteforce_outcome(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
}

TEST(Oracle, ReachableMinUtility) {
  Instance inst = testing::example1();
  inst.groups[0].min_utility = 2;
  const auto res = solve_bruteforce(inst);
  ASSERT_TRUE(res.optimum_utility);
  EXPECT_TRUE(check_bundle(inst, res.witness->project_ids).feasible);
}

TEST(Oracle, ZeroBudget) {
  Instance inst = testing::example1();
  inst.global_budget = 0;
  EXPECT_EQ(*solve_bruteforce(inst).optimum_utility, 0);
}

TEST(Oracle, SizeLimit) {
  GenParams p;
  p.m = 30;
  const Instance inst = gen_random(p);
  try {
    solve_bruteforce(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Oracle, WitnessIsCanonicalAndThreadIndependent) {
  for (const auto& inst : testing::small_corpus(80)) {
    const auto one = solve_bruteforce(inst);
    OracleOptions opts;
    opts.threads = 3;
    const auto three = solve_bruteforce(inst, opts);
    EXPECT_EQ(one.witness, three.witness);
    EXPECT_EQ(one.per_utility_min_cost, three.per_utility_min_cost);
    EXPECT_EQ(one.per_utility_min_cost[0], 0);

    // Canonical: maximum utility, then minimum cost, then smallest index list.
    const Problem prob = compile(inst);
    std::vector<std::size_t> best;
    Amount best_u = -1;
    Amount best_c = 0;
    for (std::uint32_t mask = 0; mask < (1U << prob.m()); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t p = 0; p < prob.m(); ++p) {
        if (mask >> p & 1U) idx.push_back(p);
      }
      const auto rep = check_indices(inst, prob, idx);
      if (!rep.feasible) continue;
      if (best_u < 0 || better_witness(rep.total_utility, rep.total_cost, idx, best_u, best_c, best)) {
        best_u = rep.total_utility;
        best_c = rep.total_cost;
        best = idx;
      }
    }
    EXPECT_EQ(one.witness_indices, best);
  }
}

}  // namespace
}  // namespace grouppb
