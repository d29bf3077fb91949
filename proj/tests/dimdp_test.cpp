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

TEST(Dimdp, ExampleOne) {
  const Instance inst = testing::example1();
  EXPECT_EQ(dimdp_cells(inst), 72u);
  const auto out = solve_dimdp(inst);
  EXPECT_EQ(out.utility, 4);
  EXPECT_EQ(out.bundle.project_ids, (std::vector<std::string>{"p2", "p3", "p4"}));
  EXPECT_EQ(out.stats.cells, 72u);
}

TEST(Dimdp, AllBudgetsZero) {
  Instance inst = testing::example1();
  inst.global_budget = 0;
  for (auto& g : inst.groups) g.budget = 0;
  const auto out = solve_dimdp(inst);
  EXPECT_EQ(out.utility, 0);
  EXPECT_TRUE(out.bundle.project_ids.empty());
  EXPECT_EQ(dimdp_cells(inst), 1u);
}

TEST(Dimdp, TriangleCountsZeroRow) {
  SimpleGraph k3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}};
  const Instance inst = gen_from_graph_is(k3, 1, IsVariant::SingleVoter);
  EXPECT_EQ(dimdp_cells(inst), 16u);  // (1+1)^3 group axes times (1+1) global
  EXPECT_EQ(solve_dimdp(inst).utility, 1);
}

TEST(Dimdp, CellCap) {
  DimdpOptions opts;
  opts.cell_cap = 10;
  try {
    solve_dimdp(testing::example1(), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TableTooLarge);
  }
}

TEST(Dimdp, MatchesOracle) {
  for (const auto& inst : testing::small_corpus(200)) {
    const auto cells = dimdp_cells(inst);
    if (!cells || *cells > 5'000'000) continue;
    const auto oracle = solve_bruteforce(inst);
    const auto out = solve_dimdp(inst);
    EXPECT_EQ(out.utility, *oracle.optimum_utility);
    EXPECT_EQ(out.bundle.total_cost, oracle.witness->total_cost);
    EXPECT_TRUE(check_bundle(inst, out.bundle.project_ids).feasible);
  }
}

}  // namespace
}  // namespace grouppb
