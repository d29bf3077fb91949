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

SetFamily family(std::initializer_list<std::pair<std::string, std::vector<std::string>>> groups) {
  return make_family(groups);
}

bool hierarchical_after(const SetFamily& fam, const DeletionAnalysis& d) {
  SetFamily rest;
  rest.universe_size = fam.universe_size;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    Problem::Set set = fam.sets[j];
    if (d.kind == DeletionKind::Group) {
      if (std::binary_search(d.deleted_ids.begin(), d.deleted_ids.end(), fam.ids[j])) continue;
    } else {
      for (std::size_t e = 0; e < fam.universe_size; ++e) {
        if (std::binary_search(d.deleted_ids.begin(), d.deleted_ids.end(), fam.elements[e])) set.reset(e);
      }
    }
    rest.ids.push_back(fam.ids[j]);
    rest.sets.push_back(set);
  }
  return is_hierarchical(rest);
}

/// Example 1 plus a conflicting group X = {p1, p2} with budget 3.
Instance example_with_conflict() {
  const Instance base = testing::example1();
  RawInstance raw{base.projects, base.voters, base.groups, base.global_budget};
  raw.groups.push_back({"X", {"p1", "p2"}, 3, 0});
  return validate_instance(raw);
}

TEST(GroupDeletion, Examples) {
  const auto zero = min_group_deletion_set(family_of(testing::example1()), 3);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->size, 0u);
  EXPECT_TRUE(zero->deleted_ids.empty());

  const auto one = min_group_deletion_set(family({{"A", {"a", "b"}}, {"B", {"b", "c"}}}), 3);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size, 1u);

  const auto cycle = family({{"A", {"a", "b"}}, {"B", {"b", "c"}}, {"C", {"c", "d"}}, {"D", {"d", "a"}}});
  const auto two = min_group_deletion_set(cycle, 3);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->size, 2u);
  EXPECT_EQ(testing::exhaustive_group_deletion(cycle), 2u);
  EXPECT_FALSE(min_group_deletion_set(cycle, 1));
}

TEST(ProjectDeletion, Examples) {
  const auto zero = min_project_deletion_set(family_of(testing::example1()), 3);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->size, 0u);

  const auto one = min_project_deletion_set(family({{"A", {"a", "b"}}, {"B", {"b", "c"}}}), 3);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->deleted_ids, (std::vector<std::string>{"b"}));

  const auto ring = family({{"A", {"a", "b", "c"}}, {"B", {"c", "d", "e"}}, {"C", {"e", "f", "a"}}});
  const auto res = min_project_deletion_set(ring, 6);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->size, testing::exhaustive_project_deletion(ring));
  EXPECT_TRUE(hierarchical_after(ring, *res));
}

TEST(Deletion, NodeCapFallsBackToGreedy) {
  const auto cycle = family({{"A", {"a", "b"}}, {"B", {"b", "c"}}, {"C", {"c", "d"}}, {"D", {"d", "a"}}});
  const auto res = min_group_deletion_set(cycle, 4, 1);
  ASSERT_TRUE(res);
  EXPECT_TRUE(res->search_budget_hit);
  EXPECT_TRUE(hierarchical_after(cycle, *res));
  const auto proj = min_project_deletion_set(cycle, 4, 1);
  ASSERT_TRUE(proj);
  EXPECT_TRUE(proj->search_budget_hit);
  EXPECT_TRUE(hierarchical_after(cycle, *proj));
}

TEST(Deletion, MinimaMatchExhaustiveOnPlantedConflicts) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Instance inst = testing::planted_conflicts(seed, 1 + seed % 3);
    const auto fam = family_of(inst);
    const auto g = min_group_deletion_set(fam, fam.size());
    ASSERT_TRUE(g);
    EXPECT_FALSE(g->search_budget_hit);
    EXPECT_EQ(g->size, testing::exhaustive_group_deletion(fam)) << seed;
    EXPECT_TRUE(hierarchical_after(fam, *g));
    const auto p = min_project_deletion_set(fam, fam.universe_size);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->size, testing::exhaustive_project_deletion(fam)) << seed;
    EXPECT_TRUE(hierarchical_after(fam, *p));
  }
}

TEST(SolveGroupDeletion, EmptyDeletionEqualsHier) {
  const Instance inst = testing::example1();
  DeletionAnalysis none;
  const auto out = solve_group_deletion(inst, none);
  const auto hier = solve_hier(inst);
  EXPECT_EQ(out.utility, hier.utility);
  EXPECT_EQ(out.bundle, hier.bundle);
}

TEST(SolveGroupDeletion, ExampleWithAddedConflict) {
  const Instance inst = example_with_conflict();
  const auto d = min_group_deletion_set(family_of(inst), 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size, 1u);
  const auto out = solve_group_deletion(inst, *d);
  EXPECT_EQ(out.utility, *solve_bruteforce(inst).optimum_utility);
  EXPECT_TRUE(check_bundle(inst, out.bundle.project_ids).feasible);
}

TEST(SolveGroupDeletion, InvalidDeletions) {
  const Instance inst = example_with_conflict();
  auto expect_invalid = [&](const DeletionAnalysis& d) {
    try {
      solve_group_deletion(inst, d);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidDeletion);
    }
  };
  expect_invalid(DeletionAnalysis{});  // remainder not hierarchical
  expect_invalid(DeletionAnalysis{DeletionKind::Group, {"nope"}, 1, false});
  expect_invalid(DeletionAnalysis{DeletionKind::Project, {"p1"}, 1, false});
}

TEST(SolveProjectDeletion, EmptyDeletionEqualsHier) {
  const Instance inst = testing::example1();
  const auto out = solve_project_deletion(inst, DeletionAnalysis{DeletionKind::Project, {}, 0, false});
  EXPECT_EQ(out.bundle, solve_hier(inst).bundle);
}

TEST(SolveProjectDeletion, OverlapAtMiddleProject) {
  RawInstance raw;
  raw.projects = {{"p1", 2}, {"p2", 1}, {"p3", 2}};
  raw.voters = {{"v", {"p1", "p2", "p3"}}, {"w", {"p2"}}};
  raw.groups = {{"A", {"p1", "p2"}, 2, 0}, {"B", {"p2", "p3"}, 3, 0}};
  raw.global_budget = 4;
  const Instance inst = validate_instance(raw);
  const auto out = solve_project_deletion(inst, DeletionAnalysis{DeletionKind::Project, {"p2"}, 1, false});
  EXPECT_EQ(out.utility, *solve_bruteforce(inst).optimum_utility);
}

TEST(SolveProjectDeletion, OverBudgetFixedProjectIsPruned) {
  RawInstance raw;
  raw.projects = {{"p1", 1}, {"p2", 5}, {"p3", 1}};
  raw.voters = {{"v", {"p1", "p2", "p3"}}};
  raw.groups = {{"A", {"p1", "p2"}, 2, 0}, {"B", {"p2", "p3"}, 2, 0}};
  raw.global_budget = 10;
  const Instance inst = validate_instance(raw);
  const auto out = solve_project_deletion(inst, DeletionAnalysis{DeletionKind::Project, {"p2"}, 1, false});
  EXPECT_EQ(out.utility, 2);
  EXPECT_EQ(out.bundle.project_ids, (std::vector<std::string>{"p1", "p3"}));
}

TEST(CombinedSolvers, MatchOracleOnPlantedConflicts) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Instance inst = testing::planted_conflicts(seed, 1 + seed % 3);
    const auto fam = family_of(inst);
    const Amount opt = *solve_bruteforce(inst).optimum_utility;
    const auto g = min_group_deletion_set(fam, fam.size());
    const auto p = min_project_deletion_set(fam, fam.universe_size);
    const auto by_groups = solve_group_deletion(inst, *g);
    const auto by_projects = solve_project_deletion(inst, *p);
    EXPECT_EQ(by_groups.utility, opt) << seed;
    EXPECT_EQ(by_projects.utility, opt) << seed;
    EXPECT_TRUE(check_bundle(inst, by_groups.bundle.project_ids).feasible);
    EXPECT_TRUE(check_bundle(inst, by_projects.bundle.project_ids).feasible);
  }
}

TEST(CombinedSolvers, ThreadCountDoesNotChangeWitness) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = testing::planted_conflicts(seed, 2);
    const auto g = min_group_deletion_set(family_of(inst), 8);
    DeletionSolveOptions one;
    DeletionSolveOptions four;
    four.threads = 4;
    EXPECT_EQ(solve_group_deletion(inst, *g, one).bundle, solve_group_deletion(inst, *g, four).bundle);
  }
}

}  // namespace
}  // namespace grouppb
