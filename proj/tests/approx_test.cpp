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

Rational q(long long num, long long den = 1) { return Rational(num) / Rational(den); }

TEST(LpRelaxation, ExampleOneShape) {
  const LpModel model = lp_relaxation(testing::example1());
  EXPECT_EQ(model.variables.size(), 4u);
  EXPECT_EQ(model.rows.size(), 3u);
  EXPECT_EQ(model.rows.back().name, "GLOBAL");
}

TEST(LpRelaxation, ExpensiveProjectExcluded) {
  RawInstance raw;
  raw.projects = {{"a", 6}, {"b", 1}};
  raw.voters = {{"v", {"a", "b"}}};
  raw.global_budget = 5;
  const LpModel model = lp_relaxation(validate_instance(raw));
  EXPECT_EQ(model.variables, std::vector<std::string>{"b"});
  EXPECT_EQ(model.removed, std::vector<std::string>{"a"});
  EXPECT_EQ(model.rows.size(), 1u);
}

TEST(Simplex, ExampleOneDominatesInteger) {
  const BasicSolution sol = simplex_solve(lp_relaxation(testing::example1()));
  EXPECT_GE(sol.objective_value, 4);
  EXPECT_LE(sol.fractional_count(), 3u);
}

TEST(Simplex, ZeroBudgets) {
  Instance inst = testing::example1();
  inst.global_budget = 0;
  for (auto& g : inst.groups) g.budget = 0;
  const BasicSolution sol = simplex_solve(lp_relaxation(inst));
  EXPECT_EQ(sol.objective_value, 0);
  for (const auto& v : sol.values) EXPECT_EQ(v, 0);
}

TEST(Simplex, SingleProject) {
  RawInstance raw;
  raw.projects = {{"a", 2}};
  raw.voters = {{"v", {"a"}}, {"w", {"a"}}};
  raw.global_budget = 3;
  const BasicSolution sol = simplex_solve(lp_relaxation(validate_instance(raw)));
  EXPECT_EQ(sol.values[0], 1);
  EXPECT_EQ(sol.objective_value, 2);
}

TEST(Simplex, FeasibleAndFewFractionalOnCorpus) {
  for (const auto& inst : testing::small_corpus(200)) {
    const LpModel model = lp_relaxation(inst);
    const BasicSolution sol = simplex_solve(model);
    EXPECT_LE(sol.fractional_count(), inst.groups.size() + 1);
    Rational objective = 0;
    for (std::size_t k = 0; k < sol.values.size(); ++k) {
      EXPECT_GE(sol.values[k], 0);
      EXPECT_LE(sol.values[k], 1);
      objective += model.objective[k] * sol.values[k];
    }
    EXPECT_EQ(objective, sol.objective_value);
    for (const auto& row : model.rows) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < sol.values.size(); ++k) lhs += row.coeffs[k] * sol.values[k];
      EXPECT_LE(lhs, row.rhs) << row.name;
    }
    EXPECT_GE(sol.objective_value, *solve_bruteforce(inst).optimum_utility);
  }
}

TEST(LpRound, ExampleOne) {
  const auto out = solve_lp_round(testing::example1());
  EXPECT_GE(out.utility, 1);
  EXPECT_FALSE(out.exact);
  EXPECT_EQ(out.guarantee, q(4));
  EXPECT_TRUE(check_bundle(testing::example1(), out.bundle.project_ids).feasible);
}

TEST(LpRound, IntegralLpIsExact) {
  RawInstance raw;
  raw.projects = {{"a", 1}, {"b", 1}, {"c", 1}};
  raw.voters = {{"v", {"a", "b", "c"}}};
  raw.global_budget = 2;
  const auto out = solve_lp_round(validate_instance(raw));
  EXPECT_EQ(out.utility, 2);
}

TEST(LpRound, NothingAffordable) {
  RawInstance raw;
  raw.projects = {{"a", 4}};
  raw.voters = {{"v", {"a"}}};
  raw.global_budget = 3;
  const auto out = solve_lp_round(validate_instance(raw));
  EXPECT_EQ(out.utility, 0);
  EXPECT_TRUE(out.bundle.project_ids.empty());
}

TEST(LpRound, RatioOnCorpus) {
  for (const auto& inst : testing::small_corpus(200)) {
    const auto out = solve_lp_round(inst);
    const Amount opt = *solve_bruteforce(inst).optimum_utility;
    EXPECT_GE(out.utility * static_cast<Amount>(inst.groups.size() + 2), opt);
    EXPECT_TRUE(check_bundle(inst, out.bundle.project_ids).feasible);
  }
}

TEST(ScoreBucket, PowersOfBase) {
  EXPECT_EQ(score_bucket(1, q(1)), 0u);
  EXPECT_EQ(score_bucket(2, q(1)), 1u);
  EXPECT_EQ(score_bucket(3, q(1)), 1u);
  EXPECT_EQ(score_bucket(4, q(1)), 2u);
  EXPECT_EQ(score_bucket(5, q(1, 100)), 161u);  // 1.01^161 ≈ 4.97, 1.01^162 ≈ 5.02
}

TEST(Fptas, ExampleOneCoarse) {
  const auto out = solve_fptas_g(testing::example1(), q(1));
  EXPECT_GE(out.utility, 2);
  EXPECT_FALSE(out.exact);
  EXPECT_EQ(out.guarantee, q(2));
  EXPECT_EQ(out.epsilon, q(1));
}

TEST(Fptas, ExampleOneFine) {
  EXPECT_EQ(solve_fptas_g(testing::example1(), q(1, 100)).utility, 4);
}

TEST(Fptas, OneProjectPerTypeIsExact) {
  RawInstance raw;
  raw.projects = {{"a", 3}, {"b", 2}, {"c", 2}};
  raw.voters = {{"v", {"a", "b", "c"}}, {"w", {"a"}}, {"x", {"a", "c"}}};
  raw.groups = {{"A", {"a", "b"}, 3, 0}, {"B", {"b", "c"}, 4, 0}};
  raw.global_budget = 5;
  const Instance inst = validate_instance(raw);
  ASSERT_EQ(type_index(inst).t(), 3u);
  const Amount opt = *solve_bruteforce(inst).optimum_utility;
  for (const auto& eps : {q(1), q(1, 2), q(1, 10), q(3)}) EXPECT_EQ(solve_fptas_g(inst, eps).utility, opt);
}

TEST(Fptas, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(solve_fptas_g(testing::example1(), q(0)), Error);
  EXPECT_THROW(solve_fptas_g(testing::example1(), q(-1)), Error);
}

TEST(Fptas, RatioOnCorpus) {
  for (const auto& inst : testing::small_corpus(150)) {
    const Amount opt = *solve_bruteforce(inst).optimum_utility;
    for (const auto& eps : {q(1), q(1, 2), q(1, 10)}) {
      const auto out = solve_fptas_g(inst, eps);
      EXPECT_GE(Rational(out.utility) * (1 + eps), Rational(opt));
      EXPECT_TRUE(check_bundle(inst, out.bundle.project_ids).feasible);
    }
  }
}

}  // namespace
}  // namespace grouppb
