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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/corpus.hpp"

namespace grouppb {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GROUPPB_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("grouppb-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  static std::string example() { return std::string(GROUPPB_TEST_DATA) + "/example1.json"; }

  fs::path dir_;
};

TEST_F(Cli, SolveAuto) {
  const CliRun r = run("solve " + example());
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["utility"], 4);
  EXPECT_EQ(doc["algorithm"], "hier");
  EXPECT_EQ(doc["bundle"]["project_ids"], (std::vector<std::string>{"p2", "p3", "p4"}));
}

TEST_F(Cli, SolveFptas) {
  const CliRun r = run("solve " + example() + " --algo fptas-g --epsilon 1");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GE(doc["utility"].get<Amount>(), 2);
  EXPECT_EQ(doc["exact"], false);
  EXPECT_EQ(doc["guarantee"], "2");
}

TEST_F(Cli, DecisionTargetNotReached) {
  EXPECT_EQ(run("solve " + example() + " --decision-u 5").status, 4);
  EXPECT_EQ(run("solve " + example() + " --decision-u 4").status, 0);
}

TEST_F(Cli, MissingEpsilon) {
  const CliRun r = run("solve " + example() + " --algo fptas-g");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("error"));
}

TEST_F(Cli, CheckBundles) {
  const CliRun ok = run("check " + example() + " " + write("ok.json", R"(["p3","p4"])"));
  ASSERT_EQ(ok.status, 0);
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["feasible"], true);
  EXPECT_EQ(doc["total_utility"], 3);
  EXPECT_EQ(run("check " + example() + " " + write("bad.json", R"({"project_ids":["p1","p3"]})")).status, 1);
  EXPECT_EQ(run("check " + example() + " " + write("unknown.json", R"(["zz"])")).status, 2);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run("solve " + write("broken.json", "{")).status, 2);
  EXPECT_EQ(run("solve " + (dir_ / "missing.json").string()).status, 2);
  EXPECT_EQ(run("solve " + example() + " --algo nope").status, 2);
}

TEST_F(Cli, CapExceeded) {
  EXPECT_EQ(run("solve " + example() + " --algo dimdp --cell-cap 5").status, 3);
}

TEST_F(Cli, Infeasible) {
  Instance inst = testing::example1();
  inst.groups[0].min_utility = 3;
  EXPECT_EQ(run("solve " + write("inf.json", serialize_instance(inst))).status, 1);
}

TEST_F(Cli, Analyze) {
  const CliRun r = run("analyze " + example());
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["hierarchical"], true);
  EXPECT_EQ(doc["layerwidth"], 1);
}

TEST_F(Cli, GenIsDeterministicAndParses) {
  const CliRun a = run("gen --shape laminar --m 9 --g 3 --seed 5");
  const CliRun b = run("gen --shape laminar --m 9 --g 3 --seed 5");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(is_hierarchical(family_of(parse_instance(a.out))));
  const CliRun part = run("gen --partition 1,2,3,4");
  ASSERT_EQ(part.status, 0);
  EXPECT_EQ(*solve_bruteforce(parse_instance(part.out)).optimum_utility, 4);
  EXPECT_EQ(run("gen --partition 1,1,3").status, 2);
  const CliRun graph = run("gen --graph a-b,b-c --k 2");
  ASSERT_EQ(graph.status, 0);
  EXPECT_EQ(*solve_bruteforce(parse_instance(graph.out)).optimum_utility, 2);
}

TEST_F(Cli, ExportMilpMatchesGolden) {
  const std::string path = (dir_ / "model.lp").string();
  ASSERT_EQ(run("export-milp " + example() + " -o " + path).status, 0);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), testing::read_data("example1.lp"));
}

TEST_F(Cli, BenchCsv) {
  const CliRun r = run("bench --m 6 --g 2 --seeds 2 --algos hier,dimdp");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("algorithm,m,g,seed,utility,nodes,cells,time_ms,status\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

}  // namespace
}  // namespace grouppb
