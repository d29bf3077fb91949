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

// grouppb: command-line front end.
//
//   grouppb solve INSTANCE [--algo A] [--epsilon E] [--decision-u U] ...
//   grouppb check INSTANCE BUNDLE
//   grouppb analyze INSTANCE
//   grouppb gen [--shape S --m M --n N --g G --seed X | --partition 1,2,3 |
//                --graph a-b,b-c --k K --variant single-voter]
//   grouppb export-milp INSTANCE [-o FILE]
//   grouppb bench [--algo A,B] [--seeds N] [--m M] [--g G] [--shape S]
//
// Exit codes: 0 success, 1 infeasible bundle, 2 parse or validation error,
// 3 a cap was exceeded, 4 decision target not reached.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grouppb/grouppb.hpp"

namespace {

using grouppb::Error;
using grouppb::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitUnreached = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::TableTooLarge:
    case ErrorCode::TooLarge:
      return kExitCap;
    case ErrorCode::Infeasible:
      return kExitInfeasible;
    default:
      return kExitInput;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

grouppb::Instance load_instance(const std::string& path) { return grouppb::parse_instance(read_file(path)); }

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int report_error(const Error& e) {
  json doc = {{"error", {{"code", std::string(grouppb::to_string(e.code()))}, {"message", e.what()}}}};
  emit(doc);
  std::cerr << "grouppb: " << e.what() << '\n';
  return exit_code_for(e.code());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

grouppb::FamilyShape parse_shape(const std::string& s) {
  if (s == "random") return grouppb::FamilyShape::RandomSubsets;
  if (s == "laminar") return grouppb::FamilyShape::Laminar;
  if (s == "partition") return grouppb::FamilyShape::Partition;
  throw Error(ErrorCode::InvalidArgument, "unknown shape '" + s + "' (random, laminar, partition)");
}

struct Common {
  std::string algo = "auto";
  std::string epsilon;
  std::optional<grouppb::Amount> decision_u;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::uint64_t node_cap = 10'000'000;
  std::uint64_t cell_cap = 100'000'000;
  std::string format = "json";

  grouppb::SolveRequest request() const {
    grouppb::SolveRequest req;
    req.algorithm = algo;
    if (!epsilon.empty()) req.epsilon = grouppb::parse_rational(epsilon);
    req.decision_u = decision_u;
    req.seed = seed;
    req.threads = threads;
    req.node_cap = node_cap;
    req.cell_cap = cell_cap;
    return req;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_algo) {
  if (with_algo) {
    cmd->add_option("--algo", c.algo, "auto, bruteforce, hier, group-del, proj-del, types, dimdp, lp-round, fptas-g, milp-export");
    cmd->add_option("--epsilon", c.epsilon, "Approximation parameter for fptas-g (e.g. 1/2 or 0.1)");
    cmd->add_option("--decision-u", c.decision_u, "Target utility; exit 4 if it is not reached");
  }
  cmd->add_option("--seed", c.seed, "Seed for generators");
  cmd->add_option("--threads", c.threads, "Worker threads (default: $GROUPPB_THREADS or 1)");
  cmd->add_option("--node-cap", c.node_cap, "Search node cap")->capture_default_str();
  cmd->add_option("--cell-cap", c.cell_cap, "DP table cell cap")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json"}));
}

int cmd_solve(const std::string& path, const Common& c) {
  const grouppb::Instance inst = load_instance(path);
  const grouppb::SolveRequest req = c.request();
  if (req.algorithm == "milp-export") {
    grouppb::validate_request(req);
    const grouppb::MilpModel model = grouppb::build_milp(inst);
    emit({{"algorithm", "milp-export"},
          {"integer_vars", model.integer_vars()},
          {"real_vars", model.real_vars()},
          {"rows", model.row_count()},
          {"lp", grouppb::export_lp_format(model)}});
    return kExitOk;
  }
  const grouppb::SolveReport report = grouppb::run_solve(inst, req);
  for (const auto& w : report.warnings) std::cerr << "grouppb: warning: " << w << '\n';
  emit(grouppb::report_to_json(report, req));
  if (report.target_reached && !*report.target_reached) return kExitUnreached;
  return kExitOk;
}

int cmd_check(const std::string& instance_path, const std::string& bundle_path) {
  const grouppb::Instance inst = load_instance(instance_path);
  const std::string text = read_file(bundle_path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("bundle: ") + e.what());
  }
  if (doc.is_object() && doc.contains("project_ids")) doc = doc["project_ids"];
  if (!doc.is_array()) throw Error(ErrorCode::SchemaError, "bundle must be an array of project ids");
  std::vector<std::string> ids;
  for (const auto& item : doc) {
    if (!item.is_string()) throw Error(ErrorCode::SchemaError, "bundle must be an array of project ids");
    ids.push_back(item.get<std::string>());
  }
  const grouppb::FeasibilityReport rep = grouppb::check_bundle(inst, ids);
  emit(grouppb::feasibility_to_json(rep));
  return rep.feasible ? kExitOk : kExitInfeasible;
}

int cmd_analyze(const std::string& path, const Common& c) {
  const grouppb::Instance inst = load_instance(path);
  emit(grouppb::analyze_instance(inst, c.request()));
  return kExitOk;
}

struct GenArgs {
  std::string shape = "random";
  std::size_t m = 8;
  std::size_t n = 4;
  std::size_t g = 3;
  grouppb::Amount cost_lo = 1;
  grouppb::Amount cost_hi = 5;
  std::size_t app_lo = 1;
  std::size_t app_hi = 3;
  std::string budget_fraction = "1/2";
  std::string partition;
  std::string graph;
  grouppb::Amount k = 1;
  std::string variant = "single-voter";
};

grouppb::GenParams gen_params(const GenArgs& a, std::uint64_t seed) {
  grouppb::GenParams p;
  p.m = a.m;
  p.n = a.n;
  p.g = a.g;
  p.cost_range = {a.cost_lo, a.cost_hi};
  p.app_range = {a.app_lo, a.app_hi};
  p.family_shape = parse_shape(a.shape);
  const grouppb::Rational frac = grouppb::parse_rational(a.budget_fraction);
  p.budget_num = static_cast<grouppb::Amount>(boost::multiprecision::numerator(frac));
  p.budget_den = static_cast<grouppb::Amount>(boost::multiprecision::denominator(frac));
  p.seed = seed;
  return p;
}

int cmd_gen(const GenArgs& a, const Common& c) {
  grouppb::Instance inst;
  if (!a.partition.empty()) {
    std::vector<grouppb::Amount> numbers;
    for (const auto& s : split(a.partition, ',')) numbers.push_back(std::stoll(s));
    inst = grouppb::gen_from_partition(numbers);
  } else if (!a.graph.empty()) {
    grouppb::SimpleGraph graph;
    std::set<std::string> seen;
    for (const auto& e : split(a.graph, ',')) {
      const auto ends = split(e, '-');
      if (ends.size() != 2) throw Error(ErrorCode::InvalidGraph, "edge '" + e + "' is not of the form a-b");
      for (const auto& v : ends) {
        if (seen.insert(v).second) graph.vertices.push_back(v);
      }
      graph.edges.emplace_back(ends[0], ends[1]);
    }
    const auto variant = a.variant == "per-edge-voters" ? grouppb::IsVariant::PerEdgeVoters : grouppb::IsVariant::SingleVoter;
    inst = grouppb::gen_from_graph_is(graph, a.k, variant);
  } else {
    inst = grouppb::gen_random(gen_params(a, c.seed.value_or(0)));
  }
  std::cout << grouppb::serialize_instance(inst) << '\n';
  return kExitOk;
}

int cmd_export_milp(const std::string& path, const std::string& output) {
  const grouppb::Instance inst = load_instance(path);
  const std::string text = grouppb::export_lp_format(grouppb::build_milp(inst));
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << text;
  }
  return kExitOk;
}

int cmd_bench(const GenArgs& a, const Common& c, const std::string& algos, std::size_t seeds) {
  std::cout << "algorithm,m,g,seed,utility,nodes,cells,time_ms,status\n";
  const std::uint64_t base = c.seed.value_or(1);
  for (std::size_t i = 0; i < seeds; ++i) {
    const grouppb::Instance inst = grouppb::gen_random(gen_params(a, base + i));
    for (const auto& algo : split(algos, ',')) {
      Common run = c;
      run.algo = algo;
      if (algo == "fptas-g" && run.epsilon.empty()) run.epsilon = "1/2";
      if (algo != "fptas-g") run.epsilon.clear();
      std::cout << algo << ',' << inst.projects.size() << ',' << inst.groups.size() << ',' << base + i << ',';
      try {
        const auto report = grouppb::run_solve(inst, run.request());
        const auto& o = report.outcome;
        std::cout << o.utility << ',' << o.stats.nodes << ',' << o.stats.cells << ',' << o.stats.wall_time_ms << ",ok\n";
      } catch (const Error& e) {
        std::cout << ",,,," << grouppb::to_string(e.code()) << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Participatory budgeting with group budgets"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("GROUPPB_THREADS")) {
    try {
      common.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "grouppb: ignoring invalid GROUPPB_THREADS='" << env << "'\n";
    }
  }

  std::string instance;
  std::string bundle;
  std::string output;
  std::string bench_algos = "hier,dimdp,types,lp-round";
  std::size_t bench_seeds = 10;
  GenArgs gen;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", instance, "Instance JSON file")->required();
  add_common(solve, common, true);

  auto* check = app.add_subcommand("check", "Check a bundle against an instance");
  check->add_option("instance", instance, "Instance JSON file")->required();
  check->add_option("bundle", bundle, "JSON array of project ids")->required();

  auto* analyze = app.add_subcommand("analyze", "Report parameters and structure");
  analyze->add_option("instance", instance, "Instance JSON file")->required();
  add_common(analyze, common, false);

  auto add_gen = [&](CLI::App* cmd) {
    cmd->add_option("--shape", gen.shape, "random, laminar or partition");
    cmd->add_option("--m", gen.m, "Projects");
    cmd->add_option("--n", gen.n, "Voters");
    cmd->add_option("--g", gen.g, "Groups");
    cmd->add_option("--cost-lo", gen.cost_lo, "Smallest cost");
    cmd->add_option("--cost-hi", gen.cost_hi, "Largest cost");
    cmd->add_option("--app-lo", gen.app_lo, "Smallest approval set");
    cmd->add_option("--app-hi", gen.app_hi, "Largest approval set");
    cmd->add_option("--budget-fraction", gen.budget_fraction, "Budget fraction in (0, 1]");
  };
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  add_gen(gen_cmd);
  gen_cmd->add_option("--partition", gen.partition, "Partition reduction from comma-separated numbers");
  gen_cmd->add_option("--graph", gen.graph, "Independent-set reduction from edges a-b,b-c");
  gen_cmd->add_option("--k", gen.k, "Global budget for --graph");
  gen_cmd->add_option("--variant", gen.variant, "single-voter or per-edge-voters")
      ->check(CLI::IsMember({"single-voter", "per-edge-voters"}));
  add_common(gen_cmd, common, false);

  auto* milp = app.add_subcommand("export-milp", "Write the MILP model in LP format");
  milp->add_option("instance", instance, "Instance JSON file")->required();
  milp->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Run solvers on generated instances, CSV output");
  add_gen(bench);
  bench->add_option("--algos", bench_algos, "Comma-separated algorithms");
  bench->add_option("--seeds", bench_seeds, "Number of seeds");
  add_common(bench, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(instance, common);
    if (*check) return cmd_check(instance, bundle);
    if (*analyze) return cmd_analyze(instance, common);
    if (*gen_cmd) return cmd_gen(gen, common);
    if (*milp) return cmd_export_milp(instance, output);
    if (*bench) return cmd_bench(gen, common, bench_algos, bench_seeds);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_error(Error(ErrorCode::InvalidArgument, e.what()));
  }
  return kExitInput;
}
