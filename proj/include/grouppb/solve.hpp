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
 * @file solve.hpp
 * @brief Algorithm selection, dispatch and JSON reports.
 *
 * The automatic policy, in order:
 *   - group utility requirements: brute force (the only solver for them)
 *   - hierarchical family: tree DP
 *   - small deletion set: group-del or proj-del, whichever enumerates fewer
 *     funded subsets
 *   - budget table within the cell cap: dimdp
 *   - type enumeration within the node cap: types
 *   - otherwise LP rounding, flagged as approximate
 */

#ifndef GROUPPB_SOLVE_HPP
#define GROUPPB_SOLVE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grouppb/approx.hpp"
#include "grouppb/core.hpp"
#include "grouppb/deletion.hpp"
#include "grouppb/dimdp.hpp"
#include "grouppb/hier.hpp"
#include "grouppb/layers.hpp"
#include "grouppb/oracle.hpp"
#include "grouppb/outcome.hpp"
#include "grouppb/rational.hpp"
#include "grouppb/types.hpp"

namespace grouppb {

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"auto",  "bruteforce", "hier",     "group-del",
                                                 "proj-del", "types",   "dimdp",    "lp-round",
                                                 "fptas-g",  "milp-export"};
  return names;
}

struct SolveRequest {
  std::string algorithm = "auto";
  std::optional<Rational> epsilon;
  std::optional<Amount> decision_u;
  std::uint64_t node_cap = 10'000'000;
  std::uint64_t cell_cap = 100'000'000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  /// Largest deletion set searched for by the automatic policy.
  std::size_t deletion_cap = 8;
};

/// Throws Error(InvalidArgument) on an inconsistent request.
inline void validate_request(const SolveRequest& req) {
  const auto& names = algorithm_names();
  if (std::find(names.begin(), names.end(), req.algorithm) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + req.algorithm + "'");
  }
  if (req.algorithm == "fptas-g" && !req.epsilon) {
    throw Error(ErrorCode::InvalidArgument, "fptas-g needs --epsilon");
  }
  if (req.algorithm != "fptas-g" && req.epsilon) {
    throw Error(ErrorCode::InvalidArgument, "--epsilon only applies to fptas-g");
  }
  if (req.epsilon && *req.epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (req.decision_u && *req.decision_u < 0) throw Error(ErrorCode::InvalidArgument, "decision target must be non-negative");
  if (req.threads == 0) throw Error(ErrorCode::InvalidArgument, "threads must be positive");
}

struct Recommendation {
  std::string algorithm;
  std::string reason;
  std::optional<DeletionAnalysis> deletion;
};

namespace detail {

inline std::size_t fixed_projects(const Instance& inst, const DeletionAnalysis& d) {
  if (d.kind == DeletionKind::Project) return d.size;
  const Problem prob = compile(inst);
  Problem::Set q(prob.m());
  for (std::size_t j = 0; j < inst.groups.size(); ++j) {
    if (std::binary_search(d.deleted_ids.begin(), d.deleted_ids.end(), inst.groups[j].id)) q |= prob.groups[j];
  }
  return q.count();
}

inline std::size_t enumeration_bits(std::uint64_t node_cap) {
  std::size_t bits = 0;
  while (bits < 62 && (std::uint64_t{1} << (bits + 1)) <= node_cap) ++bits;
  return bits;
}

}  // namespace detail

/// The algorithm the automatic policy would run.
inline Recommendation recommend_algorithm(const Instance& inst, const SolveRequest& req) {
  Recommendation rec;
  if (inst.has_min_utility()) {
    rec.algorithm = "bruteforce";
    rec.reason = "group utility requirements are only handled by the brute-force solver";
    return rec;
  }
  const SetFamily fam = family_of(inst);
  if (is_hierarchical(fam)) {
    rec.algorithm = "hier";
    rec.reason = "group family is hierarchical";
    return rec;
  }
  const std::size_t max_bits = std::min<std::size_t>(detail::enumeration_bits(req.node_cap), 30);
  auto dg = min_group_deletion_set(fam, req.deletion_cap, req.node_cap);
  auto dp = min_project_deletion_set(fam, std::min(req.deletion_cap, max_bits), req.node_cap);
  std::optional<std::pair<std::size_t, DeletionAnalysis>> pick;
  if (dg && !dg->search_budget_hit) {
    const std::size_t q = detail::fixed_projects(inst, *dg);
    if (q <= max_bits) pick = {q, *dg};
  }
  if (dp && !dp->search_budget_hit && dp->size <= max_bits && (!pick || dp->size < pick->first)) {
    pick = {dp->size, *dp};
  }
  if (pick) {
    rec.algorithm = pick->second.kind == DeletionKind::Group ? "group-del" : "proj-del";
    rec.reason = "deletion set leaves " + std::to_string(pick->first) + " projects to enumerate";
    rec.deletion = pick->second;
    return rec;
  }
  if (auto cells = dimdp_cells(inst); cells && *cells <= req.cell_cap) {
    rec.algorithm = "dimdp";
    rec.reason = "budget table has " + std::to_string(*cells) + " cells";
    return rec;
  }
  const DerivedStats st = derived_stats(inst);
  const std::size_t t = type_index(inst).t();
  const std::uint64_t per_call = estimate_type_compositions(t, st.total_score);
  const auto calls = static_cast<std::uint64_t>(std::log2(static_cast<double>(st.total_score) + 1.0)) + 2;
  if (per_call <= req.node_cap / calls) {
    rec.algorithm = "types";
    rec.reason = "type enumeration fits the node cap";
    return rec;
  }
  rec.algorithm = "lp-round";
  rec.reason = "no exact solver fits the caps";
  return rec;
}

struct SolveReport {
  SolveOutcome outcome;
  std::vector<std::string> warnings;
  /// Set when a decision target was given.
  std::optional<bool> target_reached;
};

namespace detail {

inline SolveOutcome run_algorithm(const Instance& inst, const std::string& algo, const SolveRequest& req,
                                  const std::optional<DeletionAnalysis>& deletion) {
  if (algo == "bruteforce") {
    OracleOptions o;
    o.threads = req.threads;
    return solve_bruteforce_outcome(inst, o);
  }
  if (algo == "hier") {
    HierOptions o;
    o.cell_cap = req.cell_cap;
    o.target = req.decision_u;
    return solve_hier(inst, o);
  }
  if (algo == "group-del" || algo == "proj-del") {
    const bool groups = algo == "group-del";
    std::optional<DeletionAnalysis> d = deletion;
    if (!d) {
      const SetFamily fam = family_of(inst);
      d = groups ? min_group_deletion_set(fam, req.deletion_cap, req.node_cap)
                 : min_project_deletion_set(fam, req.deletion_cap, req.node_cap);
      if (!d) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "no deletion set of size at most " + std::to_string(req.deletion_cap));
      }
    }
    DeletionSolveOptions o;
    o.threads = req.threads;
    o.cell_cap = req.cell_cap;
    o.max_fixed = std::min<std::size_t>(enumeration_bits(req.node_cap), 30);
    return groups ? solve_group_deletion(inst, *d, o) : solve_project_deletion(inst, *d, o);
  }
  if (algo == "types") {
    TypesOptions o;
    o.node_cap = req.node_cap;
    return solve_types_max(inst, o);
  }
  if (algo == "dimdp") {
    DimdpOptions o;
    o.cell_cap = req.cell_cap;
    return solve_dimdp(inst, o);
  }
  if (algo == "lp-round") return solve_lp_round(inst);
  if (algo == "fptas-g") {
    FptasOptions o;
    o.node_cap = req.node_cap;
    return solve_fptas_g(inst, *req.epsilon, o);
  }
  throw Error(ErrorCode::InvalidArgument, "algorithm '" + algo + "' does not produce a bundle");
}

}  // namespace detail

/// Runs the requested algorithm. With algorithm "auto", cap errors of the
/// chosen exact solver fall back to LP rounding with a warning.
inline SolveReport run_solve(const Instance& inst, const SolveRequest& req) {
  validate_request(req);
  SolveReport report;
  if (req.algorithm == "auto") {
    const Recommendation rec = recommend_algorithm(inst, req);
    try {
      report.outcome = detail::run_algorithm(inst, rec.algorithm, req, rec.deletion);
    } catch (const Error& e) {
      const bool cap = e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::TableTooLarge;
      if (!cap || rec.algorithm == "lp-round" || inst.has_min_utility()) throw;
      report.warnings.push_back(rec.algorithm + " exceeded its cap: " + e.what());
      report.outcome = solve_lp_round(inst);
    }
  } else {
    report.outcome = detail::run_algorithm(inst, req.algorithm, req, std::nullopt);
  }
  if (!report.outcome.exact && report.outcome.guarantee) {
    report.warnings.push_back("result is approximate (guarantee " + format_rational(*report.outcome.guarantee) + ")");
  }
  if (req.decision_u) report.target_reached = report.outcome.utility >= *req.decision_u;
  return report;
}

inline nlohmann::json bundle_to_json(const Bundle& b) {
  return {{"project_ids", b.project_ids}, {"total_cost", b.total_cost}, {"total_utility", b.total_utility}};
}

/// Report as JSON. `with_timing` = false drops wall-clock fields, leaving a
/// document that is identical across runs.
inline nlohmann::json report_to_json(const SolveReport& report, const SolveRequest& req, bool with_timing = true) {
  const SolveOutcome& o = report.outcome;
  nlohmann::json doc;
  doc["algorithm"] = o.algorithm;
  doc["utility"] = o.utility;
  doc["bundle"] = bundle_to_json(o.bundle);
  doc["exact"] = o.exact;
  doc["guarantee"] = o.guarantee ? nlohmann::json(format_rational(*o.guarantee)) : nlohmann::json(nullptr);
  doc["epsilon"] = o.epsilon ? nlohmann::json(format_rational(*o.epsilon)) : nlohmann::json(nullptr);
  nlohmann::json stats = {{"nodes", o.stats.nodes}, {"cells", o.stats.cells}};
  if (with_timing) stats["wall_time_ms"] = o.stats.wall_time_ms;
  doc["stats"] = std::move(stats);
  if (!o.profile.empty()) {
    nlohmann::json profile = nlohmann::json::array();
    for (Amount c : o.profile) profile.push_back(c == kInfinity ? nlohmann::json(nullptr) : nlohmann::json(c));
    doc["profile"] = std::move(profile);
  }
  if (req.decision_u) {
    doc["decision"] = {{"target", *req.decision_u}, {"reached", report.target_reached.value_or(false)}};
  }
  doc["warnings"] = report.warnings;
  return doc;
}

inline nlohmann::json feasibility_to_json(const FeasibilityReport& rep) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"kind", std::string(to_string(v.kind))},
                          {"scope", v.scope},
                          {"limit", v.limit},
                          {"actual", v.actual}});
  }
  return {{"feasible", rep.feasible},
          {"violations", std::move(violations)},
          {"total_cost", rep.total_cost},
          {"total_utility", rep.total_utility}};
}

/// Structural analysis: parameters, layer structure, deletion distances and
/// the automatic choice.
inline nlohmann::json analyze_instance(const Instance& inst, const SolveRequest& req) {
  const DerivedStats st = derived_stats(inst);
  const SetFamily fam = family_of(inst);
  nlohmann::json doc;
  doc["m"] = st.m;
  doc["n"] = st.n;
  doc["g"] = st.g;
  doc["s"] = st.s;
  doc["app"] = st.app;
  doc["b_max"] = st.b_max;
  doc["A"] = st.total_score;
  doc["hierarchical"] = is_hierarchical(fam);
  if (auto two = two_layer_decomposition(fam)) {
    doc["two_layer"] = layer_ids(fam, *two);
  } else {
    doc["two_layer"] = nullptr;
  }
  doc["greedy_width"] = greedy_layers(fam).width();
  if (fam.size() <= kExactLayerwidthLimit) {
    auto lw = exact_layerwidth(fam, fam.size());
    doc["layerwidth"] = lw ? nlohmann::json(*lw) : nlohmann::json(nullptr);
  } else {
    doc["layerwidth"] = nullptr;
  }
  auto deletion_json = [](const std::optional<DeletionAnalysis>& d) {
    if (!d) return nlohmann::json(nullptr);
    return nlohmann::json{{"size", d->size}, {"deleted", d->deleted_ids}, {"search_budget_hit", d->search_budget_hit}};
  };
  doc["D_g"] = deletion_json(min_group_deletion_set(fam, req.deletion_cap, req.node_cap));
  doc["D_p"] = deletion_json(min_project_deletion_set(fam, req.deletion_cap, req.node_cap));
  doc["types"] = type_index(inst).t();
  if (auto cells = dimdp_cells(inst)) {
    doc["dimdp_cells"] = *cells;
  } else {
    doc["dimdp_cells"] = nullptr;
  }
  const Recommendation rec = recommend_algorithm(inst, req);
  doc["recommended"] = {{"algorithm", rec.algorithm}, {"reason", rec.reason}};
  return doc;
}

}  // namespace grouppb

#endif  // GROUPPB_SOLVE_HPP
