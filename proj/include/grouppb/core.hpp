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
 * @file core.hpp
 * @brief Data model for approval-based participatory budgeting with budgeted
 * project groups.
 *
 * An instance consists of projects with integer costs, approval ballots, a
 * family of (possibly overlapping) project groups each carrying its own
 * budget limit, and a global budget. A bundle is feasible if its total cost
 * stays within the global budget and, for every group, the cost of the
 * bundle's members inside the group stays within the group's budget.
 * Groups may additionally demand a minimum approval utility.
 *
 * All public containers are kept sorted by id once an instance went through
 * validate_instance(); algorithms work on the index-based Problem view, in
 * which the index of a project is its position in the sorted project list.
 */

#ifndef GROUPPB_CORE_HPP
#define GROUPPB_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace grouppb {

/// Currency units, approval counts and utilities.
using Amount = std::int64_t;

/// Upper bound on any total (sum of costs, sum of scores, any budget).
/// Keeping totals below 2^62 makes every intermediate sum overflow-free.
inline constexpr Amount kMaxTotal = Amount{1} << 62;

inline constexpr Amount kInfinity = std::numeric_limits<Amount>::max();

enum class ErrorCode {
  DanglingReference,
  DuplicateId,
  NegativeQuantity,
  InvalidId,
  TooLarge,
  UnknownProject,
  ParseError,
  SchemaError,
  InvalidGraph,
  OddTotal,
  InvalidArgument,
  NotHierarchical,
  InvalidDeletion,
  SearchBudgetExceeded,
  TableTooLarge,
  Unsupported,
  Infeasible,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NegativeQuantity: return "NegativeQuantity";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownProject: return "UnknownProject";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::OddTotal: return "OddTotal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHierarchical: return "NotHierarchical";
    case ErrorCode::InvalidDeletion: return "InvalidDeletion";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
  bool operator==(const ValidationIssue&) const = default;
};

/// Thrown by validate_instance(); carries every issue found, not only the
/// first one. code() reports the first issue.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues)
      : Error(issues.front().code, join(issues)), issues_(std::move(issues)) {}

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<ValidationIssue>& issues) {
    std::string out;
    for (const auto& issue : issues) {
      if (!out.empty()) out += "; ";
      out += issue.message;
    }
    return out;
  }

  std::vector<ValidationIssue> issues_;
};

struct Project {
  std::string id;
  Amount cost = 0;
  bool operator==(const Project&) const = default;
};

struct Voter {
  std::string id;
  std::vector<std::string> approves;
  bool operator==(const Voter&) const = default;
};

struct Group {
  std::string id;
  std::vector<std::string> members;
  Amount budget = 0;
  Amount min_utility = 0;
  bool operator==(const Group&) const = default;
};

/// Unchecked instance record as it comes out of a parser or generator.
struct RawInstance {
  std::vector<Project> projects;
  std::vector<Voter> voters;
  std::vector<Group> groups;
  Amount global_budget = 0;
};

/// A validated instance. Projects, voters and groups are sorted by id and
/// every id list is sorted and duplicate-free.
struct Instance {
  std::vector<Project> projects;
  std::vector<Voter> voters;
  std::vector<Group> groups;
  Amount global_budget = 0;

  bool operator==(const Instance&) const = default;

  /// Position of a project in `projects`, or nullopt.
  std::optional<std::size_t> project_index(std::string_view id) const {
    auto it = std::lower_bound(
        projects.begin(), projects.end(), id,
        [](const Project& p, std::string_view key) { return p.id < key; });
    if (it == projects.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - projects.begin());
  }

  bool has_min_utility() const {
    return std::any_of(groups.begin(), groups.end(),
                       [](const Group& g) { return g.min_utility > 0; });
  }
};

/// Ids are restricted to [A-Za-z0-9_-]+.
inline bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

namespace detail {

inline bool checked_add(Amount a, Amount b, Amount& out) {
  return !__builtin_add_overflow(a, b, &out);
}

template <typename T, typename Key>
void check_unique_ids(const std::vector<T>& items, Key key, std::string_view what,
                      std::vector<ValidationIssue>& issues) {
  std::vector<std::string> ids;
  ids.reserve(items.size());
  for (const auto& item : items) {
    const std::string& id = key(item);
    if (!is_valid_id(id)) {
      issues.push_back({ErrorCode::InvalidId,
                        std::string(what) + " id '" + id + "' is not of the form [A-Za-z0-9_-]+"});
    }
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1] && (i < 2 || ids[i - 1] != ids[i - 2])) {
      issues.push_back({ErrorCode::DuplicateId,
                        "duplicate " + std::string(what) + " id '" + ids[i] + "'"});
    }
  }
}

inline void check_reference_list(std::vector<std::string>& list, const Instance& partial,
                                  const std::string& owner,
                                  std::vector<ValidationIssue>& issues) {
  std::sort(list.begin(), list.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0 && list[i] == list[i - 1]) {
      issues.push_back({ErrorCode::DuplicateId,
                        owner + " lists project '" + list[i] + "' more than once"});
      continue;
    }
    if (!partial.project_index(list[i])) {
      issues.push_back({ErrorCode::DanglingReference,
                        owner + " refers to unknown project '" + list[i] + "'"});
    }
  }
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace detail

/// Checks referential integrity, id uniqueness and non-negativity, and
/// brings the record into sorted canonical order. Groups with identical
/// member sets are accepted here; normalize() merges them.
///
/// Throws ValidationError listing every problem found.
inline Instance validate_instance(RawInstance raw) {
  std::vector<ValidationIssue> issues;

  detail::check_unique_ids(raw.projects, [](const Project& p) -> const std::string& { return p.id; },
                           "project", issues);
  detail::check_unique_ids(raw.voters, [](const Voter& v) -> const std::string& { return v.id; },
                           "voter", issues);
  detail::check_unique_ids(raw.groups, [](const Group& g) -> const std::string& { return g.id; },
                           "group", issues);

  Amount total_cost = 0;
  bool overflow = false;
  auto check_amount = [&](Amount value, const std::string& what) {
    if (value < 0) {
      issues.push_back({ErrorCode::NegativeQuantity, what + " is negative"});
    } else if (value > kMaxTotal) {
      issues.push_back({ErrorCode::TooLarge, what + " exceeds 2^62"});
    }
  };
  check_amount(raw.global_budget, "global budget");
  for (const auto& p : raw.projects) {
    check_amount(p.cost, "cost of project '" + p.id + "'");
    if (p.cost > 0 && !overflow) {
      overflow = !detail::checked_add(total_cost, p.cost, total_cost) || total_cost > kMaxTotal;
    }
  }
  if (overflow) issues.push_back({ErrorCode::TooLarge, "total project cost exceeds 2^62"});
  for (const auto& g : raw.groups) {
    check_amount(g.budget, "budget of group '" + g.id + "'");
    check_amount(g.min_utility, "min_utility of group '" + g.id + "'");
  }

  Instance inst;
  inst.global_budget = raw.global_budget;
  inst.projects = std::move(raw.projects);
  std::sort(inst.projects.begin(), inst.projects.end(),
            [](const Project& a, const Project& b) { return a.id < b.id; });

  inst.voters = std::move(raw.voters);
  for (auto& v : inst.voters) {
    detail::check_reference_list(v.approves, inst, "voter '" + v.id + "'", issues);
  }
  std::sort(inst.voters.begin(), inst.voters.end(),
            [](const Voter& a, const Voter& b) { return a.id < b.id; });

  inst.groups = std::move(raw.groups);
  for (auto& g : inst.groups) {
    detail::check_reference_list(g.members, inst, "group '" + g.id + "'", issues);
  }
  std::sort(inst.groups.begin(), inst.groups.end(),
            [](const Group& a, const Group& b) { return a.id < b.id; });

  // Total approval score must stay representable as well.
  if (inst.voters.size() > 0) {
    Amount total_score = 0;
    bool score_overflow = false;
    for (const auto& v : inst.voters) {
      score_overflow = score_overflow ||
                       !detail::checked_add(total_score, static_cast<Amount>(v.approves.size()),
                                            total_score) ||
                       total_score > kMaxTotal;
    }
    if (score_overflow) issues.push_back({ErrorCode::TooLarge, "total approval score exceeds 2^62"});
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return inst;
}

/// a(p) for every project, in project order.
inline std::vector<Amount> approval_score_vector(const Instance& inst) {
  std::vector<Amount> scores(inst.projects.size(), 0);
  for (const auto& v : inst.voters) {
    for (const auto& id : v.approves) {
      if (auto idx = inst.project_index(id)) ++scores[*idx];
    }
  }
  return scores;
}

/// a(p) keyed by project id.
inline std::map<std::string, Amount> approval_scores(const Instance& inst) {
  auto scores = approval_score_vector(inst);
  std::map<std::string, Amount> out;
  for (std::size_t i = 0; i < inst.projects.size(); ++i) out[inst.projects[i].id] = scores[i];
  return out;
}

struct DerivedStats {
  std::size_t m = 0;  // projects
  std::size_t n = 0;  // voters
  std::size_t g = 0;  // groups
  std::size_t s = 0;  // largest group
  std::size_t app = 0;  // largest approval set
  Amount b_max = 0;
  Amount total_score = 0;  // A
  std::map<std::string, Amount> scores;
};

inline DerivedStats derived_stats(const Instance& inst) {
  DerivedStats st;
  st.m = inst.projects.size();
  st.n = inst.voters.size();
  st.g = inst.groups.size();
  for (const auto& grp : inst.groups) {
    st.s = std::max(st.s, grp.members.size());
    st.b_max = std::max(st.b_max, grp.budget);
  }
  for (const auto& v : inst.voters) st.app = std::max(st.app, v.approves.size());
  st.scores = approval_scores(inst);
  for (const auto& [id, a] : st.scores) st.total_score += a;
  return st;
}

/// Result of normalize(): the normalized instance plus human-readable notes
/// describing each change.
struct Normalized {
  Instance instance;
  std::vector<std::string> notes;
};

/// Applies the standard w.l.o.g. assumptions: removes projects nobody
/// approves, merges groups with identical member sets (minimum budget,
/// maximum min_utility, smallest id survives) and clamps group budgets to
/// the global budget. Idempotent.
inline Normalized normalize(const Instance& input) {
  Normalized out;
  Instance& inst = out.instance;
  inst.global_budget = input.global_budget;
  inst.voters = input.voters;

  auto scores = approval_score_vector(input);
  std::vector<std::string> removed;
  for (std::size_t i = 0; i < input.projects.size(); ++i) {
    if (scores[i] > 0) {
      inst.projects.push_back(input.projects[i]);
    } else {
      removed.push_back(input.projects[i].id);
      out.notes.push_back("removed project '" + input.projects[i].id +
                          "' (approved by no voter)");
    }
  }

  std::map<std::vector<std::string>, std::size_t> by_members;
  for (const auto& grp : input.groups) {
    Group g = grp;
    if (!removed.empty()) {
      std::erase_if(g.members, [&](const std::string& id) {
        return std::binary_search(removed.begin(), removed.end(), id);
      });
    }
    auto [it, inserted] = by_members.try_emplace(g.members, inst.groups.size());
    if (inserted) {
      inst.groups.push_back(std::move(g));
      continue;
    }
    Group& kept = inst.groups[it->second];
    out.notes.push_back("merged group '" + g.id + "' into '" + kept.id +
                        "' (identical members)");
    kept.budget = std::min(kept.budget, g.budget);
    kept.min_utility = std::max(kept.min_utility, g.min_utility);
  }

  for (auto& g : inst.groups) {
    if (g.budget > inst.global_budget) {
      out.notes.push_back("clamped budget of group '" + g.id + "' from " +
                          std::to_string(g.budget) + " to " +
                          std::to_string(inst.global_budget));
      g.budget = inst.global_budget;
    }
  }
  return out;
}

/// Which constraint a violation refers to.
enum class ConstraintKind { GroupBudget, GlobalBudget, GroupMinUtility };

inline std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::GroupBudget: return "group-budget";
    case ConstraintKind::GlobalBudget: return "global-budget";
    case ConstraintKind::GroupMinUtility: return "group-min-utility";
  }
  return "unknown";
}

struct Violation {
  ConstraintKind kind;
  std::string scope;  // group id or "GLOBAL"
  Amount limit = 0;
  Amount actual = 0;
  bool operator==(const Violation&) const = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
  Amount total_cost = 0;
  Amount total_utility = 0;
};

/// A set of funded projects with its totals.
struct Bundle {
  std::vector<std::string> project_ids;  // sorted
  Amount total_cost = 0;
  Amount total_utility = 0;
  bool operator==(const Bundle&) const = default;
};

/// Index-based view of an instance used by all solvers. Project i is
/// inst.projects[i]; group j is inst.groups[j].
struct Problem {
  using Set = boost::dynamic_bitset<std::uint64_t>;

  std::vector<Amount> cost;
  std::vector<Amount> score;
  std::vector<Set> groups;
  std::vector<Amount> group_budget;
  std::vector<Amount> group_min_utility;
  Amount budget = 0;

  std::size_t m() const { return cost.size(); }
  std::size_t g() const { return groups.size(); }

  Set empty_set() const { return Set(m()); }
  Set full_set() const {
    Set s(m());
    s.set();
    return s;
  }

  Amount total_score() const {
    Amount total = 0;
    for (Amount a : score) total += a;
    return total;
  }
};

inline Problem compile(const Instance& inst) {
  Problem p;
  const std::size_t m = inst.projects.size();
  p.cost.reserve(m);
  for (const auto& pr : inst.projects) p.cost.push_back(pr.cost);
  p.score = approval_score_vector(inst);
  for (const auto& grp : inst.groups) {
    Problem::Set set(m);
    for (const auto& id : grp.members) set.set(*inst.project_index(id));
    p.groups.push_back(std::move(set));
    p.group_budget.push_back(grp.budget);
    p.group_min_utility.push_back(grp.min_utility);
  }
  p.budget = inst.global_budget;
  return p;
}

/// Sorted project indices -> Bundle with ids and totals.
inline Bundle make_bundle(const Instance& inst, const Problem& prob,
                          const std::vector<std::size_t>& indices) {
  Bundle b;
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i : sorted) {
    b.project_ids.push_back(inst.projects[i].id);
    b.total_cost += prob.cost[i];
    b.total_utility += prob.score[i];
  }
  return b;
}

/// Deterministic witness order: higher utility, then lower cost, then the
/// lexicographically smaller sorted index list.
inline bool better_witness(Amount util_a, Amount cost_a, const std::vector<std::size_t>& a,
                           Amount util_b, Amount cost_b, const std::vector<std::size_t>& b) {
  if (util_a != util_b) return util_a > util_b;
  if (cost_a != cost_b) return cost_a < cost_b;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Feasibility of a bundle given as sorted project indices.
inline FeasibilityReport check_indices(const Instance& inst, const Problem& prob,
                                       const std::vector<std::size_t>& indices) {
  FeasibilityReport rep;
  Problem::Set chosen(prob.m());
  for (std::size_t i : indices) {
    chosen.set(i);
    rep.total_cost += prob.cost[i];
    rep.total_utility += prob.score[i];
  }
  if (rep.total_cost > prob.budget) {
    rep.violations.push_back(
        {ConstraintKind::GlobalBudget, "GLOBAL", prob.budget, rep.total_cost});
  }
  for (std::size_t j = 0; j < prob.g(); ++j) {
    Amount cost = 0;
    Amount util = 0;
    auto inside = chosen & prob.groups[j];
    for (auto i = inside.find_first(); i != Problem::Set::npos; i = inside.find_next(i)) {
      cost += prob.cost[i];
      util += prob.score[i];
    }
    if (cost > prob.group_budget[j]) {
      rep.violations.push_back(
          {ConstraintKind::GroupBudget, inst.groups[j].id, prob.group_budget[j], cost});
    }
    if (util < prob.group_min_utility[j]) {
      rep.violations.push_back(
          {ConstraintKind::GroupMinUtility, inst.groups[j].id, prob.group_min_utility[j], util});
    }
  }
  rep.feasible = rep.violations.empty();
  return rep;
}

/// Checks the global budget, every group budget and every group utility
/// requirement. Throws Error(UnknownProject) for ids not in the instance.
inline FeasibilityReport check_bundle(const Instance& inst, const std::vector<std::string>& ids) {
  std::vector<std::size_t> indices;
  for (const auto& id : ids) {
    auto idx = inst.project_index(id);
    if (!idx) throw Error(ErrorCode::UnknownProject, "unknown project '" + id + "'");
    indices.push_back(*idx);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return check_indices(inst, compile(inst), indices);
}

/// Total utility counted voter-wise, i.e. sum over voters of |P_v ∩ X|.
inline Amount voter_utility(const Instance& inst, const std::vector<std::string>& ids) {
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  Amount total = 0;
  for (const auto& v : inst.voters) {
    for (const auto& id : v.approves) {
      if (std::binary_search(sorted.begin(), sorted.end(), id)) ++total;
    }
  }
  return total;
}

}  // namespace grouppb

#endif  // GROUPPB_CORE_HPP
