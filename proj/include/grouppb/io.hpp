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
 * @file io.hpp
 * @brief JSON instance format.
 *
 * {
 *   "budget": 5,
 *   "projects": [{"id": "p1", "cost": 2}, ...],
 *   "voters": [{"id": "v", "approves": ["p1", "p3"]}, ...],   // or
 *   "scores": {"p1": 1, ...},
 *   "groups": [{"id": "F1", "members": ["p1", "p3"], "budget": 3,
 *               "min_utility": 0}, ...]
 * }
 *
 * Exactly one of "voters" and "scores" must be present. A score k for
 * project p expands to k synthetic voters approving only p. "groups" and
 * "min_utility" are optional. The canonical serialization sorts all keys and
 * id arrays, emits no whitespace, and omits min_utility when it is zero.
 */

#ifndef GROUPPB_IO_HPP
#define GROUPPB_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "grouppb/core.hpp"

namespace grouppb {

namespace detail {

using json = nlohmann::json;

/// Score maps larger than this are rejected instead of being expanded.
inline constexpr Amount kMaxSyntheticVoters = 10'000'000;

[[noreturn]] inline void schema_error(const std::string& message) {
  throw Error(ErrorCode::SchemaError, message);
}

inline void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) schema_error(where + ": unexpected field '" + key + "'");
  }
}

inline Amount read_integer(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + ": missing field '" + key + "'");
  if (it->is_number_unsigned()) {
    auto v = it->get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(kMaxTotal)) schema_error(where + "." + key + ": value too large");
    return static_cast<Amount>(v);
  }
  if (it->is_number_integer()) return it->get<Amount>();
  schema_error(where + "." + key + ": expected an integer");
}

inline std::string read_id(const json& obj, const std::string& where) {
  auto it = obj.find("id");
  if (it == obj.end() || !it->is_string()) schema_error(where + ": missing string field 'id'");
  auto id = it->get<std::string>();
  if (!is_valid_id(id)) schema_error(where + ".id: '" + id + "' is not of the form [A-Za-z0-9_-]+");
  return id;
}

inline std::vector<std::string> read_id_list(const json& obj, const char* key,
                                             const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) schema_error(where + ": missing array field '" + key + "'");
  std::vector<std::string> out;
  for (const auto& item : *it) {
    if (!item.is_string()) schema_error(where + "." + key + ": expected project id strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                           std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

/// Parses and validates an instance. Throws Error(ParseError) with line and
/// column for malformed JSON, Error(SchemaError) naming the offending field,
/// and ValidationError for semantic problems.
inline Instance parse_instance(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_and_column(text, e.byte);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) detail::schema_error("top level must be an object");
  detail::check_keys(doc, {"budget", "projects", "voters", "scores", "groups"}, "instance");

  RawInstance raw;
  raw.global_budget = detail::read_integer(doc, "budget", "instance");

  auto projects = doc.find("projects");
  if (projects == doc.end() || !projects->is_array()) detail::schema_error("instance: missing array field 'projects'");
  if (projects->empty()) detail::schema_error("instance.projects: must not be empty");
  for (std::size_t i = 0; i < projects->size(); ++i) {
    const auto& pj = (*projects)[i];
    const std::string where = "projects[" + std::to_string(i) + "]";
    if (!pj.is_object()) detail::schema_error(where + ": expected an object");
    detail::check_keys(pj, {"id", "cost"}, where);
    raw.projects.push_back({detail::read_id(pj, where), detail::read_integer(pj, "cost", where)});
  }

  const bool has_voters = doc.contains("voters");
  const bool has_scores = doc.contains("scores");
  if (has_voters == has_scores) detail::schema_error("instance: exactly one of 'voters' and 'scores' is required");
  if (has_voters) {
    const auto& voters = doc["voters"];
    if (!voters.is_array()) detail::schema_error("instance.voters: expected an array");
    for (std::size_t i = 0; i < voters.size(); ++i) {
      const auto& vj = voters[i];
      const std::string where = "voters[" + std::to_string(i) + "]";
      if (!vj.is_object()) detail::schema_error(where + ": expected an object");
      detail::check_keys(vj, {"id", "approves"}, where);
      raw.voters.push_back({detail::read_id(vj, where), detail::read_id_list(vj, "approves", where)});
    }
  } else {
    const auto& scores = doc["scores"];
    if (!scores.is_object()) detail::schema_error("instance.scores: expected an object");
    Amount synthetic = 0;
    for (const auto& [pid, value] : scores.items()) {
      const std::string where = "scores." + pid;
      json holder = {{"v", value}};
      const Amount k = detail::read_integer(holder, "v", where);
      if (k < 0) detail::schema_error(where + ": score must be non-negative");
      synthetic += k;
      if (synthetic > detail::kMaxSyntheticVoters) detail::schema_error("instance.scores: total score too large to expand");
      for (Amount i = 1; i <= k; ++i) {
        raw.voters.push_back({"s-" + pid + "-" + std::to_string(i), {pid}});
      }
    }
  }

  if (auto groups = doc.find("groups"); groups != doc.end()) {
    if (!groups->is_array()) detail::schema_error("instance.groups: expected an array");
    for (std::size_t i = 0; i < groups->size(); ++i) {
      const auto& gj = (*groups)[i];
      const std::string where = "groups[" + std::to_string(i) + "]";
      if (!gj.is_object()) detail::schema_error(where + ": expected an object");
      detail::check_keys(gj, {"id", "members", "budget", "min_utility"}, where);
      Group g;
      g.id = detail::read_id(gj, where);
      g.members = detail::read_id_list(gj, "members", where);
      g.budget = detail::read_integer(gj, "budget", where);
      if (gj.contains("min_utility")) g.min_utility = detail::read_integer(gj, "min_utility", where);
      raw.groups.push_back(std::move(g));
    }
  }
  return validate_instance(std::move(raw));
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  using detail::json;
  json doc = json::object();
  doc["budget"] = inst.global_budget;
  json projects = json::array();
  for (const auto& p : inst.projects) projects.push_back({{"id", p.id}, {"cost", p.cost}});
  doc["projects"] = std::move(projects);
  json voters = json::array();
  for (const auto& v : inst.voters) voters.push_back({{"id", v.id}, {"approves", v.approves}});
  doc["voters"] = std::move(voters);
  json groups = json::array();
  for (const auto& g : inst.groups) {
    json gj = {{"id", g.id}, {"members", g.members}, {"budget", g.budget}};
    if (g.min_utility != 0) gj["min_utility"] = g.min_utility;
    groups.push_back(std::move(gj));
  }
  doc["groups"] = std::move(groups);
  return doc;
}

/// Canonical serialization; parse_instance(serialize_instance(x)) == x.
inline std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump();
}

}  // namespace grouppb

#endif  // GROUPPB_IO_HPP
