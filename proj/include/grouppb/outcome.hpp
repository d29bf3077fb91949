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

#ifndef GROUPPB_OUTCOME_HPP
#define GROUPPB_OUTCOME_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouppb/core.hpp"
#include "grouppb/rational.hpp"

namespace grouppb {

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t cells = 0;
  double wall_time_ms = 0.0;
};

/// What every solver returns.
///
/// `exact` solvers leave `guarantee` empty. `profile`, when non-empty, is
/// indexed by utility z and holds the minimum cost of a feasible bundle of
/// utility exactly z (kInfinity if there is none).
struct SolveOutcome {
  Amount utility = 0;
  Bundle bundle;
  std::vector<std::size_t> indices;  // sorted project indices of `bundle`
  bool exact = true;
  std::optional<Rational> guarantee;
  std::optional<Rational> epsilon;
  std::string algorithm;
  SolveStats stats;
  std::vector<Amount> profile;
};

/// Measures wall time into SolveStats on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(SolveStats& stats)
      : stats_(stats), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    stats_.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  SolveStats& stats_;
  std::chrono::steady_clock::time_point start_;
};

namespace detail {

inline void require_no_min_utility(const Instance& inst, std::string_view solver) {
  if (inst.has_min_utility()) {
    throw Error(ErrorCode::Unsupported,
                std::string(solver) +
                    " does not handle group utility requirements; use the brute-force solver");
  }
}

inline SolveOutcome make_outcome(const Instance& inst, const Problem& prob,
                                 std::vector<std::size_t> indices, std::string algorithm) {
  std::sort(indices.begin(), indices.end());
  SolveOutcome out;
  out.bundle = make_bundle(inst, prob, indices);
  out.utility = out.bundle.total_utility;
  out.indices = std::move(indices);
  out.algorithm = std::move(algorithm);
  return out;
}

}  // namespace detail

}  // namespace grouppb

#endif  // GROUPPB_OUTCOME_HPP
