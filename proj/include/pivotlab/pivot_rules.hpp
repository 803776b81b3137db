// Copyright 2026 The pivotlab Authors
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

#ifndef PIVOTLAB_PIVOT_RULES_HPP
#define PIVOTLAB_PIVOT_RULES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pivotlab/rational.hpp"

namespace pivotlab {

/// Entering-variable selection strategies.
enum class PivotRule { dantzig, bland, greatest_improvement, least_entered };

/// CLI spellings: dantzig, bland, greatest-improvement, least-entered.
std::optional<PivotRule> pivotRuleFromString(std::string_view s);
std::string_view pivotRuleName(PivotRule rule);

/// How the least-entered rule breaks occurrence-count ties:
/// cost = largest |reduced cost| then smallest id; index = smallest id.
enum class TieBreak { cost, index };

/**
 * Per-variable tallies of basis entries, the state of the least-entered rule.
 * Counts start at zero when phase 2 begins and only ever grow; their sum
 * equals the number of phase-2 pivots performed so far.
 *
 * Counting is per variable. A per-(variable, basis) variant would be a
 * different rule; if ever wanted, it belongs here behind the same interface.
 */
class OccurrenceRecord {
 public:
  /// Records that `var` entered the basis: its count grows by exactly 1.
  void noteEntering(int var) {
    ++counts_[var];
    ++total_;
  }

  long long count(int var) const {
    auto it = counts_.find(var);
    return it == counts_.end() ? 0 : it->second;
  }

  long long total() const { return total_; }
  const std::map<int, long long>& counts() const { return counts_; }

 private:
  std::map<int, long long> counts_;
  long long total_ = 0;
};

/// One strictly improving nonbasic variable. `step` is the exact ratio-test
/// step length; nullopt marks an unbounded direction. Steps are only
/// populated when the rule in play prices exact objective change.
struct Candidate {
  int column;
  Rational reducedCost;  // > 0 in the engine's internal maximize form
  std::optional<Rational> step;
};

struct RuleContext {
  std::vector<Candidate> candidates;  // ascending column order
  const OccurrenceRecord* occurrences = nullptr;  // required by least_entered
  TieBreak tieBreak = TieBreak::cost;
  bool stepsComputed = false;  // required by greatest_improvement
};

/**
 * Picks the entering variable, or nullopt when the candidate set is empty
 * (optimality).
 *
 *   dantzig               largest |reduced cost|, ties by smallest id
 *   bland                 smallest id
 *   greatest_improvement  largest exact objective change (reduced cost times
 *                         step); an unbounded candidate always wins; ties by
 *                         largest |reduced cost| then smallest id
 *   least_entered         smallest occurrence count, ties per TieBreak
 *
 * Pure function of its context; throws std::logic_error when the context
 * lacks state the rule needs.
 */
std::optional<int> selectEntering(PivotRule rule, const RuleContext& ctx);

}  // namespace pivotlab

#endif  // PIVOTLAB_PIVOT_RULES_HPP
