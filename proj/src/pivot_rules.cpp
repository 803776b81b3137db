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

#include "pivotlab/pivot_rules.hpp"

#include <stdexcept>

namespace pivotlab {

std::optional<PivotRule> pivotRuleFromString(std::string_view s) {
  if (s == "dantzig") return PivotRule::dantzig;
  if (s == "bland") return PivotRule::bland;
  if (s == "greatest-improvement") return PivotRule::greatest_improvement;
  if (s == "least-entered") return PivotRule::least_entered;
  return std::nullopt;
}

std::string_view pivotRuleName(PivotRule rule) {
  switch (rule) {
    case PivotRule::dantzig: return "dantzig";
    case PivotRule::bland: return "bland";
    case PivotRule::greatest_improvement: return "greatest-improvement";
    case PivotRule::least_entered: return "least-entered";
  }
  return "?";
}

namespace {

// Candidates arrive in ascending column order, so "first strictly better"
// scans implement the smallest-id tie-break for free.
const Candidate* pickDantzig(const std::vector<Candidate>& cs) {
  const Candidate* best = nullptr;
  for (const Candidate& c : cs) {
    if (!best || c.reducedCost.abs() > best->reducedCost.abs()) best = &c;
  }
  return best;
}

const Candidate* pickGreatestImprovement(const RuleContext& ctx) {
  if (!ctx.stepsComputed)
    throw std::logic_error("greatest-improvement requires ratio-test steps in the context");
  const Candidate* best = nullptr;
  std::optional<Rational> bestGain;  // nullopt = unbounded gain
  for (const Candidate& c : ctx.candidates) {
    std::optional<Rational> gain;
    if (c.step) gain = c.reducedCost * *c.step;
    bool better;
    if (!best) {
      better = true;
    } else if (!gain != !bestGain) {
      better = !gain;  // unbounded beats bounded
    } else if (gain && bestGain && !(*gain == *bestGain)) {
      better = *gain > *bestGain;
    } else {
      better = c.reducedCost.abs() > best->reducedCost.abs();
    }
    if (better) {
      best = &c;
      bestGain = gain;
    }
  }
  return best;
}

const Candidate* pickLeastEntered(const RuleContext& ctx) {
  if (!ctx.occurrences)
    throw std::logic_error("least-entered requires an occurrence record in the context");
  const Candidate* best = nullptr;
  long long bestCount = 0;
  for (const Candidate& c : ctx.candidates) {
    long long n = ctx.occurrences->count(c.column);
    bool better;
    if (!best) {
      better = true;
    } else if (n != bestCount) {
      better = n < bestCount;
    } else if (ctx.tieBreak == TieBreak::cost) {
      better = c.reducedCost.abs() > best->reducedCost.abs();
    } else {
      better = false;  // index tie-break: keep the earlier (smaller) id
    }
    if (better) {
      best = &c;
      bestCount = n;
    }
  }
  return best;
}

}  // namespace

std::optional<int> selectEntering(PivotRule rule, const RuleContext& ctx) {
  if (ctx.candidates.empty()) return std::nullopt;
  const Candidate* best = nullptr;
  switch (rule) {
    case PivotRule::dantzig:
      best = pickDantzig(ctx.candidates);
      break;
    case PivotRule::bland:
      best = &ctx.candidates.front();
      break;
    case PivotRule::greatest_improvement:
      best = pickGreatestImprovement(ctx);
      break;
    case PivotRule::least_entered:
      best = pickLeastEntered(ctx);
      break;
  }
  return best->column;
}

}  // namespace pivotlab
