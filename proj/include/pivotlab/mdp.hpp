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

#ifndef PIVOTLAB_MDP_HPP
#define PIVOTLAB_MDP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivotlab/lp.hpp"

namespace pivotlab {

struct DecisionEdge {
  std::string from, to;
  Rational reward;
};

struct RandomizationEdge {
  std::string from, to;
  Rational probability;
};

/**
 * Decision vertices choose their outgoing edge; randomization vertices follow
 * a fixed distribution; sinks absorb flow and generate no constraints.
 *
 * validate() enforces: the three vertex sets are pairwise disjoint, all edge
 * endpoints are declared, decision edges leave decision vertices,
 * randomization edges leave randomization vertices and end in decision
 * vertices or sinks (randomization-to-randomization edges are rejected),
 * probabilities lie in [0,1] and sum to exactly 1 per randomization vertex,
 * and no edge is duplicated.
 */
class MdpGraph {
 public:
  void addDecisionVertex(const std::string& name) { decisions_.push_back(name); }
  void addRandomizationVertex(const std::string& name) { randoms_.push_back(name); }
  void addSink(const std::string& name) { sinks_.push_back(name); }
  void addDecisionEdge(std::string from, std::string to, Rational reward) {
    decisionEdges_.push_back({std::move(from), std::move(to), std::move(reward)});
  }
  void addRandomizationEdge(std::string from, std::string to, Rational probability) {
    randomEdges_.push_back({std::move(from), std::move(to), std::move(probability)});
  }

  const std::vector<std::string>& decisionVertices() const { return decisions_; }
  const std::vector<std::string>& randomizationVertices() const { return randoms_; }
  const std::vector<std::string>& sinks() const { return sinks_; }
  const std::vector<DecisionEdge>& decisionEdges() const { return decisionEdges_; }
  const std::vector<RandomizationEdge>& randomizationEdges() const { return randomEdges_; }

  /// Throws std::invalid_argument on any structural violation.
  void validate() const;

 private:
  std::vector<std::string> decisions_, randoms_, sinks_;
  std::vector<DecisionEdge> decisionEdges_;
  std::vector<RandomizationEdge> randomEdges_;
};

/**
 * Parses the line-oriented MDP format ('#' starts a comment):
 *
 *   decision <name>...
 *   random <name>...
 *   sink <name>...
 *   edge <from> <to> reward <rational>
 *   redge <from> <to> prob <rational>
 *
 * The result is validated before being returned.
 */
MdpGraph parseMdp(std::string_view text);

/// Canonical text; parseMdp(serializeMdp(g)) reproduces g.
std::string serializeMdp(const MdpGraph& g);

/**
 * The node-g fragment: decision vertices e1, e2, b, g; sink F; decision
 * edges (e1,g), (e2,g), (b,g), (g,F), all with reward 0; no randomization
 * vertices. Treating e1, e2 and b as decision vertices is an inference — the
 * fragment is only known through its flows into g.
 */
MdpGraph nodeGFixture();

enum class RhsMode { zero, unit };

/**
 * Literal transcription of the "(P)" constraint schema, flaws included, on
 * purpose: for each decision vertex u, outgoing decision flow minus
 * single-hop randomization inflow equals 1. Inflow from other decision
 * vertices is NOT subtracted — use generateFlowConservation for the repaired
 * conservation law and diffConstraints to exhibit the difference.
 *
 * One variable x(u,v) per decision edge, one constraint per decision vertex;
 * objective: maximize sum of reward(u,v) * x(u,v).
 */
LinearProgram generateP(const MdpGraph& mdp);

/**
 * Strict flow conservation per decision vertex u: outgoing flow minus
 * decision-to-decision inflow minus single-hop randomization inflow equals
 * the chosen right-hand side (0 or 1). Same variables and objective as
 * generateP.
 */
LinearProgram generateFlowConservation(const MdpGraph& mdp, RhsMode rhsMode);

struct SignedTerm {
  std::string var;
  Rational coeff;
};

struct TermMismatch {
  std::string var;
  Rational a, b;
};

/// Differences between two same-named constraints; terms are matched by
/// variable name.
struct ConstraintKeyDiff {
  std::string key;
  std::vector<SignedTerm> missing;  // present in b, absent in a
  std::vector<SignedTerm> extra;    // present in a, absent in b
  std::vector<TermMismatch> mismatched;
  std::optional<std::pair<Rational, Rational>> rhs;  // set when the sides differ
  std::optional<std::pair<Relation, Relation>> relation;
  bool empty() const {
    return missing.empty() && extra.empty() && mismatched.empty() && !rhs && !relation;
  }
};

struct ConstraintDiff {
  std::vector<ConstraintKeyDiff> keys;  // shared names that differ, in a's order
  std::vector<std::string> onlyInA, onlyInB;
  bool empty() const { return keys.empty() && onlyInA.empty() && onlyInB.empty(); }
};

/// Term-for-term comparison of two programs' constraints, keyed by constraint
/// name. Unmatched names are reported, not fatal.
ConstraintDiff diffConstraints(const LinearProgram& a, const LinearProgram& b);

}  // namespace pivotlab

#endif  // PIVOTLAB_MDP_HPP
