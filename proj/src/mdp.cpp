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

#include "pivotlab/mdp.hpp"

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace pivotlab {

namespace {

enum class VertexKind { decision, randomization, sink };

std::map<std::string, VertexKind> vertexIndex(const MdpGraph& g) {
  std::map<std::string, VertexKind> idx;
  auto insert = [&idx](const std::string& name, VertexKind kind) {
    if (!idx.emplace(name, kind).second)
      throw std::invalid_argument("vertex '" + name + "' declared more than once");
  };
  for (const auto& v : g.decisionVertices()) insert(v, VertexKind::decision);
  for (const auto& v : g.randomizationVertices()) insert(v, VertexKind::randomization);
  for (const auto& v : g.sinks()) insert(v, VertexKind::sink);
  return idx;
}

}  // namespace

void MdpGraph::validate() const {
  auto idx = vertexIndex(*this);
  auto kindOf = [&idx](const std::string& name, const char* role) {
    auto it = idx.find(name);
    if (it == idx.end())
      throw std::invalid_argument(std::string(role) + " endpoint '" + name + "' is not declared");
    return it->second;
  };

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : decisionEdges_) {
    if (kindOf(e.from, "decision edge") != VertexKind::decision)
      throw std::invalid_argument("decision edge must leave a decision vertex: (" + e.from +
                                  "," + e.to + ")");
    kindOf(e.to, "decision edge");
    if (!seen.emplace(e.from, e.to).second)
      throw std::invalid_argument("duplicate decision edge (" + e.from + "," + e.to + ")");
  }

  std::map<std::string, Rational> probSum;
  std::set<std::pair<std::string, std::string>> seenR;
  for (const auto& e : randomEdges_) {
    if (kindOf(e.from, "randomization edge") != VertexKind::randomization)
      throw std::invalid_argument("randomization edge must leave a randomization vertex: (" +
                                  e.from + "," + e.to + ")");
    VertexKind to = kindOf(e.to, "randomization edge");
    if (to == VertexKind::randomization)
      throw std::invalid_argument("randomization-to-randomization edge (" + e.from + "," +
                                  e.to + ") is not supported");
    if (e.probability.sign() < 0 || Rational(1) < e.probability)
      throw std::invalid_argument("probability of (" + e.from + "," + e.to +
                                  ") lies outside [0,1]");
    if (!seenR.emplace(e.from, e.to).second)
      throw std::invalid_argument("duplicate randomization edge (" + e.from + "," + e.to + ")");
    probSum[e.from] += e.probability;
  }
  for (const auto& w : randoms_) {
    auto it = probSum.find(w);
    Rational sum = it == probSum.end() ? Rational(0) : it->second;
    if (!(sum == Rational(1)))
      throw std::invalid_argument("probabilities out of '" + w + "' sum to " + sum.str() +
                                  ", not 1");
  }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

MdpGraph parseMdp(std::string_view text) {
  MdpGraph g;
  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++lineNo;
    std::size_t advance = end + 1;

    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);

    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) toks.push_back(line.substr(start, i - start));
    }
    if (!toks.empty()) {
      const std::string& head = toks[0];
      auto literal = [&](const std::string& s) {
        try {
          return Rational::fromString(s);
        } catch (const std::exception&) {
          throw ParseError("malformed rational '" + s + "'", lineNo, 1);
        }
      };
      if (head == "decision" || head == "random" || head == "sink") {
        if (toks.size() < 2) throw ParseError("missing vertex name", lineNo, 1);
        for (std::size_t t = 1; t < toks.size(); ++t) {
          if (head == "decision")
            g.addDecisionVertex(toks[t]);
          else if (head == "random")
            g.addRandomizationVertex(toks[t]);
          else
            g.addSink(toks[t]);
        }
      } else if (head == "edge") {
        if (toks.size() != 5 || toks[3] != "reward")
          throw ParseError("expected: edge <from> <to> reward <rational>", lineNo, 1);
        g.addDecisionEdge(toks[1], toks[2], literal(toks[4]));
      } else if (head == "redge") {
        if (toks.size() != 5 || toks[3] != "prob")
          throw ParseError("expected: redge <from> <to> prob <rational>", lineNo, 1);
        g.addRandomizationEdge(toks[1], toks[2], literal(toks[4]));
      } else {
        throw ParseError("unrecognized line start '" + head + "'", lineNo, 1);
      }
    }
    if (end == text.size()) break;
    pos = advance;
  }
  g.validate();
  return g;
}

std::string serializeMdp(const MdpGraph& g) {
  std::string out;
  auto vertexLine = [&out](const char* head, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out += head;
    for (const auto& n : names) {
      out += ' ';
      out += n;
    }
    out += '\n';
  };
  vertexLine("decision", g.decisionVertices());
  vertexLine("random", g.randomizationVertices());
  vertexLine("sink", g.sinks());
  for (const auto& e : g.decisionEdges())
    out += "edge " + e.from + " " + e.to + " reward " + e.reward.str() + "\n";
  for (const auto& e : g.randomizationEdges())
    out += "redge " + e.from + " " + e.to + " prob " + e.probability.str() + "\n";
  return out;
}

MdpGraph nodeGFixture() {
  MdpGraph g;
  g.addDecisionVertex("e1");
  g.addDecisionVertex("e2");
  g.addDecisionVertex("b");
  g.addDecisionVertex("g");
  g.addSink("F");
  g.addDecisionEdge("e1", "g", Rational(0));
  g.addDecisionEdge("e2", "g", Rational(0));
  g.addDecisionEdge("b", "g", Rational(0));
  g.addDecisionEdge("g", "F", Rational(0));
  return g;
}

// ---------------------------------------------------------------------------
// LP generation
// ---------------------------------------------------------------------------

namespace {

struct Translation {
  LinearProgram lp;
  // variable id of x(u,v) per decision edge, in edge order
  std::vector<int> edgeVar;
  // per decision vertex name: randomization inflow terms (edge var, probability)
  std::map<std::string, std::vector<std::pair<int, Rational>>> randomInflow;
  // per decision vertex name: decision-to-decision inflow edge vars
  std::map<std::string, std::vector<int>> decisionInflow;
};

Translation translate(const MdpGraph& g) {
  g.validate();
  Translation t;
  t.lp.sense = Sense::maximize;

  std::set<std::string> decisionSet(g.decisionVertices().begin(), g.decisionVertices().end());
  std::set<std::string> randomSet(g.randomizationVertices().begin(),
                                  g.randomizationVertices().end());

  for (const auto& e : g.decisionEdges()) {
    int id = t.lp.addVariable("x(" + e.from + "," + e.to + ")");
    t.edgeVar.push_back(id);
    t.lp.objective.add(id, e.reward);
  }

  // Single-hop randomization inflow into u: (v,w) a decision edge into a
  // randomization vertex w, followed by (w,u).
  for (std::size_t ei = 0; ei < g.decisionEdges().size(); ++ei) {
    const DecisionEdge& e = g.decisionEdges()[ei];
    if (randomSet.count(e.to)) {
      for (const auto& re : g.randomizationEdges()) {
        if (re.from == e.to && decisionSet.count(re.to))
          t.randomInflow[re.to].push_back({t.edgeVar[ei], re.probability});
      }
    }
    if (decisionSet.count(e.to)) t.decisionInflow[e.to].push_back(t.edgeVar[ei]);
  }
  return t;
}

LinearProgram buildConstraints(const MdpGraph& g, bool includeDecisionInflow, Rational rhs) {
  Translation t = translate(g);
  for (const auto& u : g.decisionVertices()) {
    Constraint c;
    c.name = u;
    for (std::size_t ei = 0; ei < g.decisionEdges().size(); ++ei)
      if (g.decisionEdges()[ei].from == u) c.expr.add(t.edgeVar[ei], Rational(1));
    auto ri = t.randomInflow.find(u);
    if (ri != t.randomInflow.end())
      for (const auto& [var, p] : ri->second) c.expr.add(var, -p);
    if (includeDecisionInflow) {
      auto di = t.decisionInflow.find(u);
      if (di != t.decisionInflow.end())
        for (int var : di->second) c.expr.add(var, Rational(-1));
    }
    c.relation = Relation::eq;
    c.rhs = rhs;
    t.lp.addConstraint(std::move(c));
  }
  return std::move(t.lp);
}

}  // namespace

LinearProgram generateP(const MdpGraph& mdp) {
  return buildConstraints(mdp, /*includeDecisionInflow=*/false, Rational(1));
}

LinearProgram generateFlowConservation(const MdpGraph& mdp, RhsMode rhsMode) {
  return buildConstraints(mdp, /*includeDecisionInflow=*/true,
                          rhsMode == RhsMode::unit ? Rational(1) : Rational(0));
}

// ---------------------------------------------------------------------------
// Structural diff
// ---------------------------------------------------------------------------

ConstraintDiff diffConstraints(const LinearProgram& a, const LinearProgram& b) {
  auto byNameTerms = [](const LinearProgram& lp, const Constraint& c) {
    std::map<std::string, Rational> terms;
    for (const auto& [var, coeff] : c.expr.terms())
      terms.emplace(lp.variable(var).name, coeff);
    return terms;
  };
  std::map<std::string, const Constraint*> bByName;
  for (const auto& c : b.constraints()) bByName.emplace(c.name, &c);

  ConstraintDiff diff;
  std::set<std::string> matched;
  for (const auto& ca : a.constraints()) {
    auto it = bByName.find(ca.name);
    if (it == bByName.end()) {
      diff.onlyInA.push_back(ca.name);
      continue;
    }
    matched.insert(ca.name);
    const Constraint& cb = *it->second;
    ConstraintKeyDiff kd;
    kd.key = ca.name;
    auto ta = byNameTerms(a, ca);
    auto tb = byNameTerms(b, cb);
    for (const auto& [var, coeff] : ta) {
      auto jt = tb.find(var);
      if (jt == tb.end())
        kd.extra.push_back({var, coeff});
      else if (!(jt->second == coeff))
        kd.mismatched.push_back({var, coeff, jt->second});
    }
    for (const auto& [var, coeff] : tb)
      if (!ta.count(var)) kd.missing.push_back({var, coeff});
    if (!(ca.rhs == cb.rhs)) kd.rhs = {ca.rhs, cb.rhs};
    if (ca.relation != cb.relation) kd.relation = {ca.relation, cb.relation};
    if (!kd.empty()) diff.keys.push_back(std::move(kd));
  }
  for (const auto& cb : b.constraints())
    if (!matched.count(cb.name)) diff.onlyInB.push_back(cb.name);
  return diff;
}

}  // namespace pivotlab
