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

#include <stdexcept>

#include "doctest.h"
#include "pivotlab/certificates.hpp"
#include "test_util.hpp"

using namespace pivotlab;
using pivotlab::testing::Rng;
using pivotlab::testing::randomMdp;

TEST_CASE("node-g fixture shape") {
  MdpGraph g = nodeGFixture();
  CHECK(g.decisionVertices().size() == 4);
  CHECK(g.decisionEdges().size() == 4);
  CHECK(g.randomizationVertices().empty());
  CHECK(g.sinks() == std::vector<std::string>{"F"});
  g.validate();  // probability invariant holds vacuously

  LinearProgram flow = generateFlowConservation(g, RhsMode::zero);
  CHECK(flow.constraints().size() == 4);  // one per decision vertex
  CHECK(flow.variables().size() == 4);    // one per decision edge
}

TEST_CASE("flow conservation writes the node-g equation") {
  MdpGraph g = nodeGFixture();
  LinearProgram lp = generateFlowConservation(g, RhsMode::zero);

  // x(g,F) - x(e1,g) - x(e2,g) - x(b,g) = 0
  const Constraint* cg = nullptr;
  for (const auto& c : lp.constraints())
    if (c.name == "g") cg = &c;
  REQUIRE(cg != nullptr);
  LinearExpression expected;
  expected.add(*lp.findVariable("x(g,F)"), Rational(1));
  expected.add(*lp.findVariable("x(e1,g)"), Rational(-1));
  expected.add(*lp.findVariable("x(e2,g)"), Rational(-1));
  expected.add(*lp.findVariable("x(b,g)"), Rational(-1));
  CHECK(cg->expr == expected);
  CHECK(cg->rhs == Rational(0));
  CHECK(cg->relation == Relation::eq);
}

TEST_CASE("the schema omits decision inflow on purpose") {
  MdpGraph g = nodeGFixture();
  LinearProgram p = generateP(g);
  const Constraint* cg = nullptr;
  for (const auto& c : p.constraints())
    if (c.name == "g") cg = &c;
  REQUIRE(cg != nullptr);
  // Only the outgoing term survives: x(g,F) = 1.
  LinearExpression expected;
  expected.add(*p.findVariable("x(g,F)"), Rational(1));
  CHECK(cg->expr == expected);
  CHECK(cg->rhs == Rational(1));
}

TEST_CASE("single decision vertex straight to the sink") {
  MdpGraph g;
  g.addDecisionVertex("u");
  g.addSink("F");
  g.addDecisionEdge("u", "F", Rational(0));

  LinearProgram p = generateP(g);
  REQUIRE(p.constraints().size() == 1);
  LinearExpression expected;
  expected.add(*p.findVariable("x(u,F)"), Rational(1));
  CHECK(p.constraints()[0].expr == expected);
  CHECK(p.constraints()[0].rhs == Rational(1));

  CHECK(generateFlowConservation(g, RhsMode::zero).constraints()[0].rhs == Rational(0));
  CHECK(generateFlowConservation(g, RhsMode::unit).constraints()[0].rhs == Rational(1));
}

TEST_CASE("a probability-1 randomization loop contradicts the schema") {
  // u -> w (decision), w -> u with p = 1. The schema's row for u collapses
  // to 0 = 1.
  MdpGraph g;
  g.addDecisionVertex("u");
  g.addRandomizationVertex("w");
  g.addDecisionEdge("u", "w", Rational(0));
  g.addRandomizationEdge("w", "u", Rational(1));

  LinearProgram p = generateP(g);
  REQUIRE(p.constraints().size() == 1);
  CHECK(p.constraints()[0].isTrivial());
  CHECK(p.constraints()[0].rhs == Rational(1));
  auto flags = p.validate();
  CHECK(flags.size() == 1);
}

TEST_CASE("diff pinpoints the three missing inflow terms and the rhs") {
  MdpGraph g = nodeGFixture();
  ConstraintDiff d = diffConstraints(generateP(g), generateFlowConservation(g, RhsMode::zero));

  const ConstraintKeyDiff* at = nullptr;
  for (const auto& kd : d.keys)
    if (kd.key == "g") at = &kd;
  REQUIRE(at != nullptr);
  CHECK(at->missing.size() == 3);
  for (const auto& term : at->missing) CHECK(term.coeff == Rational(-1));
  CHECK(at->extra.empty());
  CHECK(at->mismatched.empty());
  REQUIRE(at->rhs.has_value());
  CHECK(at->rhs->first == Rational(1));
  CHECK(at->rhs->second == Rational(0));
  CHECK(d.onlyInA.empty());
  CHECK(d.onlyInB.empty());
}

TEST_CASE("diff of a program with itself is empty") {
  LinearProgram p = generateP(nodeGFixture());
  CHECK(diffConstraints(p, p).empty());
}

TEST_CASE("unit vs zero rhs differ only on the right side") {
  MdpGraph g = nodeGFixture();
  ConstraintDiff d = diffConstraints(generateFlowConservation(g, RhsMode::unit),
                                     generateFlowConservation(g, RhsMode::zero));
  CHECK(d.keys.size() == 4);
  for (const auto& kd : d.keys) {
    CHECK(kd.missing.empty());
    CHECK(kd.extra.empty());
    CHECK(kd.mismatched.empty());
    REQUIRE(kd.rhs.has_value());
    CHECK(kd.rhs->first == Rational(1));
    CHECK(kd.rhs->second == Rational(0));
  }
}

TEST_CASE("graph validation") {
  SUBCASE("probabilities must sum to one") {
    MdpGraph g;
    g.addDecisionVertex("u");
    g.addRandomizationVertex("w");
    g.addDecisionEdge("u", "w", Rational(0));
    g.addRandomizationEdge("w", "u", Rational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("randomization-to-randomization edges are rejected") {
    MdpGraph g;
    g.addDecisionVertex("u");
    g.addRandomizationVertex("w1");
    g.addRandomizationVertex("w2");
    g.addDecisionEdge("u", "w1", Rational(0));
    g.addRandomizationEdge("w1", "w2", Rational(1));
    g.addRandomizationEdge("w2", "u", Rational(1));
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("probabilities outside [0,1]") {
    MdpGraph g;
    g.addDecisionVertex("u");
    g.addRandomizationVertex("w");
    g.addDecisionEdge("u", "w", Rational(0));
    g.addRandomizationEdge("w", "u", Rational(2));
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("undeclared endpoints and duplicates") {
    MdpGraph g;
    g.addDecisionVertex("u");
    g.addDecisionEdge("u", "nowhere", Rational(0));
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    MdpGraph h;
    h.addDecisionVertex("u");
    h.addSink("F");
    h.addDecisionEdge("u", "F", Rational(0));
    h.addDecisionEdge("u", "F", Rational(1));
    CHECK_THROWS_AS(h.validate(), std::invalid_argument);

    MdpGraph k;
    k.addDecisionVertex("u");
    k.addSink("u");
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
  }
}

TEST_CASE("text format round trip") {
  MdpGraph g = nodeGFixture();
  std::string text = serializeMdp(g);
  CHECK(text ==
        "decision e1 e2 b g\n"
        "sink F\n"
        "edge e1 g reward 0\n"
        "edge e2 g reward 0\n"
        "edge b g reward 0\n"
        "edge g F reward 0\n");
  MdpGraph back = parseMdp(text);
  CHECK(serializeMdp(back) == text);

  CHECK_THROWS_AS(parseMdp("edge a b reward 1\n"), std::invalid_argument);  // undeclared
  CHECK_THROWS_AS(parseMdp("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parseMdp("decision u\nsink F\nedge u F cost 1\n"), ParseError);

  // Rewards and probabilities survive the trip.
  Rng rng(1234);
  for (int i = 0; i < 25; ++i) {
    MdpGraph m = randomMdp(rng);
    MdpGraph m2 = parseMdp(serializeMdp(m));
    CHECK(serializeMdp(m2) == serializeMdp(m));
  }
}

TEST_CASE("cardinality law: |E0| variables, |V0| constraints") {
  Rng rng(2025);
  for (int i = 0; i < 50; ++i) {
    MdpGraph g = randomMdp(rng);
    for (const LinearProgram& lp :
         {generateP(g), generateFlowConservation(g, RhsMode::zero),
          generateFlowConservation(g, RhsMode::unit)}) {
      CHECK(lp.variables().size() == g.decisionEdges().size());
      CHECK(lp.constraints().size() == g.decisionVertices().size());
    }
  }
}

TEST_CASE("pure decision graphs telescope to the empty row") {
  // When every decision edge ends in a decision vertex, outflow and inflow
  // cancel term for term, so the all-ones aggregate of the zero-rhs system
  // is 0 = 0.
  Rng rng(777);
  for (int i = 0; i < 30; ++i) {
    MdpGraph g = randomMdp(rng, /*decisionTargetsOnly=*/true);
    LinearProgram lp = generateFlowConservation(g, RhsMode::zero);
    AggregatedRow sum =
        aggregate(lp, std::vector<Rational>(lp.constraints().size(), Rational(1)));
    CHECK(sum.coefficients.empty());
    CHECK(sum.rhs == Rational(0));
  }
}

TEST_CASE("rewards become the objective") {
  MdpGraph g;
  g.addDecisionVertex("u");
  g.addSink("F");
  g.addDecisionEdge("u", "F", Rational(BigInt(7), BigInt(2)));
  LinearProgram p = generateP(g);
  CHECK(p.sense == Sense::maximize);
  CHECK(p.objective.coeff(*p.findVariable("x(u,F)")) == Rational(BigInt(7), BigInt(2)));
}
