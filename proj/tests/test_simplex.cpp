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

#include "pivotlab/simplex.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "pivotlab/fixtures.hpp"
#include "pivotlab/generators.hpp"
#include "test_util.hpp"

using namespace pivotlab;
using pivotlab::testing::Rng;
using pivotlab::testing::bruteForce;
using pivotlab::testing::oracleObjective;
using pivotlab::testing::randomProgram;

namespace {

SolveOptions validated() {
  SolveOptions o;
  o.validate = true;
  return o;
}

// Classic degenerate instance that cycles under naive most-negative pricing.
LinearProgram bealeInstance() {
  return parseLp(
      "var x4\nvar x5\nvar x6\nvar x7\n"
      "min -3/4 x4 + 150 x5 - 1/50 x6 + 6 x7\n"
      "r1: 1/4 x4 - 60 x5 - 1/25 x6 + 9 x7 <= 0\n"
      "r2: 1/2 x4 - 90 x5 - 1/50 x6 + 3 x7 <= 0\n"
      "r3: x6 <= 1\n");
}

}  // namespace

TEST_CASE("a unit equality row is feasible with zero pivots") {
  LinearProgram lp = parseLp("var x\nmax 0\nc: x = 1\n");
  StandardFormLP sf = toStandardForm(lp, false);
  Phase1Result p1 = phase1(sf, validated());
  REQUIRE(p1.status == Phase1Status::feasible);
  CHECK(p1.pivots == 0);
  CHECK(p1.state->solution().at("x") == Rational(1));
}

TEST_CASE("ratio test on the n=2 cube") {
  LinearProgram km = kleeMinty(2);
  StandardFormLP sf = toStandardForm(km, false);
  Phase1Result p1 = phase1(sf, validated());
  REQUIRE(p1.status == Phase1Status::feasible);
  const SimplexState& st = *p1.state;
  // All-slack start: columns 2 and 3 are the slacks.
  CHECK(st.basis() == std::vector<int>{2, 3});

  // Entering x1: ratios are 1/1 on row 0 and 100/20 on row 1.
  auto row = ratioTestRow(st, 0);
  REQUIRE(row.has_value());
  CHECK(*row == 0);
  CHECK(*ratioTestLeaving(st, 0) == 2);  // slack(r1) leaves
}

TEST_CASE("ratio test tie breaks on the smallest basic id") {
  LinearProgram lp = parseLp("var x\nmax x\nc1: x <= 2\nc2: x <= 2\n");
  StandardFormLP sf = toStandardForm(lp, false);
  Phase1Result p1 = phase1(sf, validated());
  REQUIRE(p1.status == Phase1Status::feasible);
  // Both rows tie at ratio 2; the smaller basic id (slack of c1) leaves.
  CHECK(*ratioTestLeaving(*p1.state, 0) == 1);
}

TEST_CASE("nonpositive column means unbounded") {
  LinearProgram lp = parseLp("var x\nmax x\nc: -1 x <= 1\n");
  SolveResult r = solve(lp, PivotRule::dantzig, false, validated());
  CHECK(r.status == SolveStatus::unbounded);
  REQUIRE(r.ray.count("x") == 1);
  CHECK(r.ray.at("x").sign() > 0);
}

TEST_CASE("klee-minty under dantzig, hand-traced sizes") {
  SolveResult r2 = solve(kleeMinty(2), PivotRule::dantzig, false, validated());
  CHECK(r2.status == SolveStatus::optimal);
  CHECK(r2.phase1Pivots == 0);
  CHECK(r2.phase2Pivots == 3);
  CHECK(*r2.objective == Rational(100));

  SolveResult r3 = solve(kleeMinty(3), PivotRule::dantzig, false, validated());
  CHECK(r3.phase2Pivots == 7);
  CHECK(*r3.objective == Rational(10000));

  // A rerun is byte-identical at the trace level.
  SolveResult again = solve(kleeMinty(3), PivotRule::dantzig, false, validated());
  CHECK(traceJsonLines(again.trace, again.standardForm) ==
        traceJsonLines(r3.trace, r3.standardForm));
}

TEST_CASE("already-optimal start takes zero pivots") {
  LinearProgram lp = parseLp("var x\nmax 0\nc: x <= 5\n");
  SolveResult r = solve(lp, PivotRule::dantzig, false, validated());
  CHECK(r.status == SolveStatus::optimal);
  CHECK(r.phase2Pivots == 0);
  CHECK(*r.objective == Rational(0));
}

TEST_CASE("infeasible system ships a verifiable certificate") {
  LinearProgram lp = parseLp("var x1\nmax 0\nc: x1 = -1\n");
  SolveResult r = solve(lp, PivotRule::dantzig, false, validated());
  REQUIRE(r.status == SolveStatus::infeasible);
  CHECK(verifyFarkas(r.standardForm, r.farkas));
}

TEST_CASE("verify_farkas basics") {
  LinearProgram lp1 = builtinLp("lp1");
  StandardFormLP boxed = toStandardForm(lp1, true);
  Phase1Result p1 = phase1(boxed, validated());
  REQUIRE(p1.status == Phase1Status::infeasible);
  CHECK(verifyFarkas(boxed, p1.farkas));

  // The zero vector certifies nothing.
  std::vector<Rational> zero(boxed.rows.size(), Rational(0));
  CHECK_FALSE(verifyFarkas(boxed, zero));

  // Certificates form a cone: scaling by 2 preserves validity.
  std::vector<Rational> doubled = p1.farkas;
  for (auto& y : doubled) y *= Rational(2);
  CHECK(verifyFarkas(boxed, doubled));

  CHECK_THROWS_AS(verifyFarkas(boxed, std::vector<Rational>(3, Rational(1))),
                  std::invalid_argument);
}

TEST_CASE("phase 1 on lp1 without the box finds an exact feasible point") {
  LinearProgram lp1 = builtinLp("lp1");
  StandardFormLP sf = toStandardForm(lp1, false);
  Phase1Result p1 = phase1(sf, validated());
  REQUIRE(p1.status == Phase1Status::feasible);

  auto point = p1.state->solution();
  std::vector<Rational> x;
  for (const auto& v : lp1.variables()) x.push_back(point.at(v.name));
  for (const auto& c : lp1.constraints()) {
    CHECK(evaluate(c.expr, x) == c.rhs);  // zero residual, all six rows
  }
  for (const auto& [name, value] : point) {
    (void)name;
    CHECK(value.sign() >= 0);
  }
}

TEST_CASE("lp2 prefix with the unit box is infeasible") {
  LinearProgram lp2 = builtinLp("lp2_prefix8");
  StandardFormLP boxed = toStandardForm(lp2, true);
  Phase1Result p1 = phase1(boxed, validated());
  REQUIRE(p1.status == Phase1Status::infeasible);
  CHECK(verifyFarkas(boxed, p1.farkas));
}

TEST_CASE("iteration cap reports iteration_limit") {
  SolveOptions opts;
  opts.maxPivots = 3;
  SolveResult r = solve(kleeMinty(4), PivotRule::dantzig, false, opts);
  CHECK(r.status == SolveStatus::iteration_limit);
}

TEST_CASE("degenerate cycling instance terminates under every rule") {
  LinearProgram beale = bealeInstance();
  StandardFormLP sf = toStandardForm(beale, false);
  auto oracle = bruteForce(sf);
  REQUIRE(oracle.status == SolveStatus::optimal);
  Rational expected = *oracleObjective(oracle, sf);
  CHECK(expected == Rational(BigInt(-1), BigInt(20)));

  for (PivotRule rule : {PivotRule::dantzig, PivotRule::bland, PivotRule::greatest_improvement,
                         PivotRule::least_entered}) {
    SolveResult r = solve(beale, rule, false, validated());
    REQUIRE(r.status == SolveStatus::optimal);
    CHECK(*r.objective == expected);
  }
}

TEST_CASE("bland with the id tie-break never revisits a basis here") {
  LinearProgram beale = bealeInstance();
  StandardFormLP sf = toStandardForm(beale, false);
  Phase1Result p1 = phase1(sf, validated());
  REQUIRE(p1.status == Phase1Status::feasible);

  std::vector<int> basis = p1.state->basis();
  SolveResult r = phase2(*p1.state, PivotRule::bland, validated());
  REQUIRE(r.status == SolveStatus::optimal);

  // Replay the trace and record every visited basis.
  std::set<std::vector<int>> seen;
  auto signature = [](std::vector<int> b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  CHECK(seen.insert(signature(basis)).second);
  for (const PivotEvent& ev : r.trace) {
    auto it = std::find(basis.begin(), basis.end(), ev.leaving);
    REQUIRE(it != basis.end());
    *it = ev.entering;
    CHECK(seen.insert(signature(basis)).second);
  }
}

TEST_CASE("phase-2 objectives are monotone in the trace") {
  SolveResult r = solve(kleeMinty(5), PivotRule::dantzig, false, validated());
  Rational prev;
  bool first = true;
  for (const PivotEvent& ev : r.trace) {
    if (ev.phase != 2) continue;
    if (!first) CHECK(prev <= ev.objectiveAfter);
    CHECK(ev.degenerate == false);  // the cube path never stalls
    prev = ev.objectiveAfter;
    first = false;
  }
}

TEST_CASE("solve agrees with brute force on random programs") {
  Rng rng(90210);
  const PivotRule rules[] = {PivotRule::dantzig, PivotRule::bland,
                             PivotRule::greatest_improvement, PivotRule::least_entered};
  for (int i = 0; i < 80; ++i) {
    LinearProgram lp = randomProgram(rng);
    StandardFormLP sf = toStandardForm(lp, false);
    auto oracle = bruteForce(sf);
    SolveResult r = solve(lp, rules[i % 4], false, validated());
    REQUIRE(r.status == oracle.status);
    if (oracle.status == SolveStatus::optimal) {
      CHECK(*r.objective == *oracleObjective(oracle, sf));
    }
    if (r.status == SolveStatus::infeasible) {
      CHECK(verifyFarkas(r.standardForm, r.farkas));
    }
  }
}

TEST_CASE("empty-left-hand-side rows resolve through phase 1") {
  // 0 = 1 has no solution; the artificial can never leave.
  LinearProgram bad = parseLp("var x\nmax x\nt: 0 = 1\nc: x <= 2\n");
  SolveResult rBad = solve(bad, PivotRule::dantzig, false, validated());
  REQUIRE(rBad.status == SolveStatus::infeasible);
  CHECK(verifyFarkas(rBad.standardForm, rBad.farkas));

  // 0 = 0 is vacuous; the row is dropped and the rest solves normally.
  LinearProgram ok = parseLp("var x\nmax x\nt: 0 = 0\nc: x <= 2\n");
  SolveResult rOk = solve(ok, PivotRule::dantzig, false, validated());
  REQUIRE(rOk.status == SolveStatus::optimal);
  CHECK(*rOk.objective == Rational(2));
}

TEST_CASE("redundant equality rows are dropped, not fatal") {
  LinearProgram lp = parseLp(
      "var x\nvar y\nmax x + y\n"
      "c1: x + y = 2\nc2: 2 x + 2 y = 4\nc3: x <= 2\n");
  SolveResult r = solve(lp, PivotRule::dantzig, false, validated());
  REQUIRE(r.status == SolveStatus::optimal);
  CHECK(*r.objective == Rational(2));
}

TEST_CASE("unbounded ray improves the objective") {
  LinearProgram lp = parseLp("var x\nvar y\nmax x - y\nc: x - y <= 3\nc2: y <= 1\n");
  SolveResult r = solve(lp, PivotRule::dantzig, false, validated());
  // x - y <= 3 caps the objective; this one is bounded. Flip the constraint:
  LinearProgram lp2 = parseLp("var x\nvar y\nmax x - y\nc: y - x <= 3\nc2: y <= 1\n");
  SolveResult r2 = solve(lp2, PivotRule::dantzig, false, validated());
  CHECK(r.status == SolveStatus::optimal);
  REQUIRE(r2.status == SolveStatus::unbounded);
  // The ray must improve the maximized objective.
  Rational gain;
  for (const auto& [name, d] : r2.ray) gain += lp2.objective.coeff(*lp2.findVariable(name)) * d;
  CHECK(gain.sign() > 0);
}
