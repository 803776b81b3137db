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

#include "pivotlab/generators.hpp"

#include <stdexcept>

#include "doctest.h"
#include "pivotlab/simplex.hpp"

using namespace pivotlab;

TEST_CASE("n=1 is the trivial one-pivot cube") {
  LinearProgram lp = kleeMinty(1);
  CHECK(lp.variables().size() == 1);
  CHECK(lp.constraints().size() == 1);
  CHECK(serializeLp(lp) == "var x1\nmax x1\nr1: x1 <= 1\n");

  SolveOptions opts;
  opts.validate = true;
  SolveResult r = solve(lp, PivotRule::dantzig, false, opts);
  CHECK(r.phase2Pivots == 1);
  CHECK(*r.objective == Rational(1));
}

TEST_CASE("n=2 matches the written-out instance") {
  LinearProgram lp = kleeMinty(2);
  CHECK(serializeLp(lp) ==
        "var x1\nvar x2\n"
        "max 10 x1 + x2\n"
        "r1: x1 <= 1\n"
        "r2: 20 x1 + x2 <= 100\n");
}

TEST_CASE("n must be positive") {
  CHECK_THROWS_AS(kleeMinty(0), std::invalid_argument);
  CHECK_THROWS_AS(kleeMinty(-3), std::invalid_argument);
}

TEST_CASE("dantzig walks all the vertices from the all-slack basis") {
  SolveOptions opts;
  opts.validate = true;
  for (int n = 1; n <= 8; ++n) {
    SolveResult r = solve(kleeMinty(n), PivotRule::dantzig, false, opts);
    REQUIRE(r.status == SolveStatus::optimal);
    CHECK(r.phase1Pivots == 0);  // rhs >= 0: no phase-1 work
    CHECK(r.phase2Pivots == (1LL << n) - 1);
    CHECK(*r.objective == Rational(pow(BigInt(100), static_cast<unsigned>(n - 1))));
  }
}

TEST_CASE("every rule reaches 100^(n-1)") {
  SolveOptions opts;
  opts.validate = true;
  for (int n = 1; n <= 10; ++n) {
    Rational expected(pow(BigInt(100), static_cast<unsigned>(n - 1)));
    for (PivotRule rule : {PivotRule::dantzig, PivotRule::bland,
                           PivotRule::greatest_improvement, PivotRule::least_entered}) {
      SolveResult r = solve(kleeMinty(n), rule, false, opts);
      REQUIRE(r.status == SolveStatus::optimal);
      CHECK(*r.objective == expected);
      CHECK(r.phase1Pivots == 0);
    }
  }
}
