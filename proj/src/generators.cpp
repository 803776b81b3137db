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

namespace pivotlab {

LinearProgram kleeMinty(int n) {
  if (n < 1) throw std::invalid_argument("klee-minty: n must be >= 1");
  using boost::multiprecision::pow;

  LinearProgram lp;
  lp.sense = Sense::maximize;
  for (int j = 1; j <= n; ++j) lp.addVariable("x" + std::to_string(j));

  for (int j = 1; j <= n; ++j)
    lp.objective.add(j - 1, Rational(pow(BigInt(10), static_cast<unsigned>(n - j))));

  for (int i = 1; i <= n; ++i) {
    Constraint c;
    c.name = "r" + std::to_string(i);
    for (int j = 1; j < i; ++j)
      c.expr.add(j - 1, Rational(2 * pow(BigInt(10), static_cast<unsigned>(i - j))));
    c.expr.add(i - 1, Rational(1));
    c.relation = Relation::le;
    c.rhs = Rational(pow(BigInt(100), static_cast<unsigned>(i - 1)));
    lp.addConstraint(std::move(c));
  }
  return lp;
}

}  // namespace pivotlab
