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

#include "pivotlab/rational.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace pivotlab;
using pivotlab::testing::Rng;
using pivotlab::testing::randomRational;

namespace {

bool canonical(const Rational& r) {
  if (r.den().sign() <= 0) return false;
  if (r.isZero()) return r.den() == 1;
  return gcd(boost::multiprecision::abs(r.num()), r.den()) == 1;
}

}  // namespace

TEST_CASE("literal parsing") {
  Rational a = Rational::fromString("262145/524288");
  CHECK(a.num() == 262145);
  CHECK(a.den() == 524288);

  CHECK(Rational::fromString("0/5") == Rational(0));
  CHECK(Rational::fromString("0/5").den() == 1);
  CHECK(Rational::fromString("-4/6") == Rational(BigInt(-2), BigInt(3)));
  CHECK(Rational::fromString("7") == Rational(7));
  CHECK(Rational::fromString("-7") == Rational(-7));
  CHECK(Rational::fromString("007") == Rational(7));

  CHECK_THROWS_AS(Rational::fromString(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("-"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("+1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("1/0"), std::domain_error);
}

TEST_CASE("exact arithmetic on the study constants") {
  Rational alpha = Rational::fromString("262145/524288");
  Rational beta = Rational::fromString("262143/524288");
  Rational gamma = Rational::fromString("1/262144");
  CHECK(alpha + beta == Rational(1));
  CHECK(alpha - beta == gamma);

  Rational alpha2 = Rational::fromString("15690529805/31381059609");
  Rational beta2 = Rational::fromString("15690529804/31381059609");
  Rational gamma2 = Rational::fromString("1/31381059609");
  CHECK(alpha2 + beta2 == Rational(1));
  CHECK(alpha2 - beta2 == gamma2);
}

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(5) * Rational(0) == Rational(0));
  CHECK((Rational(5) * Rational(0)).den() == 1);
  CHECK(-Rational(BigInt(2), BigInt(4)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(2)).abs() == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(7)).reciprocal() == Rational(BigInt(7), BigInt(3)));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("comparison is the exact total order") {
  CHECK(Rational::fromString("1/262144") > Rational(0));
  CHECK(Rational::fromString("262143/524288") < Rational::fromString("262145/524288"));
  // Box supremum of the second study system: 3 + 4/31381059609 < 8.
  Rational sup = Rational(3) + Rational(4) * Rational::fromString("1/31381059609");
  CHECK(sup == Rational::fromString("94143178831/31381059609"));
  CHECK(sup < Rational(8));

  Rng rng(20260810);
  for (int i = 0; i < 300; ++i) {
    Rational a = randomRational(rng, 20, 9);
    Rational b = randomRational(rng, 20, 9);
    Rational c = randomRational(rng, 20, 9);
    // antisymmetry
    if (a < b) CHECK_FALSE(b < a);
    if (a == b) {
      CHECK_FALSE(a < b);
      CHECK_FALSE(b < a);
    }
    // transitivity
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

TEST_CASE("round-trips and canonical form") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = randomRational(rng, 40, 17);
    Rational b = randomRational(rng, 40, 17);
    CHECK((a + b) - b == a);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.isZero()) CHECK(canonical(a / b));
    CHECK(Rational::fromString(a.str()) == a);
  }
}

TEST_CASE("serialization format") {
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(BigInt(-4), BigInt(6)).str() == "-2/3");
  CHECK(Rational::fromString("262145/524288").str() == "262145/524288");
}
