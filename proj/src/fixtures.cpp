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

#include "pivotlab/fixtures.hpp"

#include <stdexcept>

namespace pivotlab {

namespace {

constexpr std::string_view kLp1Text =
    R"(var x1
var x2
var x3
var x4
var x5
var x6
var x7
var x8
var x9
var x10
var x11
var x12
max -1024 x3 - 1024 x7 + 65536 x9 - 1024 x10 + 256 x11 + 69888 x12
c1: 262145/524288 x1 + x2 - 262143/524288 x3 - 262143/524288 x5 - 262143/524288 x7 - 262143/524288 x10 = 1
c2: -1 x2 + x3 + x4 = 1
c3: -262143/524288 x1 - 262143/524288 x3 + 262145/524288 x5 + x6 - 262143/524288 x7 - 262143/524288 x10 = 1
c4: -1 x6 + x7 + x8 = 1
c5: x9 + x10 - x11 = 1
c6: -1/262144 x1 - 1/262144 x3 - 1/262144 x5 - 1/262144 x7 - 1/262144 x10 + x11 + x12 = 1
)";

constexpr std::string_view kLp2Prefix8Text =
    R"(var x1
var x2
var x3
var x4
var x5
var x6
var x7
var x8
var x9
var x10
var x11
var x12
var x13
var x14
var x15
var x16
var x17
var x18
var x19
var x20
var x21
var x22
var x23
var x24
var x25
var x26
var x27
var x28
var x29
var x30
var x31
var x32
var x33
var x34
var x35
var x36
max 0
c1: 15690529805/31381059609 x1 + x2 - 15690529804/31381059609 x5 - 15690529804/31381059609 x13 = 1
c2: -1 x2 + x3 + x4 = 1
c3: -1 x3 + x5 + x6 - x11 - x15 - x19 - x21 - x29 - x33 = 1
c4: -1 x4 + x7 + x8 - x12 - x16 - x20 - x22 - x30 - x34 = 1
c5: -15690529804/31381059609 x6 + 15690529805/31381059609 x9 + x10 - 15690529804/31381059609 x17 = 1
c6: -1 x10 + x11 + x12 = 1
c7: -15690529804/31381059609 x1 - 15690529804/31381059609 x5 + 15690529805/31381059609 x13 + x14 = 1
c8: -1 x14 + x15 + x16 = 1
)";

void assertConstantIdentities(std::string_view alpha, std::string_view beta,
                              std::string_view gamma) {
  Rational a = Rational::fromString(alpha);
  Rational b = Rational::fromString(beta);
  Rational g = Rational::fromString(gamma);
  if (!(a + b == Rational(1)) || !(a - b == g))
    throw std::logic_error("fixture constants violate alpha+beta=1 or alpha-beta=gamma");
}

LinearProgram loadLp1() {
  assertConstantIdentities("262145/524288", "262143/524288", "1/262144");
  return parseLp(kLp1Text);
}

LinearProgram loadLp2Prefix8() {
  assertConstantIdentities("15690529805/31381059609", "15690529804/31381059609",
                           "1/31381059609");
  return parseLp(kLp2Prefix8Text);
}

}  // namespace

LinearProgram builtinLp(std::string_view name) {
  if (name == "lp1") {
    static const LinearProgram lp1 = loadLp1();
    return lp1;
  }
  if (name == "lp2_prefix8" || name == "lp2-prefix8") {
    static const LinearProgram lp2 = loadLp2Prefix8();
    return lp2;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> builtinLpNames() { return {"lp1", "lp2_prefix8"}; }

std::string_view lp1Text() { return kLp1Text; }

std::string_view lp2Prefix8Text() { return kLp2Prefix8Text; }

}  // namespace pivotlab
