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

#ifndef PIVOTLAB_FIXTURES_HPP
#define PIVOTLAB_FIXTURES_HPP

#include <string_view>
#include <vector>

#include "pivotlab/lp.hpp"

namespace pivotlab {

/**
 * Embedded study programs.
 *
 * lp1: 12 variables, 6 equality constraints, with
 *   alpha = 262145/524288, beta = 262143/524288, gamma = 1/262144.
 * The constants satisfy alpha + beta = 1 and alpha - beta = gamma exactly;
 * construction asserts both (std::logic_error on breakage).
 *
 * lp2_prefix8: the first 8 equality constraints of a 36-variable system with
 *   alpha = 15690529805/31381059609, beta = 15690529804/31381059609,
 *   gamma = 1/31381059609,
 * a zero objective, and all 36 variables declared (several are unused in
 * these rows, deliberately). The same constant identities are asserted.
 *
 * Accepted names: "lp1", "lp2_prefix8" (also "lp2-prefix8"). Throws
 * std::invalid_argument on anything else.
 */
LinearProgram builtinLp(std::string_view name);

/// Names builtinLp understands, in canonical spelling.
std::vector<std::string_view> builtinLpNames();

/// Canonical text of the lp1 fixture; serializeLp(builtinLp("lp1")) equals this.
std::string_view lp1Text();

/// Canonical text of the lp2_prefix8 fixture.
std::string_view lp2Prefix8Text();

}  // namespace pivotlab

#endif  // PIVOTLAB_FIXTURES_HPP
