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

#ifndef PIVOTLAB_GENERATORS_HPP
#define PIVOTLAB_GENERATORS_HPP

#include "pivotlab/lp.hpp"

namespace pivotlab {

/**
 * The classic distorted-cube family on which Dantzig's rule walks all 2^n
 * vertices from the all-slack basis:
 *
 *   maximize sum_{j=1..n} 10^(n-j) x_j
 *   s.t. for i = 1..n:  2 * sum_{j<i} 10^(i-j) x_j + x_i <= 100^(i-1)
 *        x >= 0
 *
 * n inequality constraints in n nonnegative variables; rhs >= 0, so no
 * phase-1 work is ever needed. Throws std::invalid_argument when n < 1.
 */
LinearProgram kleeMinty(int n);

}  // namespace pivotlab

#endif  // PIVOTLAB_GENERATORS_HPP
