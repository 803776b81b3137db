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

#ifndef PIVOTLAB_CERTIFICATES_HPP
#define PIVOTLAB_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pivotlab/lp.hpp"
#include "pivotlab/simplex.hpp"

namespace pivotlab {

/// An exact linear combination of equality constraints.
struct AggregatedRow {
  LinearExpression coefficients;  // over the program's variable ids, no zeros
  Rational rhs;
};

/// "x4 + x8 + x9 + x12 = 6" in LP-format text.
std::string renderAggregatedRow(const AggregatedRow& row, const LinearProgram& lp);

/**
 * coefficients = sum multipliers[i] * row_i, rhs = sum multipliers[i] * rhs_i,
 * all exact; coefficients that cancel to zero are elided. Throws
 * std::invalid_argument when the multiplier count does not match or when a
 * non-equality constraint is present (aggregation is equalities-only here).
 */
AggregatedRow aggregate(const LinearProgram& lp, const std::vector<Rational>& multipliers);

struct VarBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};
/// Per-variable interval, indexed by variable id.
using BoxBounds = std::vector<VarBounds>;

/// [lo, hi] on every variable of the program.
BoxBounds uniformBox(const LinearProgram& lp, Rational lo, Rational hi);

/// Exact max of the row's left side over the box: positive coefficients sit
/// at their upper bounds, negative ones at their lower bounds. nullopt when
/// some needed bound is missing (the supremum is unbounded).
std::optional<Rational> tryBoxSupremum(const AggregatedRow& row, const BoxBounds& bounds);
std::optional<Rational> tryBoxInfimum(const AggregatedRow& row, const BoxBounds& bounds);

/// As above but throwing std::domain_error on an unbounded side.
Rational boxSupremum(const AggregatedRow& row, const BoxBounds& bounds);

enum class CertificateVerdict { proves_infeasible, inconclusive };
std::string_view certificateVerdictName(CertificateVerdict v);

/**
 * Aggregation certificate: the combined row cannot be satisfied inside the
 * box when its supremum falls short of the combined right-hand side (or,
 * symmetrically, its infimum exceeds it).
 */
struct BoxInfeasibilityCertificate {
  std::vector<Rational> multipliers;
  AggregatedRow aggregated;
  std::optional<Rational> supremum;  // absent when unbounded above
  std::optional<Rational> infimum;   // absent when unbounded below
  CertificateVerdict verdict;
};

/// aggregate + box bounds; verdict is proves_infeasible iff supremum < rhs or
/// infimum > rhs, decided exactly.
BoxInfeasibilityCertificate checkCertificate(const LinearProgram& lp,
                                             const std::vector<Rational>& multipliers,
                                             const BoxBounds& bounds);

/**
 * Automates the hand derivation: runs phase 1 on the box-constrained system
 * and, when it is infeasible, maps the equality-row Farkas multipliers into a
 * BoxInfeasibilityCertificate, re-verified through checkCertificate before
 * being returned. nullopt when the boxed system is feasible. The returned
 * multipliers are whatever phase 1 found first, not minimal ones.
 * Throws std::runtime_error if the pivot cap is hit.
 */
std::optional<BoxInfeasibilityCertificate> searchCertificate(const LinearProgram& lp,
                                                             const BoxBounds& bounds,
                                                             const SolveOptions& opts = {});

}  // namespace pivotlab

#endif  // PIVOTLAB_CERTIFICATES_HPP
