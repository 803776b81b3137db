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

#ifndef PIVOTLAB_SIMPLEX_HPP
#define PIVOTLAB_SIMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pivotlab/lp.hpp"
#include "pivotlab/pivot_rules.hpp"

namespace pivotlab {

namespace detail {
struct Engine;
}

class SimplexState;
struct Phase1Result;
struct SolveResult;
struct SolveOptions;

enum class SolveStatus { optimal, infeasible, unbounded, iteration_limit };
std::string_view solveStatusName(SolveStatus s);

/// One basis exchange. Column ids beyond the standard form's column count
/// denote phase-1 artificials ("art(k)" for row k).
struct PivotEvent {
  long long iteration;  // 1-based, continuous across both phases
  int phase;            // 1 or 2
  int entering;
  int leaving;
  Rational objectiveAfter;  // phase 1: auxiliary objective; phase 2: original-sense objective
  bool degenerate;          // objective unchanged by this pivot
};

struct SolveOptions {
  /// Per-phase pivot cap; 0 means the default 10 * 2^columns (clamped).
  unsigned long long maxPivots = 0;
  /// Re-derive Ax = b, feasibility, monotonicity and rule postconditions
  /// after every pivot. Meant for tests; throws std::logic_error on breakage.
  bool validate = false;
  TieBreak tieBreak = TieBreak::cost;
};

/**
 * A primal-feasible dictionary: basis, basis-inverse-applied tableau, and
 * reduced costs, all exact. Produced by phase1 and advanced by phase2.
 *
 * The basic columns always form an identity submatrix and the rhs column is
 * componentwise nonnegative. Internally the objective is kept in maximize
 * form; objective() reports the original-sense value including any
 * lower-bound shift.
 */
class SimplexState {
 public:
  const StandardFormLP& standardForm() const { return *sf_; }
  int rowCount() const { return static_cast<int>(basis_.size()); }
  int columnCount() const { return cols_; }

  const Rational& coefficient(int row, int col) const {
    return tab_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(col)];
  }
  const Rational& rhs(int row) const { return rhs_[static_cast<std::size_t>(row)]; }
  const Rational& reducedCost(int col) const { return rc_[static_cast<std::size_t>(col)]; }
  const std::vector<int>& basis() const { return basis_; }
  bool isBasic(int col) const { return basicFlag_[static_cast<std::size_t>(col)] != 0; }

  /// Tableau row -> row index of the standard form (phase 1 may drop
  /// redundant rows).
  const std::vector<int>& rowOrigin() const { return rowOrigin_; }

  long long iteration() const { return iterations_; }

  /// Current basic solution over all standard-form columns.
  std::vector<Rational> columnValues() const;
  /// Current basic solution back-mapped onto the original variables.
  std::map<std::string, Rational> solution() const;
  /// Original-sense objective value at the current basic solution.
  Rational objective() const;

  /// Column display name; artificial ids render as "art(k)".
  std::string columnName(int col) const;

 private:
  friend struct detail::Engine;
  friend Phase1Result phase1(const StandardFormLP&, const SolveOptions&);
  friend SolveResult phase2(SimplexState&, PivotRule, const SolveOptions&);

  const StandardFormLP* sf_ = nullptr;
  int cols_ = 0;
  std::vector<Rational> tab_;  // rowCount x cols_, row-major
  std::vector<Rational> rhs_;
  std::vector<Rational> rc_;
  Rational objInternal_;
  std::vector<int> basis_;
  std::vector<char> basicFlag_;
  std::vector<int> rowOrigin_;
  long long iterations_ = 0;
};

enum class Phase1Status { feasible, infeasible, iteration_limit };

struct Phase1Result {
  Phase1Status status;
  std::optional<SimplexState> state;  // feasible
  std::vector<Rational> farkas;       // infeasible: one multiplier per standard-form row
  std::vector<PivotEvent> trace;
  long long pivots = 0;
};

/**
 * Finds a basic feasible solution via artificial variables, or proves
 * infeasibility. On infeasibility the returned Farkas multipliers are
 * engine-verified before being handed out. Ready-made identity columns are
 * used directly, so systems with a full slack basis take zero pivots.
 *
 * The referenced StandardFormLP must outlive the returned state.
 */
Phase1Result phase1(const StandardFormLP& sf, const SolveOptions& opts = {});

struct SolveResult {
  SolveStatus status;
  std::optional<Rational> objective;         // original sense
  std::map<std::string, Rational> solution;  // original variables (optimal)
  std::vector<Rational> farkas;              // infeasible
  std::map<std::string, Rational> ray;       // unbounded: improving original-variable direction
  std::vector<PivotEvent> trace;
  long long phase1Pivots = 0;
  long long phase2Pivots = 0;
  OccurrenceRecord occurrences;  // phase-2 basis entries
  StandardFormLP standardForm;   // the form that was solved; farkas indexes its rows
};

/// Optimizes from a primal-feasible state under the given entering rule.
SolveResult phase2(SimplexState& state, PivotRule rule, const SolveOptions& opts = {});

/// toStandardForm -> phase1 -> phase2; the trace spans both phases with
/// each event tagged by phase.
SolveResult solve(const LinearProgram& lp, PivotRule rule, bool unitBox,
                  const SolveOptions& opts = {});

/**
 * Exact Farkas check: y certifies {Ax = b, x >= 0} infeasible iff
 * y'A <= 0 componentwise and y'b > 0. Throws std::invalid_argument when y's
 * length differs from the row count.
 */
bool verifyFarkas(const StandardFormLP& sf, const std::vector<Rational>& y);

/// Leaving row: argmin rhs_i / column_i over rows with column_i > 0, ties by
/// smallest basic-variable id; nullopt when the column is nonpositive
/// (unbounded direction).
std::optional<int> ratioTestRow(const SimplexState& state, int enteringColumn);

/// Same test, reported as the leaving variable id.
std::optional<int> ratioTestLeaving(const SimplexState& state, int enteringColumn);

/// Line-oriented trace export: one JSON object per pivot event with fields
/// iteration, phase, entering, leaving, objective (exact literal), degenerate.
std::string traceJsonLines(const std::vector<PivotEvent>& trace, const StandardFormLP& sf);

}  // namespace pivotlab

#endif  // PIVOTLAB_SIMPLEX_HPP
