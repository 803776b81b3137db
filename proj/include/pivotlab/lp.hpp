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

#ifndef PIVOTLAB_LP_HPP
#define PIVOTLAB_LP_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pivotlab/rational.hpp"

namespace pivotlab {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Variable {
  int id = -1;
  std::string name;
  Rational lower;  // default 0
  std::optional<Rational> upper;
};

/// Sparse linear form over variable ids. Zero coefficients are never stored;
/// iteration order is ascending id, so rendering is deterministic.
class LinearExpression {
 public:
  /// Accumulates `coeff` onto the term for `var`; erases the term when the
  /// sum cancels to zero.
  void add(int var, const Rational& coeff) {
    if (coeff.isZero()) return;
    auto [it, inserted] = terms_.emplace(var, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Rational coeff(int var) const {
    auto it = terms_.find(var);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool has(int var) const { return terms_.count(var) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  friend bool operator==(const LinearExpression& a, const LinearExpression& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Rational> terms_;
};

/// Exact value of the form at a point given as a dense vector indexed by id.
Rational evaluate(const LinearExpression& e, const std::vector<Rational>& point);

enum class Relation { eq, le, ge };
enum class Sense { maximize, minimize };

std::string_view relationText(Relation r);

struct Constraint {
  std::string name;
  LinearExpression expr;
  Relation relation = Relation::eq;
  Rational rhs;

  /// Empty left-hand side: the constraint is decided by its rhs alone.
  bool isTrivial() const { return expr.empty(); }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class LinearProgram {
 public:
  Sense sense = Sense::maximize;
  LinearExpression objective;

  /// Declares a variable; ids are assigned in declaration order.
  /// Throws std::invalid_argument on a duplicate name.
  int addVariable(const std::string& name, Rational lower = Rational(0),
                  std::optional<Rational> upper = std::nullopt);

  /// Throws std::invalid_argument on a duplicate constraint name.
  void addConstraint(Constraint c);

  /// Rewrites a variable's bounds. Throws std::domain_error when lower > upper.
  void setBounds(int id, Rational lower, std::optional<Rational> upper);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Variable& variable(int id) const { return variables_.at(id); }
  std::optional<int> findVariable(const std::string& name) const;

  /**
   * Structural checks: every referenced variable is declared and every bound
   * pair is consistent. Throws std::domain_error / std::invalid_argument on
   * violations; returns human-readable flags for trivially decidable
   * (empty-left-hand-side) constraints.
   */
  std::vector<std::string> validate() const;

  friend bool operator==(const LinearProgram& a, const LinearProgram& b);

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::map<std::string, int> variablesByName_;
};

/**
 * Parses the line-oriented LP text format ('#' starts a comment):
 *
 *   var <name> [>= <rational>] [<= <rational>]
 *   max|min <rational> <name> [ (+|-) <rational> <name> ]*
 *   <label>: <rational> <name> [ (+|-) <rational> <name> ]* (=|<=|>=) <rational>
 *
 * A coefficient of 1 may be omitted; a lone literal 0 denotes the empty
 * expression. Variables must be declared before use. Throws ParseError with
 * the offending position.
 */
LinearProgram parseLp(std::string_view text);

/// Deterministic canonical text; parseLp(serializeLp(lp)) equals lp.
std::string serializeLp(const LinearProgram& lp);

/// "x1 + 2 x2 - 1/2 x3" (or "0" when empty), terms ascending by id.
std::string renderLinearExpression(const LinearExpression& e,
                                   const std::vector<Variable>& vars);

/**
 * All-equality form with nonnegative variables only.
 *
 * Columns 0..numStructural-1 are the original variables shifted down by their
 * lower bounds (x_original = column + lowerOffsets[id]); the remaining
 * columns are slacks. The original objective value equals
 * objective-dot-columns + objectiveOffset.
 */
struct StandardFormLP {
  enum class ColumnKind { structural, slack, boundSlack };
  struct Column {
    ColumnKind kind;
    int origin;  // structural/boundSlack: variable id; slack: constraint index
    std::string name;
  };

  Sense sense = Sense::maximize;
  std::vector<Column> columns;
  std::vector<LinearExpression> rows;  // equality rows over column ids
  std::vector<Rational> rhs;
  std::vector<std::string> rowNames;
  LinearExpression objective;  // over columns
  Rational objectiveOffset;
  std::vector<Rational> lowerOffsets;  // per original variable id
  int numStructural = 0;

  int numRows() const { return static_cast<int>(rows.size()); }
  int numColumns() const { return static_cast<int>(columns.size()); }

  /// Back-maps a full column-space point onto the original variables.
  std::map<std::string, Rational> mapSolution(const std::vector<Rational>& columnValues) const;
};

/**
 * Inequalities receive slack variables; declared upper bounds become rows
 * x + s = upper. With `unitBox` set, every variable additionally gets such a
 * row, defaulting the upper bound to 1 when none is declared. Throws
 * std::domain_error on inconsistent bounds.
 */
StandardFormLP toStandardForm(const LinearProgram& lp, bool unitBox);

}  // namespace pivotlab

#endif  // PIVOTLAB_LP_HPP
