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

#include "pivotlab/lp.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace pivotlab {

Rational evaluate(const LinearExpression& e, const std::vector<Rational>& point) {
  Rational sum;
  for (const auto& [var, coeff] : e.terms()) {
    sum += coeff * point.at(static_cast<std::size_t>(var));
  }
  return sum;
}

std::string_view relationText(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
  }
  return "=";
}

int LinearProgram::addVariable(const std::string& name, Rational lower,
                               std::optional<Rational> upper) {
  if (variablesByName_.count(name))
    throw std::invalid_argument("duplicate variable '" + name + "'");
  if (upper && *upper < lower)
    throw std::domain_error("inconsistent bounds on '" + name + "'");
  int id = static_cast<int>(variables_.size());
  variables_.push_back(Variable{id, name, std::move(lower), std::move(upper)});
  variablesByName_.emplace(name, id);
  return id;
}

void LinearProgram::addConstraint(Constraint c) {
  for (const auto& other : constraints_)
    if (other.name == c.name)
      throw std::invalid_argument("duplicate constraint '" + c.name + "'");
  constraints_.push_back(std::move(c));
}

void LinearProgram::setBounds(int id, Rational lower, std::optional<Rational> upper) {
  Variable& v = variables_.at(static_cast<std::size_t>(id));
  if (upper && *upper < lower)
    throw std::domain_error("inconsistent bounds on '" + v.name + "'");
  v.lower = std::move(lower);
  v.upper = std::move(upper);
}

std::optional<int> LinearProgram::findVariable(const std::string& name) const {
  auto it = variablesByName_.find(name);
  if (it == variablesByName_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> LinearProgram::validate() const {
  int n = static_cast<int>(variables_.size());
  auto checkExpr = [&](const LinearExpression& e, const std::string& where) {
    for (const auto& [var, coeff] : e.terms()) {
      (void)coeff;
      if (var < 0 || var >= n)
        throw std::invalid_argument("undeclared variable id in " + where);
    }
  };
  checkExpr(objective, "objective");
  std::vector<std::string> flags;
  for (const auto& c : constraints_) {
    checkExpr(c.expr, "constraint '" + c.name + "'");
    if (c.isTrivial())
      flags.push_back("constraint '" + c.name + "' has an empty left-hand side");
  }
  for (const auto& v : variables_) {
    if (v.upper && *v.upper < v.lower)
      throw std::domain_error("inconsistent bounds on '" + v.name + "'");
  }
  return flags;
}

bool operator==(const LinearProgram& a, const LinearProgram& b) {
  if (a.sense != b.sense || !(a.objective == b.objective)) return false;
  if (a.variables_.size() != b.variables_.size()) return false;
  for (std::size_t i = 0; i < a.variables_.size(); ++i) {
    const Variable& x = a.variables_[i];
    const Variable& y = b.variables_[i];
    if (x.name != y.name || !(x.lower == y.lower) || x.upper != y.upper) return false;
  }
  return a.constraints_ == b.constraints_;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenizeLines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int lineNo = 1;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t end = text.find('\n', i);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(i, end - i);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> toks;
    std::size_t j = 0;
    while (j < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
        continue;
      }
      std::size_t start = j;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back(Token{std::string(line.substr(start, j - start)), lineNo,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    i = end + 1;
    ++lineNo;
  }
  return lines;
}

bool literalShaped(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t d0 = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == d0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  std::size_t d1 = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i > d1 && i == s.size();
}

bool isRelationToken(const std::string& s) { return s == "=" || s == "<=" || s == ">="; }

bool isValidName(const std::string& s) {
  if (s.empty() || literalShaped(s) || isRelationToken(s)) return false;
  if (s == "+" || s == "-" || s == "var" || s == "max" || s == "min") return false;
  return s.find(':') == std::string::npos;
}

Rational parseLiteral(const Token& t) {
  try {
    return Rational::fromString(t.text);
  } catch (const std::domain_error&) {
    throw ParseError("zero denominator in '" + t.text + "'", t.line, t.column);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + t.text + "'", t.line, t.column);
  }
}

// Parses a term list starting at toks[i]. When stopAtRelation, stops in front
// of the first relation token; otherwise requires the list to consume every
// remaining token. A lone zero literal denotes the empty expression.
LinearExpression parseExpression(const std::vector<Token>& toks, std::size_t& i,
                                 const LinearProgram& lp, bool stopAtRelation) {
  LinearExpression expr;
  const Token& at = toks.at(i > 0 ? i - 1 : 0);
  if (i >= toks.size() || (stopAtRelation && isRelationToken(toks[i].text)))
    throw ParseError("empty expression", at.line, at.column);

  bool first = true;
  while (i < toks.size()) {
    if (stopAtRelation && isRelationToken(toks[i].text)) break;
    int sign = 1;
    if (!first) {
      if (toks[i].text == "+") {
        ++i;
      } else if (toks[i].text == "-") {
        sign = -1;
        ++i;
      } else {
        throw ParseError("expected '+' or '-', found '" + toks[i].text + "'", toks[i].line,
                         toks[i].column);
      }
      if (i >= toks.size())
        throw ParseError("dangling sign at end of expression", toks[i - 1].line,
                         toks[i - 1].column);
    }
    Rational coeff(1);
    bool haveLiteral = false;
    if (literalShaped(toks[i].text)) {
      coeff = parseLiteral(toks[i]);
      haveLiteral = true;
      ++i;
    }
    bool atEnd = i >= toks.size() || (stopAtRelation && isRelationToken(toks[i].text));
    if (atEnd) {
      if (first && haveLiteral && coeff.isZero()) return expr;  // "max 0", "c: 0 = 0"
      const Token& prev = toks[i - 1];
      throw ParseError("expected variable name", prev.line, prev.column);
    }
    if (!isValidName(toks[i].text))
      throw ParseError("expected variable name, found '" + toks[i].text + "'", toks[i].line,
                       toks[i].column);
    auto id = lp.findVariable(toks[i].text);
    if (!id)
      throw ParseError("undeclared variable '" + toks[i].text + "'", toks[i].line,
                       toks[i].column);
    expr.add(*id, sign > 0 ? coeff : -coeff);
    ++i;
    first = false;
  }
  return expr;
}

}  // namespace

LinearProgram parseLp(std::string_view text) {
  LinearProgram lp;
  bool haveObjective = false;

  for (const auto& toks : tokenizeLines(text)) {
    const Token& t0 = toks[0];
    if (t0.text == "var") {
      if (toks.size() < 2)
        throw ParseError("missing variable name", t0.line, t0.column);
      const Token& nameTok = toks[1];
      if (!isValidName(nameTok.text))
        throw ParseError("invalid variable name '" + nameTok.text + "'", nameTok.line,
                         nameTok.column);
      if (lp.findVariable(nameTok.text))
        throw ParseError("duplicate variable '" + nameTok.text + "'", nameTok.line,
                         nameTok.column);
      Rational lower(0);
      std::optional<Rational> upper;
      std::size_t i = 2;
      if (i < toks.size() && toks[i].text == ">=") {
        if (i + 1 >= toks.size())
          throw ParseError("missing bound value", toks[i].line, toks[i].column);
        lower = parseLiteral(toks[i + 1]);
        i += 2;
      }
      if (i < toks.size() && toks[i].text == "<=") {
        if (i + 1 >= toks.size())
          throw ParseError("missing bound value", toks[i].line, toks[i].column);
        upper = parseLiteral(toks[i + 1]);
        i += 2;
      }
      if (i != toks.size())
        throw ParseError("unexpected token '" + toks[i].text + "'", toks[i].line,
                         toks[i].column);
      if (upper && *upper < lower)
        throw ParseError("inconsistent bounds on '" + nameTok.text + "'", nameTok.line,
                         nameTok.column);
      lp.addVariable(nameTok.text, std::move(lower), std::move(upper));
    } else if (t0.text == "max" || t0.text == "min") {
      if (haveObjective) throw ParseError("duplicate objective line", t0.line, t0.column);
      haveObjective = true;
      lp.sense = t0.text == "max" ? Sense::maximize : Sense::minimize;
      std::size_t i = 1;
      lp.objective = parseExpression(toks, i, lp, /*stopAtRelation=*/false);
    } else if (t0.text.size() > 1 && t0.text.back() == ':') {
      std::string label = t0.text.substr(0, t0.text.size() - 1);
      if (label.find(':') != std::string::npos)
        throw ParseError("invalid constraint label '" + label + "'", t0.line, t0.column);
      std::size_t i = 1;
      LinearExpression expr = parseExpression(toks, i, lp, /*stopAtRelation=*/true);
      if (i >= toks.size())
        throw ParseError("missing relation in constraint '" + label + "'", t0.line, t0.column);
      const std::string& rel = toks[i].text;
      Relation relation = rel == "=" ? Relation::eq : rel == "<=" ? Relation::le : Relation::ge;
      ++i;
      if (i >= toks.size())
        throw ParseError("missing right-hand side in constraint '" + label + "'", t0.line,
                         t0.column);
      Rational rhs = parseLiteral(toks[i]);
      ++i;
      if (i != toks.size())
        throw ParseError("unexpected token '" + toks[i].text + "'", toks[i].line,
                         toks[i].column);
      for (const auto& c : lp.constraints())
        if (c.name == label)
          throw ParseError("duplicate constraint '" + label + "'", t0.line, t0.column);
      lp.addConstraint(Constraint{std::move(label), std::move(expr), relation, std::move(rhs)});
    } else {
      throw ParseError("unrecognized line start '" + t0.text + "'", t0.line, t0.column);
    }
  }

  if (lp.variables().empty()) throw ParseError("no variables declared", 1, 1);
  if (!haveObjective) throw ParseError("missing objective line", 1, 1);
  return lp;
}

std::string renderLinearExpression(const LinearExpression& e,
                                   const std::vector<Variable>& vars) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [var, coeff] : e.terms()) {
    const std::string& name = vars.at(static_cast<std::size_t>(var)).name;
    if (first) {
      if (coeff.isOne())
        out += name;
      else
        out += coeff.str() + " " + name;
      first = false;
    } else {
      Rational a = coeff.abs();
      out += coeff.sign() > 0 ? " + " : " - ";
      if (!a.isOne()) out += a.str() + " ";
      out += name;
    }
  }
  return out;
}

std::string serializeLp(const LinearProgram& lp) {
  lp.validate();
  std::string out;
  for (const auto& v : lp.variables()) {
    out += "var " + v.name;
    if (!v.lower.isZero()) out += " >= " + v.lower.str();
    if (v.upper) out += " <= " + v.upper->str();
    out += '\n';
  }
  out += lp.sense == Sense::maximize ? "max " : "min ";
  out += renderLinearExpression(lp.objective, lp.variables());
  out += '\n';
  for (const auto& c : lp.constraints()) {
    out += c.name + ": " + renderLinearExpression(c.expr, lp.variables()) + " " +
           std::string(relationText(c.relation)) + " " + c.rhs.str() + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard form
// ---------------------------------------------------------------------------

std::map<std::string, Rational> StandardFormLP::mapSolution(
    const std::vector<Rational>& columnValues) const {
  std::map<std::string, Rational> out;
  for (int c = 0; c < numStructural; ++c) {
    const Column& col = columns[static_cast<std::size_t>(c)];
    out[col.name] =
        columnValues.at(static_cast<std::size_t>(c)) + lowerOffsets.at(static_cast<std::size_t>(col.origin));
  }
  return out;
}

StandardFormLP toStandardForm(const LinearProgram& lp, bool unitBox) {
  lp.validate();
  StandardFormLP sf;
  sf.sense = lp.sense;
  sf.numStructural = static_cast<int>(lp.variables().size());

  for (const auto& v : lp.variables()) {
    sf.columns.push_back({StandardFormLP::ColumnKind::structural, v.id, v.name});
    sf.lowerOffsets.push_back(v.lower);
  }

  // Objective over shifted variables; the constant part moves into the offset.
  for (const auto& [var, coeff] : lp.objective.terms()) {
    sf.objective.add(var, coeff);
    sf.objectiveOffset += coeff * lp.variable(var).lower;
  }

  // Constraint rows; inequalities get slack columns.
  for (std::size_t ci = 0; ci < lp.constraints().size(); ++ci) {
    const Constraint& c = lp.constraints()[ci];
    LinearExpression row;
    Rational rhs = c.rhs;
    for (const auto& [var, coeff] : c.expr.terms()) {
      row.add(var, coeff);
      rhs -= coeff * lp.variable(var).lower;
    }
    if (c.relation != Relation::eq) {
      int slack = static_cast<int>(sf.columns.size());
      sf.columns.push_back(
          {StandardFormLP::ColumnKind::slack, static_cast<int>(ci), "slack(" + c.name + ")"});
      row.add(slack, c.relation == Relation::le ? Rational(1) : Rational(-1));
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
    sf.rowNames.push_back(c.name);
  }

  // Upper bounds become rows "x + s = upper - lower"; with the box flag every
  // variable gets one, defaulting the upper bound to 1.
  for (const auto& v : lp.variables()) {
    std::optional<Rational> upper = v.upper;
    if (!upper && unitBox) upper = Rational(1);
    if (!upper) continue;
    Rational shifted = *upper - v.lower;
    if (shifted.sign() < 0)
      throw std::domain_error("inconsistent bounds on '" + v.name + "'");
    int slack = static_cast<int>(sf.columns.size());
    sf.columns.push_back({StandardFormLP::ColumnKind::boundSlack, v.id, "bound(" + v.name + ")"});
    LinearExpression row;
    row.add(v.id, Rational(1));
    row.add(slack, Rational(1));
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(shifted));
    sf.rowNames.push_back("bound(" + v.name + ")");
  }

  return sf;
}

}  // namespace pivotlab
