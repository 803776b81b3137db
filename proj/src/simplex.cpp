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

#include "pivotlab/simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace pivotlab {

std::string_view solveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::iteration_limit: return "iteration_limit";
  }
  return "?";
}

namespace {

std::string columnDisplayName(const StandardFormLP& sf, int col) {
  if (col < sf.numColumns()) return sf.columns[static_cast<std::size_t>(col)].name;
  return "art(" + std::to_string(col - sf.numColumns()) + ")";
}

unsigned long long effectiveCap(const SolveOptions& opts, int columns) {
  if (opts.maxPivots != 0) return opts.maxPivots;
  if (columns >= 60) return 1ull << 63;
  return 10ull << columns;  // 10 * 2^columns
}

}  // namespace

std::vector<Rational> SimplexState::columnValues() const {
  std::vector<Rational> x(static_cast<std::size_t>(cols_));
  for (std::size_t r = 0; r < basis_.size(); ++r)
    x[static_cast<std::size_t>(basis_[r])] = rhs_[r];
  return x;
}

std::map<std::string, Rational> SimplexState::solution() const {
  return sf_->mapSolution(columnValues());
}

Rational SimplexState::objective() const {
  Rational v = sf_->sense == Sense::maximize ? objInternal_ : -objInternal_;
  return v + sf_->objectiveOffset;
}

std::string SimplexState::columnName(int col) const { return columnDisplayName(*sf_, col); }

namespace detail {

// All tableau mutation lives here; phase 1 runs with artificial columns
// appended after the standard-form columns, phase 2 without them.
struct Engine {
  Engine(SimplexState& state, const SolveOptions& options, std::vector<PivotEvent>& sink)
      : s(state), opts(options), trace(sink) {}

  SimplexState& s;
  const SolveOptions& opts;
  std::vector<PivotEvent>& trace;
  OccurrenceRecord* occ = nullptr;  // phase-2 entries only
  int candidateLimit = 0;           // artificials are never candidates

  // Pristine rows for validate-mode residual checks. Phase 1 supplies its
  // flipped working system here; phase 2 checks against the standard form.
  std::vector<LinearExpression> checkRows;
  std::vector<Rational> checkRhs;

  enum class End { optimal, unbounded, limit };
  int unboundedColumn = -1;

  int rows() const { return s.rowCount(); }
  int cols() const { return s.cols_; }
  Rational& at(int r, int c) {
    return s.tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(s.cols_) +
                  static_cast<std::size_t>(c)];
  }

  std::vector<int> sortedBasis() const {
    std::vector<int> b = s.basis_;
    std::sort(b.begin(), b.end());
    return b;
  }

  std::optional<int> ratioRow(int col) const {
    std::optional<int> best;
    Rational bestRatio;
    for (int r = 0; r < rows(); ++r) {
      const Rational& a = s.coefficient(r, col);
      if (a.sign() <= 0) continue;
      Rational ratio = s.rhs_[static_cast<std::size_t>(r)] / a;
      if (!best || ratio < bestRatio ||
          (ratio == bestRatio && s.basis_[static_cast<std::size_t>(r)] <
                                     s.basis_[static_cast<std::size_t>(*best)])) {
        best = r;
        bestRatio = std::move(ratio);
      }
    }
    return best;
  }

  std::vector<Candidate> collectCandidates(bool withSteps) const {
    std::vector<Candidate> cs;
    for (int c = 0; c < candidateLimit; ++c) {
      if (s.basicFlag_[static_cast<std::size_t>(c)]) continue;
      const Rational& rc = s.rc_[static_cast<std::size_t>(c)];
      if (rc.sign() <= 0) continue;
      Candidate cand{c, rc, std::nullopt};
      if (withSteps) {
        if (auto r = ratioRow(c))
          cand.step = s.rhs_[static_cast<std::size_t>(*r)] / s.coefficient(*r, c);
      }
      cs.push_back(std::move(cand));
    }
    return cs;
  }

  void pivot(int row, int col) {
    Rational p = at(row, col);
    if (!p.isOne()) {
      for (int c = 0; c < cols(); ++c) {
        Rational& a = at(row, c);
        if (!a.isZero()) a /= p;
      }
      s.rhs_[static_cast<std::size_t>(row)] /= p;
    }
    for (int r = 0; r < rows(); ++r) {
      if (r == row) continue;
      Rational f = at(r, col);
      if (f.isZero()) continue;
      for (int c = 0; c < cols(); ++c) {
        const Rational& a = at(row, c);
        if (!a.isZero()) at(r, c) -= f * a;
      }
      s.rhs_[static_cast<std::size_t>(r)] -= f * s.rhs_[static_cast<std::size_t>(row)];
    }
    Rational f = s.rc_[static_cast<std::size_t>(col)];
    if (!f.isZero()) {
      for (int c = 0; c < cols(); ++c) {
        const Rational& a = at(row, c);
        if (!a.isZero()) s.rc_[static_cast<std::size_t>(c)] -= f * a;
      }
      s.objInternal_ += f * s.rhs_[static_cast<std::size_t>(row)];
    }
    s.basicFlag_[static_cast<std::size_t>(s.basis_[static_cast<std::size_t>(row)])] = 0;
    s.basicFlag_[static_cast<std::size_t>(col)] = 1;
    s.basis_[static_cast<std::size_t>(row)] = col;
  }

  void recordEvent(int phase, int entering, int leaving, const Rational& objBefore) {
    ++s.iterations_;
    Rational reported = phase == 1 ? s.objInternal_ : s.objective();
    trace.push_back(PivotEvent{s.iterations_, phase, entering, leaving, std::move(reported),
                               s.objInternal_ == objBefore});
  }

  void dropRow(int row) {
    auto rowStart = s.tab_.begin() + static_cast<std::ptrdiff_t>(row) * s.cols_;
    s.tab_.erase(rowStart, rowStart + s.cols_);
    s.rhs_.erase(s.rhs_.begin() + row);
    s.basicFlag_[static_cast<std::size_t>(s.basis_[static_cast<std::size_t>(row)])] = 0;
    s.basis_.erase(s.basis_.begin() + row);
    s.rowOrigin_.erase(s.rowOrigin_.begin() + row);
    if (!checkRows.empty()) {
      checkRows.erase(checkRows.begin() + row);
      checkRhs.erase(checkRhs.begin() + row);
    }
  }

  void validateAfterPivot(int phase, const Rational& objBefore) {
    if (s.objInternal_ < objBefore)
      throw std::logic_error("objective decreased across a pivot");
    for (const Rational& b : s.rhs_)
      if (b.sign() < 0) throw std::logic_error("primal feasibility lost: negative rhs");
    for (int r = 0; r < rows(); ++r)
      for (int i = 0; i < rows(); ++i) {
        const Rational& a = s.coefficient(i, s.basis_[static_cast<std::size_t>(r)]);
        if (!(a == (i == r ? Rational(1) : Rational(0))))
          throw std::logic_error("basic columns no longer form an identity");
      }
    std::vector<Rational> x = s.columnValues();
    if (phase == 1) {
      for (std::size_t r = 0; r < checkRows.size(); ++r)
        if (!(evaluate(checkRows[r], x) == checkRhs[r]))
          throw std::logic_error("nonzero residual against the phase-1 system");
    } else {
      const StandardFormLP& sf = *s.sf_;
      for (std::size_t r = 0; r < sf.rows.size(); ++r)
        if (!(evaluate(sf.rows[r], x) == sf.rhs[r]))
          throw std::logic_error("nonzero residual against the standard form");
    }
  }

  static void checkLeastEnteredChoice(const RuleContext& ctx, int chosen) {
    long long chosenCount = ctx.occurrences->count(chosen);
    for (const Candidate& c : ctx.candidates)
      if (ctx.occurrences->count(c.column) < chosenCount)
        throw std::logic_error("least-entered picked a non-minimal occurrence count");
  }

  End run(PivotRule rule, int phase, unsigned long long cap) {
    // Anti-cycling: on revisiting a basis, fall back to Bland's rule until
    // the objective strictly improves, then restore the requested rule.
    std::set<std::vector<int>> seen;
    bool guard = false;
    Rational guardBaseline;
    seen.insert(sortedBasis());
    unsigned long long pivots = 0;

    for (;;) {
      bool needSteps = rule == PivotRule::greatest_improvement && !guard;
      RuleContext ctx;
      ctx.candidates = collectCandidates(needSteps);
      if (ctx.candidates.empty()) return End::optimal;
      ctx.occurrences = occ;
      ctx.tieBreak = opts.tieBreak;
      ctx.stepsComputed = needSteps;
      PivotRule effective = guard ? PivotRule::bland : rule;
      int entering = *selectEntering(effective, ctx);
      if (opts.validate && effective == PivotRule::least_entered)
        checkLeastEnteredChoice(ctx, entering);

      auto row = ratioRow(entering);
      if (!row) {
        unboundedColumn = entering;
        return End::unbounded;
      }
      if (pivots >= cap) return End::limit;

      Rational objBefore = s.objInternal_;
      int leaving = s.basis_[static_cast<std::size_t>(*row)];
      pivot(*row, entering);
      ++pivots;
      if (occ && phase == 2) occ->noteEntering(entering);
      recordEvent(phase, entering, leaving, objBefore);
      if (opts.validate) validateAfterPivot(phase, objBefore);

      if (guard) {
        if (s.objInternal_ > guardBaseline) {
          guard = false;
          seen.clear();
          seen.insert(sortedBasis());
        }
      } else if (!seen.insert(sortedBasis()).second) {
        guard = true;
        guardBaseline = s.objInternal_;
      }
    }
  }
};

}  // namespace detail

std::optional<int> ratioTestRow(const SimplexState& state, int enteringColumn) {
  SolveOptions opts;
  std::vector<PivotEvent> scratch;
  detail::Engine eng{const_cast<SimplexState&>(state), opts, scratch};
  return eng.ratioRow(enteringColumn);
}

std::optional<int> ratioTestLeaving(const SimplexState& state, int enteringColumn) {
  auto row = ratioTestRow(state, enteringColumn);
  if (!row) return std::nullopt;
  return state.basis()[static_cast<std::size_t>(*row)];
}

bool verifyFarkas(const StandardFormLP& sf, const std::vector<Rational>& y) {
  if (y.size() != sf.rows.size())
    throw std::invalid_argument("Farkas multiplier count does not match the row count");
  std::vector<Rational> acc(static_cast<std::size_t>(sf.numColumns()));
  Rational yb;
  for (std::size_t r = 0; r < sf.rows.size(); ++r) {
    if (y[r].isZero()) continue;
    for (const auto& [var, coeff] : sf.rows[r].terms())
      acc[static_cast<std::size_t>(var)] += y[r] * coeff;
    yb += y[r] * sf.rhs[r];
  }
  for (const Rational& a : acc)
    if (a.sign() > 0) return false;
  return yb.sign() > 0;
}

Phase1Result phase1(const StandardFormLP& sf, const SolveOptions& opts) {
  const int m = sf.numRows();
  const int n = sf.numColumns();
  Phase1Result out;

  // Working copy with every rhs made nonnegative; flips are undone when a
  // certificate is mapped back onto the original rows.
  std::vector<std::vector<Rational>> work(static_cast<std::size_t>(m),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> b(static_cast<std::size_t>(m));
  std::vector<int> flip(static_cast<std::size_t>(m), 1);
  for (int r = 0; r < m; ++r) {
    for (const auto& [var, coeff] : sf.rows[static_cast<std::size_t>(r)].terms())
      work[static_cast<std::size_t>(r)][static_cast<std::size_t>(var)] = coeff;
    b[static_cast<std::size_t>(r)] = sf.rhs[static_cast<std::size_t>(r)];
    if (b[static_cast<std::size_t>(r)].sign() < 0) {
      flip[static_cast<std::size_t>(r)] = -1;
      b[static_cast<std::size_t>(r)] = -b[static_cast<std::size_t>(r)];
      for (auto& a : work[static_cast<std::size_t>(r)])
        if (!a.isZero()) a = -a;
    }
  }

  // Ready-made identity columns (single entry equal to 1) seed the basis;
  // only uncovered rows put their artificial into it.
  std::vector<int> unitRow(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    int row = -1;
    bool unit = true;
    for (int r = 0; r < m && unit; ++r) {
      const Rational& a = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (a.isZero()) continue;
      if (row != -1 || !a.isOne())
        unit = false;
      else
        row = r;
    }
    if (unit && row != -1) unitRow[static_cast<std::size_t>(c)] = row;
  }
  // Slack columns are preferred over structural unit columns so that pure
  // inequality systems start from the all-slack basis.
  std::vector<int> scanOrder;
  scanOrder.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    if (sf.columns[static_cast<std::size_t>(c)].kind != StandardFormLP::ColumnKind::structural)
      scanOrder.push_back(c);
  for (int c = 0; c < n; ++c)
    if (sf.columns[static_cast<std::size_t>(c)].kind == StandardFormLP::ColumnKind::structural)
      scanOrder.push_back(c);
  std::vector<int> rowBasis(static_cast<std::size_t>(m), -1);
  for (int c : scanOrder) {
    int r = unitRow[static_cast<std::size_t>(c)];
    if (r != -1 && rowBasis[static_cast<std::size_t>(r)] == -1)
      rowBasis[static_cast<std::size_t>(r)] = c;
  }

  SimplexState st;
  st.sf_ = &sf;
  st.cols_ = n + m;  // one artificial per row, for pricing and certificates
  st.tab_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(st.cols_), Rational(0));
  st.rhs_ = b;
  st.basis_.resize(static_cast<std::size_t>(m));
  st.basicFlag_.assign(static_cast<std::size_t>(st.cols_), 0);
  st.rowOrigin_.resize(static_cast<std::size_t>(m));
  int artInBasis = 0;
  for (int r = 0; r < m; ++r) {
    st.rowOrigin_[static_cast<std::size_t>(r)] = r;
    for (int c = 0; c < n; ++c)
      st.tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(st.cols_) +
              static_cast<std::size_t>(c)] = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    st.tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(st.cols_) +
            static_cast<std::size_t>(n + r)] = Rational(1);
    int basisCol = rowBasis[static_cast<std::size_t>(r)];
    if (basisCol == -1) {
      basisCol = n + r;
      ++artInBasis;
    }
    st.basis_[static_cast<std::size_t>(r)] = basisCol;
    st.basicFlag_[static_cast<std::size_t>(basisCol)] = 1;
  }

  // Auxiliary objective: maximize -(sum of artificials). Reduced costs follow
  // from the artificial rows currently in the basis.
  st.rc_.assign(static_cast<std::size_t>(st.cols_), Rational(0));
  st.objInternal_ = Rational(0);
  for (int c = n; c < st.cols_; ++c) st.rc_[static_cast<std::size_t>(c)] = Rational(-1);
  for (int r = 0; r < m; ++r) {
    if (st.basis_[static_cast<std::size_t>(r)] < n) continue;
    for (int c = 0; c < st.cols_; ++c) {
      const Rational& a = st.tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(st.cols_) +
                                  static_cast<std::size_t>(c)];
      if (!a.isZero()) st.rc_[static_cast<std::size_t>(c)] += a;
    }
    st.objInternal_ -= st.rhs_[static_cast<std::size_t>(r)];
  }

  detail::Engine eng{st, opts, out.trace};
  eng.candidateLimit = n;
  if (opts.validate) {
    eng.checkRows.resize(static_cast<std::size_t>(m));
    eng.checkRhs = b;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c)
        eng.checkRows[static_cast<std::size_t>(r)].add(c, work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      eng.checkRows[static_cast<std::size_t>(r)].add(n + r, Rational(1));
    }
  }

  if (artInBasis > 0) {
    // Phase 1 pivots with a fixed, deterministic rule; the requested rule
    // only governs phase 2.
    auto end = eng.run(PivotRule::dantzig, /*phase=*/1, effectiveCap(opts, st.cols_));
    if (end == detail::Engine::End::limit) {
      out.status = Phase1Status::iteration_limit;
      out.pivots = st.iterations_;
      return out;
    }
    if (end == detail::Engine::End::unbounded)
      throw std::logic_error("phase-1 auxiliary objective cannot be unbounded");
  }

  if (st.objInternal_.sign() < 0) {
    out.status = Phase1Status::infeasible;
    out.pivots = st.iterations_;
    out.farkas.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      // y = c_B B^{-1}, read off the artificial column's reduced cost.
      Rational yr = Rational(-1) - st.rc_[static_cast<std::size_t>(n + r)];
      out.farkas[static_cast<std::size_t>(r)] = flip[static_cast<std::size_t>(r)] < 0 ? yr : -yr;
    }
    if (!verifyFarkas(sf, out.farkas))
      throw std::logic_error("phase 1 derived an invalid Farkas certificate");
    return out;
  }

  // Feasible. Pivot lingering artificials (all at level zero) out of the
  // basis; a row with no structural entry left is redundant and is dropped.
  for (int r = 0; r < st.rowCount();) {
    if (st.basis_[static_cast<std::size_t>(r)] < n) {
      ++r;
      continue;
    }
    int enter = -1;
    for (int c = 0; c < n; ++c) {
      if (!st.coefficient(r, c).isZero() && !st.basicFlag_[static_cast<std::size_t>(c)]) {
        enter = c;
        break;
      }
    }
    if (enter == -1) {
      eng.dropRow(r);
      continue;
    }
    Rational objBefore = st.objInternal_;
    int leaving = st.basis_[static_cast<std::size_t>(r)];
    eng.pivot(r, enter);
    eng.recordEvent(1, enter, leaving, objBefore);
    if (opts.validate) eng.validateAfterPivot(1, objBefore);
    ++r;
  }

  // Shrink to the standard-form columns and price the real objective.
  const int kept = st.rowCount();
  std::vector<Rational> shrunk(static_cast<std::size_t>(kept) * static_cast<std::size_t>(n));
  for (int r = 0; r < kept; ++r)
    for (int c = 0; c < n; ++c)
      shrunk[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] =
          st.tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(st.cols_) +
                  static_cast<std::size_t>(c)];
  st.tab_ = std::move(shrunk);
  st.cols_ = n;
  st.basicFlag_.resize(static_cast<std::size_t>(n));

  std::vector<Rational> cost(static_cast<std::size_t>(n));
  for (const auto& [var, coeff] : sf.objective.terms())
    cost[static_cast<std::size_t>(var)] = sf.sense == Sense::maximize ? coeff : -coeff;
  st.rc_ = cost;
  st.objInternal_ = Rational(0);
  for (int r = 0; r < kept; ++r) {
    const Rational& cb = cost[static_cast<std::size_t>(st.basis_[static_cast<std::size_t>(r)])];
    if (cb.isZero()) continue;
    for (int c = 0; c < n; ++c) {
      const Rational& a = st.coefficient(r, c);
      if (!a.isZero()) st.rc_[static_cast<std::size_t>(c)] -= cb * a;
    }
    st.objInternal_ += cb * st.rhs_[static_cast<std::size_t>(r)];
  }

  out.status = Phase1Status::feasible;
  out.pivots = st.iterations_;
  out.state = std::move(st);
  return out;
}

SolveResult phase2(SimplexState& state, PivotRule rule, const SolveOptions& opts) {
  SolveResult r;
  r.standardForm = state.standardForm();
  long long startIteration = state.iteration();

  detail::Engine eng{state, opts, r.trace};
  eng.candidateLimit = state.standardForm().numColumns();
  eng.occ = &r.occurrences;
  auto end = eng.run(rule, /*phase=*/2, effectiveCap(opts, state.columnCount()));
  r.phase2Pivots = state.iteration() - startIteration;

  switch (end) {
    case detail::Engine::End::optimal: {
      r.status = SolveStatus::optimal;
      r.solution = state.solution();
      r.objective = state.objective();
      break;
    }
    case detail::Engine::End::unbounded: {
      r.status = SolveStatus::unbounded;
      const StandardFormLP& sf = state.standardForm();
      std::vector<Rational> d(static_cast<std::size_t>(state.columnCount()));
      d[static_cast<std::size_t>(eng.unboundedColumn)] = Rational(1);
      for (int row = 0; row < state.rowCount(); ++row)
        d[static_cast<std::size_t>(state.basis()[static_cast<std::size_t>(row)])] =
            -state.coefficient(row, eng.unboundedColumn);
      for (int c = 0; c < sf.numStructural; ++c)
        if (!d[static_cast<std::size_t>(c)].isZero())
          r.ray[sf.columns[static_cast<std::size_t>(c)].name] = d[static_cast<std::size_t>(c)];
      break;
    }
    case detail::Engine::End::limit:
      r.status = SolveStatus::iteration_limit;
      break;
  }
  return r;
}

SolveResult solve(const LinearProgram& lp, PivotRule rule, bool unitBox,
                  const SolveOptions& opts) {
  StandardFormLP sf = toStandardForm(lp, unitBox);
  Phase1Result p1 = phase1(sf, opts);

  SolveResult r;
  r.trace = std::move(p1.trace);
  r.phase1Pivots = p1.pivots;
  if (p1.status == Phase1Status::infeasible) {
    r.status = SolveStatus::infeasible;
    r.farkas = std::move(p1.farkas);
    r.standardForm = std::move(sf);
    return r;
  }
  if (p1.status == Phase1Status::iteration_limit) {
    r.status = SolveStatus::iteration_limit;
    r.standardForm = std::move(sf);
    return r;
  }

  SimplexState state = std::move(*p1.state);
  SolveResult p2 = phase2(state, rule, opts);
  r.status = p2.status;
  r.objective = std::move(p2.objective);
  r.solution = std::move(p2.solution);
  r.ray = std::move(p2.ray);
  r.occurrences = std::move(p2.occurrences);
  r.phase2Pivots = p2.phase2Pivots;
  r.trace.insert(r.trace.end(), p2.trace.begin(), p2.trace.end());
  r.standardForm = std::move(sf);
  return r;
}

std::string traceJsonLines(const std::vector<PivotEvent>& trace, const StandardFormLP& sf) {
  std::string out;
  for (const PivotEvent& ev : trace) {
    nlohmann::ordered_json j;
    j["iteration"] = ev.iteration;
    j["phase"] = ev.phase;
    j["entering"] = columnDisplayName(sf, ev.entering);
    j["leaving"] = columnDisplayName(sf, ev.leaving);
    j["objective"] = ev.objectiveAfter.str();
    j["degenerate"] = ev.degenerate;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace pivotlab
