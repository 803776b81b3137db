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

// Command-line front end: solve, feasible, certify, aggregate, mdp2lp, diff,
// bench, fixture. Every number printed is an exact rational literal; --approx
// appends a clearly marked decimal reading without ever replacing the exact
// value. Identical invocations produce byte-identical output.
//
// Exit codes: 0 definitive verdict, 1 usage or input error, 2 pivot cap hit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pivotlab/certificates.hpp"
#include "pivotlab/fixtures.hpp"
#include "pivotlab/generators.hpp"
#include "pivotlab/lp.hpp"
#include "pivotlab/mdp.hpp"
#include "pivotlab/simplex.hpp"

using json = nlohmann::ordered_json;
using namespace pivotlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIterationLimit = 2;

struct OutputSink {
  bool jsonMode = false;
  bool approx = false;
  std::string outPath;
  std::ostringstream buffer;

  void line(const std::string& s) { buffer << s << '\n'; }
  void record(const json& j) { buffer << j.dump() << '\n'; }

  int flush() {
    std::string text = buffer.str();
    if (!outPath.empty()) {
      std::ofstream f(outPath, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write '" << outPath << "'\n";
        return kExitUsage;
      }
      f << text;
    }
    std::cout << text;
    return kExitOk;
  }
};

std::string withApprox(const Rational& r, bool approx) {
  std::string s = r.str();
  if (approx && !r.isInteger()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.approx());
    s += " (~";
    s += buf;
    s += ")";
  }
  return s;
}

std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --lp accepts a builtin name, "klee-minty" (with --n), or a file path.
LinearProgram loadLp(const std::string& source, int kleeMintyN) {
  if (source == "lp1" || source == "lp2-prefix8" || source == "lp2_prefix8")
    return builtinLp(source);
  if (source == "klee-minty") {
    if (kleeMintyN < 1 || kleeMintyN > 16)
      throw std::runtime_error("klee-minty needs --n between 1 and 16");
    return kleeMinty(kleeMintyN);
  }
  if (!std::filesystem::exists(source))
    throw std::runtime_error("unknown fixture or missing file '" + source + "'");
  LinearProgram lp = parseLp(readFile(source));
  for (const std::string& flag : lp.validate()) std::cerr << "warning: " << flag << "\n";
  return lp;
}

MdpGraph loadMdp(const std::string& source) {
  if (source == "node-g" || source == "node_g" || source == "node_g_mdp") return nodeGFixture();
  if (!std::filesystem::exists(source))
    throw std::runtime_error("unknown fixture or missing file '" + source + "'");
  return parseMdp(readFile(source));
}

// diff sources: a file path, a builtin LP name, or a generator expression
// P(<mdp>) / flow(<mdp>,0|1).
LinearProgram loadDiffSide(const std::string& source) {
  auto open = source.find('(');
  if (open != std::string::npos && source.back() == ')') {
    std::string head = source.substr(0, open);
    std::string args = source.substr(open + 1, source.size() - open - 2);
    if (head == "P") return generateP(loadMdp(args));
    if (head == "flow") {
      auto comma = args.rfind(',');
      if (comma == std::string::npos)
        throw std::runtime_error("flow(...) needs an rhs mode: flow(<mdp>,0|1)");
      std::string mdp = args.substr(0, comma);
      std::string mode = args.substr(comma + 1);
      if (mode != "0" && mode != "1")
        throw std::runtime_error("flow(...) rhs mode must be 0 or 1");
      return generateFlowConservation(loadMdp(mdp),
                                      mode == "0" ? RhsMode::zero : RhsMode::unit);
    }
    throw std::runtime_error("unknown generator '" + head + "' (use P or flow)");
  }
  return loadLp(source, 0);
}

std::vector<Rational> parseMultipliers(const std::string& csv) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) out.push_back(Rational::fromString(item));
  return out;
}

// "--box 0..1" style ranges.
std::pair<Rational, Rational> parseBoxRange(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::runtime_error("box must look like <lower>..<upper>, e.g. 0..1");
  return {Rational::fromString(text.substr(0, dots)),
          Rational::fromString(text.substr(dots + 2))};
}

PivotRule requireRule(const std::string& name) {
  auto rule = pivotRuleFromString(name);
  if (!rule)
    throw std::runtime_error(
        "unknown rule '" + name +
        "' (expected dantzig, bland, greatest-improvement, or least-entered)");
  return *rule;
}

SolveOptions makeOptions(unsigned long long maxPivots, const std::string& tiebreak) {
  SolveOptions opts;
  if (maxPivots == 0) {
    if (const char* env = std::getenv("PIVOTLAB_MAX_PIVOTS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) opts.maxPivots = v;
    }
  } else {
    opts.maxPivots = maxPivots;
  }
  opts.tieBreak = tiebreak == "index" ? TieBreak::index : TieBreak::cost;
  return opts;
}

json solutionJson(const std::map<std::string, Rational>& solution) {
  json j = json::object();
  for (const auto& [name, value] : solution) j[name] = value.str();
  return j;
}

json farkasJson(const std::vector<Rational>& farkas, const StandardFormLP& sf) {
  json arr = json::array();
  for (std::size_t i = 0; i < farkas.size(); ++i) {
    json e;
    e["row"] = sf.rowNames[i];
    e["multiplier"] = farkas[i].str();
    arr.push_back(e);
  }
  return arr;
}

void writeTraceFile(const std::string& path, const SolveResult& r) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write trace file '" + path + "'");
  f << traceJsonLines(r.trace, r.standardForm);
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int runSolve(const std::string& source, int n, const std::string& ruleName, bool box,
             unsigned long long maxPivots, const std::string& tiebreak,
             const std::string& tracePath, OutputSink& out) {
  LinearProgram lp = loadLp(source, n);
  PivotRule rule = requireRule(ruleName);
  SolveResult r = solve(lp, rule, box, makeOptions(maxPivots, tiebreak));
  if (!tracePath.empty()) writeTraceFile(tracePath, r);

  if (out.jsonMode) {
    json j;
    j["command"] = "solve";
    j["lp"] = source;
    j["rule"] = ruleName;
    j["box"] = box;
    j["status"] = std::string(solveStatusName(r.status));
    j["phase1_pivots"] = r.phase1Pivots;
    j["phase2_pivots"] = r.phase2Pivots;
    j["objective"] = r.objective ? json(r.objective->str()) : json(nullptr);
    j["solution"] = r.status == SolveStatus::optimal ? solutionJson(r.solution) : json(nullptr);
    j["farkas"] = r.status == SolveStatus::infeasible ? farkasJson(r.farkas, r.standardForm)
                                                      : json(nullptr);
    out.record(j);
  } else {
    out.line("status: " + std::string(solveStatusName(r.status)));
    out.line("phase1_pivots: " + std::to_string(r.phase1Pivots));
    out.line("phase2_pivots: " + std::to_string(r.phase2Pivots));
    if (r.objective) out.line("objective: " + withApprox(*r.objective, out.approx));
    if (r.status == SolveStatus::optimal)
      for (const auto& [name, value] : r.solution)
        out.line(name + " = " + withApprox(value, out.approx));
    if (r.status == SolveStatus::infeasible)
      for (std::size_t i = 0; i < r.farkas.size(); ++i)
        out.line("farkas " + r.standardForm.rowNames[i] + ": " + r.farkas[i].str());
    if (r.status == SolveStatus::unbounded)
      for (const auto& [name, value] : r.ray) out.line("ray " + name + " = " + value.str());
  }
  int flushed = out.flush();
  if (flushed != kExitOk) return flushed;
  return r.status == SolveStatus::iteration_limit ? kExitIterationLimit : kExitOk;
}

int runFeasible(const std::string& source, int n, bool box, unsigned long long maxPivots,
                OutputSink& out) {
  LinearProgram lp = loadLp(source, n);
  StandardFormLP sf = toStandardForm(lp, box);
  Phase1Result p1 = phase1(sf, makeOptions(maxPivots, "cost"));

  if (out.jsonMode) {
    json j;
    j["command"] = "feasible";
    j["lp"] = source;
    j["box"] = box;
    switch (p1.status) {
      case Phase1Status::feasible:
        j["verdict"] = "feasible";
        j["point"] = solutionJson(p1.state->solution());
        break;
      case Phase1Status::infeasible:
        j["verdict"] = "infeasible";
        j["farkas"] = farkasJson(p1.farkas, sf);
        break;
      case Phase1Status::iteration_limit:
        j["verdict"] = "iteration_limit";
        break;
    }
    out.record(j);
  } else {
    switch (p1.status) {
      case Phase1Status::feasible:
        out.line("verdict: feasible");
        for (const auto& [name, value] : p1.state->solution())
          out.line(name + " = " + withApprox(value, out.approx));
        break;
      case Phase1Status::infeasible:
        out.line("verdict: infeasible");
        for (std::size_t i = 0; i < p1.farkas.size(); ++i)
          out.line("farkas " + sf.rowNames[i] + ": " + p1.farkas[i].str());
        break;
      case Phase1Status::iteration_limit:
        out.line("verdict: iteration_limit");
        break;
    }
  }
  int flushed = out.flush();
  if (flushed != kExitOk) return flushed;
  return p1.status == Phase1Status::iteration_limit ? kExitIterationLimit : kExitOk;
}

json aggregatedJson(const AggregatedRow& row, const LinearProgram& lp) {
  json terms = json::array();
  for (const auto& [var, coeff] : row.coefficients.terms()) {
    json t;
    t["var"] = lp.variable(var).name;
    t["coeff"] = coeff.str();
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  j["rhs"] = row.rhs.str();
  j["text"] = renderAggregatedRow(row, lp);
  return j;
}

int runCertify(const std::string& source, int n, const std::string& multipliersCsv, bool search,
               const std::string& boxRange, unsigned long long maxPivots, OutputSink& out) {
  LinearProgram lp = loadLp(source, n);
  auto [lo, hi] = parseBoxRange(boxRange);
  BoxBounds box = uniformBox(lp, lo, hi);

  std::optional<BoxInfeasibilityCertificate> cert;
  if (search) {
    cert = searchCertificate(lp, box, makeOptions(maxPivots, "cost"));
  } else {
    if (multipliersCsv.empty())
      throw std::runtime_error("certify needs --multipliers or --search");
    cert = checkCertificate(lp, parseMultipliers(multipliersCsv), box);
  }

  if (out.jsonMode) {
    json j;
    j["command"] = "certify";
    j["lp"] = source;
    j["box"] = json::array({lo.str(), hi.str()});
    if (!cert) {
      j["verdict"] = "feasible";
    } else {
      json mult = json::array();
      for (const auto& m : cert->multipliers) mult.push_back(m.str());
      j["multipliers"] = mult;
      j["aggregated"] = aggregatedJson(cert->aggregated, lp);
      j["supremum"] = cert->supremum ? json(cert->supremum->str()) : json(nullptr);
      j["infimum"] = cert->infimum ? json(cert->infimum->str()) : json(nullptr);
      j["verdict"] = std::string(certificateVerdictName(cert->verdict));
    }
    out.record(j);
  } else {
    out.line("lp: " + source);
    out.line("box: [" + lo.str() + ", " + hi.str() + "]");
    if (!cert) {
      out.line("verdict: feasible (no certificate exists)");
    } else {
      std::string mult;
      for (std::size_t i = 0; i < cert->multipliers.size(); ++i) {
        if (i) mult += ", ";
        mult += cert->multipliers[i].str();
      }
      out.line("multipliers: " + mult);
      out.line("aggregated: " + renderAggregatedRow(cert->aggregated, lp));
      if (cert->supremum) out.line("supremum: " + withApprox(*cert->supremum, out.approx));
      if (cert->infimum) out.line("infimum: " + withApprox(*cert->infimum, out.approx));
      out.line(std::string("verdict: ") +
               (cert->verdict == CertificateVerdict::proves_infeasible ? "infeasible"
                                                                       : "inconclusive"));
    }
  }
  return out.flush();
}

int runAggregate(const std::string& source, int n, const std::string& multipliersCsv,
                 OutputSink& out) {
  LinearProgram lp = loadLp(source, n);
  AggregatedRow row = aggregate(lp, parseMultipliers(multipliersCsv));
  if (out.jsonMode) {
    json j;
    j["command"] = "aggregate";
    j["lp"] = source;
    j["aggregated"] = aggregatedJson(row, lp);
    out.record(j);
  } else {
    out.line(renderAggregatedRow(row, lp));
  }
  return out.flush();
}

int runMdp2Lp(const std::string& source, const std::string& schema, int rhs, OutputSink& out) {
  MdpGraph g = loadMdp(source);
  LinearProgram lp;
  if (schema == "P") {
    lp = generateP(g);
  } else if (schema == "flow") {
    lp = generateFlowConservation(g, rhs == 0 ? RhsMode::zero : RhsMode::unit);
  } else {
    throw std::runtime_error("schema must be P or flow");
  }
  out.buffer << serializeLp(lp);
  return out.flush();
}

int runDiff(const std::string& aSource, const std::string& bSource, OutputSink& out) {
  LinearProgram a = loadDiffSide(aSource);
  LinearProgram b = loadDiffSide(bSource);
  ConstraintDiff d = diffConstraints(a, b);

  if (out.jsonMode) {
    json j;
    j["command"] = "diff";
    j["a"] = aSource;
    j["b"] = bSource;
    j["identical"] = d.empty();
    json keys = json::array();
    for (const auto& kd : d.keys) {
      json k;
      k["key"] = kd.key;
      json missing = json::array();
      for (const auto& t : kd.missing)
        missing.push_back({{"var", t.var}, {"coeff", t.coeff.str()}});
      json extra = json::array();
      for (const auto& t : kd.extra) extra.push_back({{"var", t.var}, {"coeff", t.coeff.str()}});
      json mismatched = json::array();
      for (const auto& t : kd.mismatched)
        mismatched.push_back({{"var", t.var}, {"a", t.a.str()}, {"b", t.b.str()}});
      k["missing"] = missing;
      k["extra"] = extra;
      k["mismatched"] = mismatched;
      k["rhs"] = kd.rhs ? json::array({kd.rhs->first.str(), kd.rhs->second.str()})
                        : json(nullptr);
      keys.push_back(k);
    }
    j["keys"] = keys;
    j["only_in_a"] = d.onlyInA;
    j["only_in_b"] = d.onlyInB;
    out.record(j);
  } else {
    if (d.empty()) {
      out.line("identical");
    } else {
      for (const auto& kd : d.keys) {
        std::string line = kd.key + ":";
        if (!kd.missing.empty()) {
          line += " missing";
          for (const auto& t : kd.missing) line += " " + t.coeff.str() + " " + t.var + ",";
          line.pop_back();
          line += ";";
        }
        if (!kd.extra.empty()) {
          line += " extra";
          for (const auto& t : kd.extra) line += " " + t.coeff.str() + " " + t.var + ",";
          line.pop_back();
          line += ";";
        }
        for (const auto& t : kd.mismatched)
          line += " coeff(" + t.var + ") " + t.a.str() + " vs " + t.b.str() + ";";
        if (kd.rhs) line += " rhs " + kd.rhs->first.str() + " vs " + kd.rhs->second.str();
        out.line(line);
      }
      for (const auto& name : d.onlyInA) out.line("only in a: " + name);
      for (const auto& name : d.onlyInB) out.line("only in b: " + name);
    }
  }
  return out.flush();
}

struct BenchCell {
  int n;
  std::string rule;
  SolveStatus status;
  long long phase1, phase2;
  std::string objective;
};

int runBench(const std::string& family, const std::string& nRange, const std::string& rulesCsv,
             bool parallel, unsigned long long maxPivots, OutputSink& out) {
  if (family != "klee-minty") throw std::runtime_error("unknown family '" + family + "'");

  int lo = 0, hi = 0;
  auto dots = nRange.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(nRange);
  } else {
    lo = std::stoi(nRange.substr(0, dots));
    hi = std::stoi(nRange.substr(dots + 2));
  }
  if (lo < 1 || hi > 16 || lo > hi)
    throw std::runtime_error("--n must be a range inside 1..16");

  std::vector<std::string> rules;
  std::istringstream ss(rulesCsv);
  std::string item;
  while (std::getline(ss, item, ',')) rules.push_back(item);
  for (const auto& r : rules) requireRule(r);

  SolveOptions opts = makeOptions(maxPivots, "cost");
  auto runCell = [&opts](int n, const std::string& ruleName) {
    SolveResult r = solve(kleeMinty(n), requireRule(ruleName), false, opts);
    return BenchCell{n, ruleName, r.status, r.phase1Pivots, r.phase2Pivots,
                     r.objective ? r.objective->str() : "-"};
  };

  // Cells are independent; the output table order never depends on
  // completion order.
  std::vector<BenchCell> cells;
  if (parallel) {
    std::vector<std::future<BenchCell>> futures;
    for (int k = lo; k <= hi; ++k)
      for (const auto& rule : rules)
        futures.push_back(std::async(std::launch::async, runCell, k, rule));
    for (auto& f : futures) cells.push_back(f.get());
  } else {
    for (int k = lo; k <= hi; ++k)
      for (const auto& rule : rules) cells.push_back(runCell(k, rule));
  }

  bool limited = false;
  if (out.jsonMode) {
    for (const auto& c : cells) {
      json j;
      j["family"] = family;
      j["n"] = c.n;
      j["rule"] = c.rule;
      j["status"] = std::string(solveStatusName(c.status));
      j["phase1_pivots"] = c.phase1;
      j["phase2_pivots"] = c.phase2;
      j["objective"] = c.objective;
      out.record(j);
      limited = limited || c.status == SolveStatus::iteration_limit;
    }
  } else {
    std::size_t ruleWidth = 4;
    for (const auto& r : rules) ruleWidth = std::max(ruleWidth, r.size());
    std::ostringstream header;
    header << std::left << std::setw(12) << "family" << std::setw(4) << "n"
           << std::setw(static_cast<int>(ruleWidth) + 2) << "rule" << std::setw(8) << "pivots"
           << "objective";
    out.line(header.str());
    for (const auto& c : cells) {
      std::ostringstream row;
      row << std::left << std::setw(12) << family << std::setw(4) << c.n
          << std::setw(static_cast<int>(ruleWidth) + 2) << c.rule << std::setw(8) << c.phase2
          << c.objective;
      out.line(row.str());
      limited = limited || c.status == SolveStatus::iteration_limit;
    }
  }
  int flushed = out.flush();
  if (flushed != kExitOk) return flushed;
  return limited ? kExitIterationLimit : kExitOk;
}

int runFixture(const std::string& family, int n, OutputSink& out) {
  if (family == "lp1" || family == "lp2-prefix8" || family == "lp2_prefix8") {
    out.buffer << serializeLp(builtinLp(family));
  } else if (family == "node-g" || family == "node_g" || family == "node_g_mdp") {
    out.buffer << serializeMdp(nodeGFixture());
  } else if (family == "klee-minty") {
    if (n < 1 || n > 16) throw std::runtime_error("klee-minty needs --n between 1 and 16");
    out.buffer << serializeLp(kleeMinty(n));
  } else {
    throw std::runtime_error("unknown fixture '" + family +
                             "' (lp1, lp2-prefix8, node-g, klee-minty)");
  }
  return out.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pivotlab: exact-rational simplex laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // --json/--approx/--out may follow the subcommand

  OutputSink out;
  app.add_flag("--json", out.jsonMode, "emit line-oriented JSON records instead of text");
  app.add_flag("--approx", out.approx,
               "append decimal approximations (marked, never replacing exact values)");
  app.add_option("--out", out.outPath, "also write the primary output to this file");

  std::string lpSource, mdpSource, ruleName = "dantzig", tiebreak = "cost";
  std::string multipliers, boxRange = "0..1", tracePath, family, nRange = "1..6";
  std::string diffA, diffB, schema = "P", rulesCsv = "dantzig";
  int n = 0, rhsMode = 1;
  unsigned long long maxPivots = 0;
  bool box = false, search = false, parallel = false;

  auto* solveCmd = app.add_subcommand("solve", "two-phase exact simplex solve");
  solveCmd->add_option("--lp", lpSource, "fixture name or LP file")->required();
  solveCmd->add_option("--n", n, "dimension for klee-minty");
  solveCmd->add_option("--rule", ruleName,
                       "dantzig | bland | greatest-improvement | least-entered");
  solveCmd->add_flag("--box", box, "impose the unit box (upper bound 1 by default)");
  solveCmd->add_option("--max-pivots", maxPivots, "per-phase pivot cap");
  solveCmd->add_option("--tiebreak", tiebreak, "least-entered count ties: cost | index");
  solveCmd->add_option("--trace", tracePath, "write the pivot trace (JSON lines) here");

  auto* feasibleCmd = app.add_subcommand("feasible", "phase-1 feasibility verdict");
  feasibleCmd->add_option("--lp", lpSource, "fixture name or LP file")->required();
  feasibleCmd->add_option("--n", n, "dimension for klee-minty");
  feasibleCmd->add_flag("--box", box, "impose the unit box");
  feasibleCmd->add_option("--max-pivots", maxPivots, "per-phase pivot cap");

  auto* certifyCmd = app.add_subcommand("certify", "aggregation infeasibility certificate");
  certifyCmd->add_option("--lp", lpSource, "fixture name or LP file")->required();
  certifyCmd->add_option("--n", n, "dimension for klee-minty");
  certifyCmd->add_option("--multipliers", multipliers, "comma-separated rationals, one per row");
  certifyCmd->add_flag("--search", search, "derive multipliers from a phase-1 run");
  certifyCmd->add_option("--box", boxRange, "per-variable interval, e.g. 0..1");
  certifyCmd->add_option("--max-pivots", maxPivots, "per-phase pivot cap");

  auto* aggregateCmd = app.add_subcommand("aggregate", "print the aggregated row only");
  aggregateCmd->add_option("--lp", lpSource, "fixture name or LP file")->required();
  aggregateCmd->add_option("--n", n, "dimension for klee-minty");
  aggregateCmd->add_option("--multipliers", multipliers, "comma-separated rationals")
      ->required();

  auto* mdpCmd = app.add_subcommand("mdp2lp", "translate an MDP to LP text");
  mdpCmd->add_option("--mdp", mdpSource, "fixture name or MDP file")->required();
  mdpCmd->add_option("--schema", schema, "P (literal schema) | flow (conservation)");
  mdpCmd->add_option("--rhs", rhsMode, "right-hand side for flow: 0 or 1")
      ->check(CLI::IsMember({0, 1}));

  auto* diffCmd = app.add_subcommand("diff", "per-constraint structural diff of two LPs");
  diffCmd->add_option("--a", diffA, "file, fixture, P(<mdp>), or flow(<mdp>,0|1)")->required();
  diffCmd->add_option("--b", diffB, "file, fixture, P(<mdp>), or flow(<mdp>,0|1)")->required();

  auto* benchCmd = app.add_subcommand("bench", "pivot counts across a family");
  benchCmd->add_option("--family", family, "klee-minty")->required();
  benchCmd->add_option("--n", nRange, "single n or range a..b");
  benchCmd->add_option("--rules", rulesCsv, "comma-separated rule list");
  benchCmd->add_flag("--parallel", parallel, "run independent cells concurrently");
  benchCmd->add_option("--max-pivots", maxPivots, "per-phase pivot cap");

  auto* fixtureCmd = app.add_subcommand("fixture", "emit fixture text");
  fixtureCmd->add_option("--family", family, "lp1 | lp2-prefix8 | node-g | klee-minty")
      ->required();
  fixtureCmd->add_option("--n", n, "dimension for klee-minty");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solveCmd->parsed())
      return runSolve(lpSource, n, ruleName, box, maxPivots, tiebreak, tracePath, out);
    if (feasibleCmd->parsed()) return runFeasible(lpSource, n, box, maxPivots, out);
    if (certifyCmd->parsed())
      return runCertify(lpSource, n, multipliers, search, boxRange, maxPivots, out);
    if (aggregateCmd->parsed()) return runAggregate(lpSource, n, multipliers, out);
    if (mdpCmd->parsed()) return runMdp2Lp(mdpSource, schema, rhsMode, out);
    if (diffCmd->parsed()) return runDiff(diffA, diffB, out);
    if (benchCmd->parsed()) return runBench(family, nRange, rulesCsv, parallel, maxPivots, out);
    if (fixtureCmd->parsed()) return runFixture(family, n, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
