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

#include "pivotlab/certificates.hpp"

#include <stdexcept>

namespace pivotlab {

std::string renderAggregatedRow(const AggregatedRow& row, const LinearProgram& lp) {
  return renderLinearExpression(row.coefficients, lp.variables()) + " = " + row.rhs.str();
}

AggregatedRow aggregate(const LinearProgram& lp, const std::vector<Rational>& multipliers) {
  if (multipliers.size() != lp.constraints().size())
    throw std::invalid_argument("multiplier count does not match the constraint count");
  AggregatedRow out;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const Constraint& c = lp.constraints()[i];
    if (c.relation != Relation::eq)
      throw std::invalid_argument("aggregation requires equality constraints ('" + c.name +
                                  "' is not one)");
    if (multipliers[i].isZero()) continue;
    for (const auto& [var, coeff] : c.expr.terms())
      out.coefficients.add(var, multipliers[i] * coeff);
    out.rhs += multipliers[i] * c.rhs;
  }
  return out;
}

BoxBounds uniformBox(const LinearProgram& lp, Rational lo, Rational hi) {
  if (hi < lo) throw std::domain_error("empty box: upper bound below lower bound");
  return BoxBounds(lp.variables().size(), VarBounds{lo, hi});
}

namespace {

// sup: positive coefficients need uppers, negative ones need lowers;
// inf is the mirror image.
std::optional<Rational> boxExtremum(const AggregatedRow& row, const BoxBounds& bounds,
                                    bool supremum) {
  Rational total;
  for (const auto& [var, coeff] : row.coefficients.terms()) {
    const VarBounds& b = bounds.at(static_cast<std::size_t>(var));
    bool wantUpper = (coeff.sign() > 0) == supremum;
    const std::optional<Rational>& bound = wantUpper ? b.upper : b.lower;
    if (!bound) return std::nullopt;
    total += coeff * *bound;
  }
  return total;
}

}  // namespace

std::optional<Rational> tryBoxSupremum(const AggregatedRow& row, const BoxBounds& bounds) {
  return boxExtremum(row, bounds, /*supremum=*/true);
}

std::optional<Rational> tryBoxInfimum(const AggregatedRow& row, const BoxBounds& bounds) {
  return boxExtremum(row, bounds, /*supremum=*/false);
}

Rational boxSupremum(const AggregatedRow& row, const BoxBounds& bounds) {
  auto s = tryBoxSupremum(row, bounds);
  if (!s)
    throw std::domain_error(
        "box supremum is unbounded: a positive-coefficient variable has no upper bound");
  return *s;
}

std::string_view certificateVerdictName(CertificateVerdict v) {
  return v == CertificateVerdict::proves_infeasible ? "proves_infeasible" : "inconclusive";
}

BoxInfeasibilityCertificate checkCertificate(const LinearProgram& lp,
                                             const std::vector<Rational>& multipliers,
                                             const BoxBounds& bounds) {
  if (bounds.size() != lp.variables().size())
    throw std::invalid_argument("bound count does not match the variable count");
  BoxInfeasibilityCertificate cert;
  cert.multipliers = multipliers;
  cert.aggregated = aggregate(lp, multipliers);
  cert.supremum = tryBoxSupremum(cert.aggregated, bounds);
  cert.infimum = tryBoxInfimum(cert.aggregated, bounds);
  bool infeasible = (cert.supremum && *cert.supremum < cert.aggregated.rhs) ||
                    (cert.infimum && *cert.infimum > cert.aggregated.rhs);
  cert.verdict =
      infeasible ? CertificateVerdict::proves_infeasible : CertificateVerdict::inconclusive;
  return cert;
}

std::optional<BoxInfeasibilityCertificate> searchCertificate(const LinearProgram& lp,
                                                             const BoxBounds& bounds,
                                                             const SolveOptions& opts) {
  if (bounds.size() != lp.variables().size())
    throw std::invalid_argument("bound count does not match the variable count");
  for (const Constraint& c : lp.constraints())
    if (c.relation != Relation::eq)
      throw std::invalid_argument("certificate search requires equality constraints");

  // Impose the box as variable bounds and let phase 1 decide feasibility.
  LinearProgram boxed = lp;
  for (const Variable& v : lp.variables()) {
    const VarBounds& b = bounds[static_cast<std::size_t>(v.id)];
    boxed.setBounds(v.id, b.lower ? *b.lower : v.lower, b.upper ? b.upper : v.upper);
  }
  StandardFormLP sf = toStandardForm(boxed, /*unitBox=*/false);
  Phase1Result p1 = phase1(sf, opts);
  if (p1.status == Phase1Status::iteration_limit)
    throw std::runtime_error("certificate search hit the pivot cap");
  if (p1.status == Phase1Status::feasible) return std::nullopt;

  // Constraint rows come first in the standard form, so their multipliers are
  // the prefix of the Farkas vector; the box absorbs the bound-row part.
  std::vector<Rational> eqMultipliers(p1.farkas.begin(),
                                      p1.farkas.begin() + static_cast<std::ptrdiff_t>(
                                                              lp.constraints().size()));
  BoxInfeasibilityCertificate cert = checkCertificate(lp, eqMultipliers, bounds);
  if (cert.verdict != CertificateVerdict::proves_infeasible)
    throw std::logic_error("derived aggregation certificate failed verification");
  return cert;
}

}  // namespace pivotlab
