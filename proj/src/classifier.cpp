// classifier.cpp - Optimal-condition evaluation and verdicts
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/classifier.hpp"

#include <stdexcept>

namespace regula {

const char* relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

bool relation_holds(const ExtRational& lhs, Relation rel, const ExtRational& rhs) {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

const Check* ConditionReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::RegularityCertified: return "regularity-certified";
    case VerdictKind::SingularExampleExists: return "singular-example-exists";
    case VerdictKind::CriticalBoundary: return "critical-boundary";
    case VerdictKind::OutsideScope: return "outside-scope";
  }
  return "?";
}

int verdict_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::RegularityCertified: return 0;
    case VerdictKind::SingularExampleExists: return 10;
    case VerdictKind::CriticalBoundary: return 20;
    case VerdictKind::OutsideScope: return 30;
  }
  return 30;
}

namespace {

Check make_check(std::string name, ExtRational lhs, Relation rel, ExtRational rhs) {
  bool ok = relation_holds(lhs, rel, rhs);
  return Check{std::move(name), std::move(lhs), rel, std::move(rhs), ok};
}

}  // namespace

std::pair<Verdict, ConditionReport> classify(const SystemParams& params) {
  const ExtRational one(1);
  ConditionReport report;
  report.p_c = params.critical();
  report.p_c_conj = params.conj_critical();
  report.indices = scaling_indices(params);

  const ExtRational& p_c = report.p_c;
  const bool coupled = report.indices.denom().sign() > 0;  // pq > (1-r)(1-s)

  if (coupled) {
    // max{alpha,beta} > 1/(p_c - 1); 1/(p_c-1) = 0 when p_c = inf.
    ExtRational threshold = (p_c - one).reciprocal();
    ExtRational m = max(report.indices.alpha(), report.indices.beta());
    report.checks.push_back(
        make_check("max-scaling-index", std::move(m), Relation::Greater, std::move(threshold)));
  } else {
    ExtRational margin_rhs_factor = max(params.p + one - params.s, params.q + one - params.r);
    if (p_c.is_finite()) {
      report.checks.push_back(make_check("coupling-margin", report.indices.denom(),
                                         Relation::Less, (p_c - one) * margin_rhs_factor));
    } else {
      // Unbounded critical exponent: record the conjugate form
      // max{p+1-s, q+1-r} > denom/(p_c - 1), whose right side is 0.
      report.checks.push_back(make_check("coupling-margin", std::move(margin_rhs_factor),
                                         Relation::Greater, ExtRational(0)));
    }
  }

  report.checks.push_back(make_check("r-subcritical", params.r, Relation::Less, p_c));
  report.checks.push_back(make_check("s-subcritical", params.s, Relation::Less, p_c));
  report.checks.push_back(make_check("gamma-subcritical", params.gamma, Relation::Less, p_c));
  report.checks.push_back(make_check("sigma-subcritical", params.sigma, Relation::Less, p_c));
  report.checks.push_back(make_check("min-growth-subcritical",
                                     min(params.p + params.r, params.q + params.s),
                                     Relation::Less, p_c));
  report.checks.push_back(
      make_check("source-integrability", params.theta, Relation::Greater, report.p_c_conj));

  const bool min_redundant = params.r <= one && params.s <= one;
  if (min_redundant)
    report.redundancy_notes.push_back(
        "min-growth-subcritical is implied by max-scaling-index when r,s <= 1");
  if (params.gamma_raised)
    report.redundancy_notes.push_back("gamma was below 1 and has been raised to 1");
  if (params.sigma_raised)
    report.redundancy_notes.push_back("sigma was below 1 and has been raised to 1");

  // Scope gate: the coupled branch requires positive scaling indices.
  if (coupled && (report.indices.alpha().sign() <= 0 || report.indices.beta().sign() <= 0)) {
    Verdict v;
    v.kind = VerdictKind::OutsideScope;
    v.reason = "scaling indices must be positive (alpha = " +
               report.indices.alpha().str() + ", beta = " + report.indices.beta().str() + ")";
    return {std::move(v), std::move(report)};
  }

  bool all_pass = true;
  const Check* first_failed = nullptr;
  for (const Check& c : report.checks) {
    if (c.satisfied) continue;
    if (c.name == "min-growth-subcritical" && min_redundant) continue;
    all_pass = false;
    if (!first_failed) first_failed = &c;
  }

  Verdict v;
  if (all_pass) {
    v.kind = VerdictKind::RegularityCertified;
    return {std::move(v), std::move(report)};
  }

  if (coupled) {
    ExtRational threshold = (p_c - one).reciprocal();
    ExtRational m = max(report.indices.alpha(), report.indices.beta());
    int dim_needed = params.kind == SolutionKind::L1Delta ? 2 : 3;
    if (m < threshold && params.n >= dim_needed) {
      v.kind = VerdictKind::SingularExampleExists;
      v.constructible = params.kind != SolutionKind::L1Delta;
      return {std::move(v), std::move(report)};
    }
  }

  v.kind = VerdictKind::CriticalBoundary;
  if (first_failed) {
    bool boundary = relation_holds(first_failed->lhs, Relation::Equal, first_failed->rhs);
    v.reason = std::string(boundary ? "boundary equality on " : "condition fails: ") +
               first_failed->name;
  }
  return {std::move(v), std::move(report)};
}

KStarResult feasibility_kstar(const SystemParams& params) {
  const ExtRational one(1);
  const ExtRational p_c = params.critical();
  if (params.q + params.s < params.p + params.r)
    throw std::invalid_argument("feasibility_kstar requires swap-normalized parameters (q+s >= p+r)");
  if (params.p + params.r >= p_c)
    throw std::domain_error("Case III requires p+r < p_c");

  KStarResult out;
  if (p_c.is_finite() && params.p > p_c - one) {
    // p+r < p_c forces r < 1 here, so the denominator below is positive.
    out.k_star = (one - params.r) * p_c / (params.p + one - p_c);
  } else {
    out.k_star = ExtRational::infinity();
  }
  out.feasible =
      params.q * out.k_star.reciprocal() + params.s * p_c.reciprocal() < one;
  return out;
}

}  // namespace regula
