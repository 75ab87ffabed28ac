// classifier.hpp - Optimal-condition evaluation and verdicts
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_CLASSIFIER_HPP
#define REGULA_CLASSIFIER_HPP

#include "regula/exponents.hpp"

#include <string>
#include <utility>
#include <vector>

namespace regula {

enum class Relation { Less, LessEq, Greater, GreaterEq, Equal };

const char* relation_symbol(Relation rel);
bool relation_holds(const ExtRational& lhs, Relation rel, const ExtRational& rhs);

/// One exact comparison of the condition set, with its outcome.
struct Check {
  std::string name;
  ExtRational lhs;
  Relation rel = Relation::Less;
  ExtRational rhs;
  bool satisfied = false;
};

struct ConditionReport {
  ExtRational p_c;
  ExtRational p_c_conj;
  ScalingIndices indices{ExtRational(0), std::nullopt, std::nullopt};
  std::vector<Check> checks;
  std::vector<std::string> redundancy_notes;

  const Check* find(std::string_view name) const;
};

enum class VerdictKind {
  RegularityCertified,
  SingularExampleExists,
  CriticalBoundary,
  OutsideScope
};

struct Verdict {
  VerdictKind kind = VerdictKind::CriticalBoundary;
  bool constructible = false;  // meaningful for SingularExampleExists
  std::string reason;

  bool certified() const { return kind == VerdictKind::RegularityCertified; }
};

const char* verdict_name(VerdictKind k);

/// Stable numeric code shared by the CLI exit status and sweep CSV cells:
/// 0 certified, 10 singular example, 20 critical boundary, 30 outside scope.
int verdict_code(VerdictKind k);

/// Evaluates the full condition set for the parameter tuple and returns the
/// verdict with a condition-by-condition report.
///
/// For pq > (1-r)(1-s) the checks are
///   max{alpha,beta} > 1/(p_c - 1),  r,s,gamma,sigma < p_c,
///   min{p+r, q+s} < p_c,            theta > p'_c,
/// and for pq <= (1-r)(1-s) the first check is replaced by
///   pq - (1-r)(1-s) < (p_c - 1) * max{p+1-s, q+1-r}.
/// Any comparison landing exactly on its boundary yields CriticalBoundary.
/// When r,s <= 1 the min{p+r,q+s} check is redundant and its failure alone
/// never blocks certification.
std::pair<Verdict, ConditionReport> classify(const SystemParams& params);

struct KStarResult {
  ExtRational k_star;
  bool feasible = false;
};

/// k* is the largest integrability the first-equation bootstrap can reach
/// when p >= p_c - 1: the solution of r/k* + p/p_c - 1/k* = 1/p'_c, i.e.
/// (1-r) p_c / (p + 1 - p_c) for p > p_c - 1 and inf for p <= p_c - 1.
/// feasible = q/k* + s/p_c < 1 (with 1/inf = 0), which is equivalent to
/// pq - (1-r)(1-s) < (p_c - 1)(q + 1 - r).
///
/// Requires swap-normalized parameters (q+s >= p+r) and p+r < p_c.
KStarResult feasibility_kstar(const SystemParams& params);

}  // namespace regula

#endif
