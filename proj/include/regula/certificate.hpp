// certificate.hpp - Bootstrap certificates: data model and text schema
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_CERTIFICATE_HPP
#define REGULA_CERTIFICATE_HPP

#include "regula/exponents.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regula {

enum class CaseTag { I, II, III };
enum class Equation { First, Second };

const char* case_name(CaseTag c);
const char* equation_name(Equation e);

/// Parameters the planner fixed to realize the chain. Every recorded value
/// satisfies, exactly, the strict inequalities required by the steps that
/// were actually emitted; `swapped` records the q+s >= p+r reduction.
struct SelectedParameters {
  CaseTag case_tag = CaseTag::I;
  bool swapped = false;
  ExtRational k;                      // base bootstrap exponent
  std::optional<ExtRational> k1;      // improved u-exponent (Cases II/III)
  std::optional<ExtRational> epsilon; // arithmetic increment / k* clearance
  std::optional<ExtRational> tau;     // contraction ratio (Cases II/III)
  std::optional<ExtRational> eta;     // geometric ratio
};

/// One norm-improvement step. Exponents name where ||u|| and ||v|| are
/// already controlled; the step bounds the target's norm at result_exp by
/// a Holder combination (holder_exp), the pure power (pure_exp) and the
/// source term, capped at h_cap = min(holder_exp, pure_exp, theta).
struct Step {
  Equation equation = Equation::First;
  Func target = Func::U;
  ExtRational u_exp, v_exp;
  ExtRational holder_exp;  // 1/rho = r/u_exp + p/v_exp (resp. q/u_exp + s/v_exp)
  ExtRational pure_exp;    // 1/varrho = gamma/u_exp (resp. sigma/v_exp)
  ExtRational h_cap;       // min(holder_exp, pure_exp, theta)
  ExtRational result_exp;
  ExtRational margin;      // gap - (1/h_cap - 1/result_exp), > 0
};

struct BaseEntry {
  Func func = Func::U;
  ExtRational exponent;  // strictly below p_c
};

/// An ordered, independently checkable chain of steps driving both
/// components to the supremum norm. Stored in swapped coordinates when
/// selected.swapped is set.
struct Certificate {
  SystemParams params;
  SelectedParameters selected;
  std::vector<BaseEntry> base;
  std::vector<Step> steps;
  bool terminal = false;  // both u and v reach result_exp = inf
};

class CertificateParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Stable, versioned, line-oriented text form. Rationals render "num/den",
/// infinity renders "inf". serialize/parse round-trip bit-exactly.
std::string serialize(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

bool operator==(const Step& a, const Step& b);
bool operator==(const BaseEntry& a, const BaseEntry& b);
bool operator==(const SelectedParameters& a, const SelectedParameters& b);
bool operator==(const Certificate& a, const Certificate& b);

}  // namespace regula

#endif
