// exponents.hpp - Critical exponents, scaling indices and system parameters
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_EXPONENTS_HPP
#define REGULA_EXPONENTS_HPP

#include "regula/rational.hpp"

#include <optional>
#include <string_view>

namespace regula {

/// The three notions of weak solution the engine classifies.
enum class SolutionKind { H01, L1, L1Delta };

const char* kind_name(SolutionKind k);
std::optional<SolutionKind> kind_from_string(std::string_view s);

/// Component selector for the two unknowns.
enum class Func { U, V };

const char* func_name(Func f);

/// Critical exponent p_c of the given solution class in dimension n:
///   H01      -> inf if n <= 2, else (n+2)/(n-2)
///   L1       -> inf if n <= 2, else n/(n-2)
///   L1Delta  -> inf if n <= 1, else (n+1)/(n-1)
ExtRational critical_exponent(SolutionKind kind, int n);

/// Conjugate exponent: 1/p' + 1/p = 1. conjugate(inf) = 1, conjugate(1) = inf.
/// Throws std::domain_error for finite p < 1.
ExtRational conjugate_exponent(const ExtRational& p_c);

/// Per-step integrability gain bound of the linear smoothing estimate,
/// 1/p'_c = 1 - 1/p_c (2/n for L1, 4/(n+2) for H01, 2/(n+1) for L1Delta).
ExtRational smoothing_gap(SolutionKind kind, int n);

/// Exact test of 1/m - 1/k < smoothing_gap. Requires 1 <= m <= k <= inf.
bool is_smoothing_admissible(const ExtRational& m, const ExtRational& k,
                             SolutionKind kind, int n);

/// Parameters of the two-component system
///   -Du = f, -Dv = g,  |f| <= C(|u|^r |v|^p + |u|^gamma) + h,
///                      |g| <= C(|u|^q |v|^s + |v|^sigma) + h,
/// with h controlled at integrability index theta in the class norm scale.
/// gamma, sigma below 1 are raised to 1 at construction (|u|^g <= 1 + |u|
/// on a bound), with the adjustment recorded.
struct SystemParams {
  int n = 3;
  SolutionKind kind = SolutionKind::L1;
  ExtRational r, s;          // >= 0, finite
  ExtRational p, q;          // > 0, finite
  ExtRational gamma, sigma;  // >= 1 after normalization, finite
  ExtRational theta;         // >= 1 or inf

  bool gamma_raised = false;
  bool sigma_raised = false;

  static SystemParams make(int n, SolutionKind kind, ExtRational r,
                           ExtRational s, ExtRational p, ExtRational q,
                           ExtRational gamma, ExtRational sigma,
                           ExtRational theta);

  /// Same system with the two equations exchanged: p<->q, r<->s, gamma<->sigma.
  SystemParams swapped() const;

  ExtRational critical() const { return critical_exponent(kind, n); }
  ExtRational conj_critical() const { return conjugate_exponent(critical()); }
  ExtRational gap() const { return smoothing_gap(kind, n); }
};

/// Scaling indices (alpha, beta) solving (r-1)a + p b = 1, q a + (s-1)b = 1.
/// denom = pq - (1-r)(1-s). The quotients are defined only for denom != 0;
/// asking for them at denom = 0 throws.
class ScalingIndices {
public:
  ScalingIndices(ExtRational denom, std::optional<ExtRational> alpha,
                 std::optional<ExtRational> beta)
      : denom_(std::move(denom)), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  const ExtRational& denom() const { return denom_; }
  bool defined() const { return alpha_.has_value(); }
  const ExtRational& alpha() const;
  const ExtRational& beta() const;

private:
  ExtRational denom_;
  std::optional<ExtRational> alpha_, beta_;
};

ScalingIndices scaling_indices(const SystemParams& params);

}  // namespace regula

#endif
