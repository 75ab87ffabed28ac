// exponents.cpp - Critical exponents, scaling indices and system parameters
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/exponents.hpp"

#include <stdexcept>

namespace regula {

const char* kind_name(SolutionKind k) {
  switch (k) {
    case SolutionKind::H01: return "h01";
    case SolutionKind::L1: return "l1";
    case SolutionKind::L1Delta: return "l1delta";
  }
  return "?";
}

std::optional<SolutionKind> kind_from_string(std::string_view s) {
  if (s == "h01" || s == "H01") return SolutionKind::H01;
  if (s == "l1" || s == "L1") return SolutionKind::L1;
  if (s == "l1delta" || s == "L1Delta" || s == "l1-delta") return SolutionKind::L1Delta;
  return std::nullopt;
}

const char* func_name(Func f) { return f == Func::U ? "u" : "v"; }

ExtRational critical_exponent(SolutionKind kind, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  switch (kind) {
    case SolutionKind::H01:
      if (n <= 2) return ExtRational::infinity();
      return ExtRational(n + 2, n - 2);
    case SolutionKind::L1:
      if (n <= 2) return ExtRational::infinity();
      return ExtRational(n, n - 2);
    case SolutionKind::L1Delta:
      if (n <= 1) return ExtRational::infinity();
      return ExtRational(n + 1, n - 1);
  }
  throw std::logic_error("unreachable");
}

ExtRational conjugate_exponent(const ExtRational& p_c) {
  if (p_c.is_infinite()) return ExtRational(1);
  if (p_c < ExtRational(1)) throw std::domain_error("conjugate exponent requires p >= 1");
  if (p_c == ExtRational(1)) return ExtRational::infinity();
  return p_c / (p_c - ExtRational(1));
}

ExtRational smoothing_gap(SolutionKind kind, int n) {
  ExtRational p_c = critical_exponent(kind, n);
  return ExtRational(1) - p_c.reciprocal();
}

bool is_smoothing_admissible(const ExtRational& m, const ExtRational& k,
                             SolutionKind kind, int n) {
  if (m < ExtRational(1)) throw std::domain_error("smoothing source exponent must be >= 1");
  if (m > k) throw std::domain_error("smoothing requires m <= k");
  return m.reciprocal() - k.reciprocal() < smoothing_gap(kind, n);
}

SystemParams SystemParams::make(int n, SolutionKind kind, ExtRational r,
                                ExtRational s, ExtRational p, ExtRational q,
                                ExtRational gamma, ExtRational sigma,
                                ExtRational theta) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (r.is_infinite() || s.is_infinite() || p.is_infinite() ||
      q.is_infinite() || gamma.is_infinite() || sigma.is_infinite())
    throw std::invalid_argument("r,s,p,q,gamma,sigma must be finite");
  if (r.sign() < 0 || s.sign() < 0) throw std::invalid_argument("r,s must be >= 0");
  if (p.sign() <= 0 || q.sign() <= 0) throw std::invalid_argument("p,q must be > 0");
  if (gamma.sign() < 0 || sigma.sign() < 0)
    throw std::invalid_argument("gamma,sigma must be >= 0");
  if (theta < ExtRational(1)) throw std::invalid_argument("theta must be >= 1 or inf");

  SystemParams out;
  out.n = n;
  out.kind = kind;
  out.r = std::move(r);
  out.s = std::move(s);
  out.p = std::move(p);
  out.q = std::move(q);
  out.theta = std::move(theta);
  ExtRational one(1);
  if (gamma < one) {
    out.gamma = one;
    out.gamma_raised = true;
  } else {
    out.gamma = std::move(gamma);
  }
  if (sigma < one) {
    out.sigma = one;
    out.sigma_raised = true;
  } else {
    out.sigma = std::move(sigma);
  }
  return out;
}

SystemParams SystemParams::swapped() const {
  SystemParams out = *this;
  std::swap(out.r, out.s);
  std::swap(out.p, out.q);
  std::swap(out.gamma, out.sigma);
  std::swap(out.gamma_raised, out.sigma_raised);
  return out;
}

const ExtRational& ScalingIndices::alpha() const {
  if (!alpha_) throw std::domain_error("scaling indices undefined: pq = (1-r)(1-s)");
  return *alpha_;
}

const ExtRational& ScalingIndices::beta() const {
  if (!beta_) throw std::domain_error("scaling indices undefined: pq = (1-r)(1-s)");
  return *beta_;
}

ScalingIndices scaling_indices(const SystemParams& params) {
  ExtRational one(1);
  ExtRational denom = params.p * params.q - (one - params.r) * (one - params.s);
  if (denom.is_zero()) return ScalingIndices(denom, std::nullopt, std::nullopt);
  ExtRational alpha = (params.p + one - params.s) / denom;
  ExtRational beta = (params.q + one - params.r) / denom;
  return ScalingIndices(denom, std::move(alpha), std::move(beta));
}

}  // namespace regula
