// radial.hpp - Radial Poisson solves and weighted norms on the unit ball
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_RADIAL_HPP
#define REGULA_RADIAL_HPP

#include "regula/exponents.hpp"
#include "regula/quadrature.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace regula {

/// A radial profile on (0, 1]. The hint, when present, is the leading power
/// t of the behavior f ~ c * rho^(-t) at the origin.
struct RadialFunction {
  std::function<double(double)> eval;
  std::optional<double> power_hint;

  double operator()(double rho) const { return eval(rho); }
};

/// Surface area of the unit sphere S^{n-1} in R^n.
double sphere_surface_area(int n);

/// Dirichlet solve of -Laplace(u) = phi on the unit ball for radial phi:
///   u(rho) = int_rho^1 s^{1-n} int_0^s t^{n-1} phi(t) dt ds,  u(1) = 0,
/// by nested adaptive quadrature. Throws std::domain_error when the source
/// fails int_0^1 t^{n-1} |phi| < infinity ("source not integrable on the ball").
RadialFunction poisson_solve_radial(int n, const RadialFunction& phi,
                                    const QuadratureConfig& cfg = {});

/// Evaluates the solve at an increasing grid in one cumulative sweep.
std::vector<double> poisson_solve_on_grid(int n, const RadialFunction& phi,
                                          const std::vector<double>& grid,
                                          const QuadratureConfig& cfg = {});

enum class Weight { None, BoundaryDistance };

struct NormResult {
  double value = 0.0;
  bool divergent = false;
  bool converged = true;
};

/// (int_0^1 |f|^k w(rho) omega_{n-1} rho^{n-1} drho)^{1/k}, w = 1 or (1-rho).
/// k = inf probes the origin for unbounded growth. Divergence is an explicit
/// result value, never an exception.
NormResult weighted_norm(const RadialFunction& f, const ExtRational& k,
                         Weight weight, int n, const QuadratureConfig& cfg = {});

/// One member of the power family U = rho^(-t) - 1 with its exact source
/// phi = t(n-2-t) rho^(-t-2), satisfying -Laplace(U) = phi on the ball.
struct PowerFamilyMember {
  RadialFunction u;
  RadialFunction phi;
};

PowerFamilyMember sharp_power_family(int n, double t);

struct SharpnessReport {
  bool admissible = false;
  bool boundary = false;  // 1/m - 1/k equals the gap exactly; nothing to build
  ExtRational power;      // exponent t of the probe family (0 for the trivial family)
  double phi_norm = 0.0;  // ||phi||_{L^m(B_1)}
  double u_norm = 0.0;    // ||u||_{L^k(B_1)} when finite
  bool u_divergent = false;
  double ratio = 0.0;     // u_norm / phi_norm when both finite
};

/// Numerical check that the smoothing bound 1/m - 1/k < 2/n is sharp for the
/// L1 class: inside the bound the family norm ratio is finite; beyond it the
/// probe source is in L^m while the solution escapes L^k.
SharpnessReport verify_smoothing_sharpness(int n, const ExtRational& m,
                                           const ExtRational& k,
                                           const QuadratureConfig& cfg = {});

}  // namespace regula

#endif
