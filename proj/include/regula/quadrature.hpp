// quadrature.hpp - Adaptive quadrature with power-law origin singularities
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_QUADRATURE_HPP
#define REGULA_QUADRATURE_HPP

#include <functional>

namespace regula {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  int max_depth = 40;           // dyadic refinements toward the singularity
  double split_radius = 1e-3;   // geometric panels start below this radius
};

struct IntegralResult {
  double value = 0.0;
  bool divergent = false;
  bool converged = true;
};

/// Gauss-Kronrod 7-15 with recursive bisection on a regular interval.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth = 52);

/// Integral over (0, b] of an integrand that is smooth away from 0 and
/// behaves like a power law near 0. Descends geometric panels toward the
/// origin; a convergent power tail is summed by geometric extrapolation.
/// Divergence is an explicit result, declared when the cumulative value
/// grows tenfold across two dyadic refinements or the panel contributions
/// stop decaying.
IntegralResult integrate_with_origin_singularity(
    const std::function<double(double)>& f, double b, const QuadratureConfig& cfg);

}  // namespace regula

#endif
