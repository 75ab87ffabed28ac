// quadrature.cpp - Adaptive quadrature with power-law origin singularities
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/quadrature.hpp"

#include <cmath>

namespace regula {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    double fsum = f(c - x) + f(c + x);
    result_kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) result_gauss += kWg[i / 2] * fsum;
  }
  return {result_kronrod * h, std::fabs((result_kronrod - result_gauss) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int depth) {
  PanelEstimate e = gk15(f, a, b);
  if (e.error <= abs_tol || depth <= 0) return e.value;
  double m = 0.5 * (a + b);
  return integrate_rec(f, a, m, 0.5 * abs_tol, depth - 1) +
         integrate_rec(f, m, b, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  PanelEstimate first = gk15(f, a, b);
  double scale = std::max(std::fabs(first.value), 1e-300);
  return integrate_rec(f, a, b, rel_tol * scale, max_depth);
}

IntegralResult integrate_with_origin_singularity(
    const std::function<double(double)>& f, double b, const QuadratureConfig& cfg) {
  IntegralResult out;
  const double a0 = std::min(cfg.split_radius, 0.5 * b);
  double total = integrate_adaptive(f, a0, b, cfg.rel_tol * 0.1);

  double prev_panel = 0.0, prev_ratio = -1.0;
  double total_two_back = std::fabs(total), total_one_back = std::fabs(total);
  double hi = a0;
  for (int j = 0; j <= cfg.max_depth; ++j) {
    double lo = 0.5 * hi;
    double panel = integrate_adaptive(f, lo, hi, cfg.rel_tol * 0.1);
    total += panel;

    // Strong divergence: cumulative value grew tenfold over two refinements.
    if (j >= 2 && std::fabs(total) >= 10.0 * std::max(total_two_back, 1e-300)) {
      out.divergent = true;
      return out;
    }
    double ap = std::fabs(panel), app = std::fabs(prev_panel);
    double ratio = (j > 0 && app > 0.0) ? ap / app : -1.0;

    // Non-decaying panel contributions: logarithmic or mild power divergence.
    if (j >= 8 && ratio >= 0.999 && prev_ratio >= 0.999) {
      out.divergent = true;
      return out;
    }

    if (ap <= cfg.rel_tol * std::max(std::fabs(total), 1e-300)) {
      out.value = total;
      return out;
    }
    if (ratio > 0.0 && ratio < 0.999) {
      double tail = ap * ratio / (1.0 - ratio);
      if (tail <= cfg.rel_tol * std::max(std::fabs(total), 1e-300)) {
        out.value = total + (panel < 0.0 ? -tail : tail);
        return out;
      }
      if (j == cfg.max_depth) {
        out.value = total + (panel < 0.0 ? -tail : tail);
        out.converged = tail <= std::sqrt(cfg.rel_tol) * std::max(std::fabs(total), 1e-300);
        return out;
      }
    }

    total_two_back = total_one_back;
    total_one_back = std::fabs(total);
    prev_panel = panel;
    prev_ratio = ratio;
    hi = lo;
  }
  out.value = total;
  out.converged = false;
  return out;
}

}  // namespace regula
