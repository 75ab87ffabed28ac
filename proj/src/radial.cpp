// radial.cpp - Radial Poisson solves and weighted norms on the unit ball
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/radial.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace regula {

double sphere_surface_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

/// F(s) = int_0^s t^{n-1} phi(t) dt, evaluated through a cumulative anchor
/// table so nested quadrature stays linear in the number of requests.
class CumulativeSource {
public:
  CumulativeSource(int n, RadialFunction phi, const QuadratureConfig& cfg)
      : n_(n), phi_(std::move(phi)), tol_(cfg.rel_tol * 1e-2) {
    auto g = [this](double t) { return std::pow(t, n_ - 1) * phi_(t); };
    auto g_abs = [this](double t) { return std::pow(t, n_ - 1) * std::fabs(phi_(t)); };
    IntegralResult mass = integrate_with_origin_singularity(g_abs, 1.0, cfg);
    if (mass.divergent) throw std::domain_error("source not integrable on the ball");

    double lo = cfg.split_radius * std::ldexp(1.0, -cfg.max_depth);
    IntegralResult head = integrate_with_origin_singularity(g, lo, cfg);
    grid_.push_back(lo);
    acc_.push_back(head.value);
    // geometric anchors up to the split radius, then linear to 1
    double s = lo;
    while (s < cfg.split_radius * 0.999) {
      double nxt = 2.0 * s;
      acc_.push_back(acc_.back() + integrate_adaptive(g, s, nxt, tol_));
      grid_.push_back(nxt);
      s = nxt;
    }
    const int linear_panels = 256;
    double step = (1.0 - s) / linear_panels;
    for (int i = 1; i <= linear_panels; ++i) {
      double nxt = i == linear_panels ? 1.0 : s + step * i;
      acc_.push_back(acc_.back() + integrate_adaptive(g, grid_.back(), nxt, tol_));
      grid_.push_back(nxt);
    }
  }

  double operator()(double s) const {
    auto g = [this](double t) { return std::pow(t, n_ - 1) * phi_(t); };
    if (s <= grid_.front()) {
      QuadratureConfig tiny;
      tiny.rel_tol = tol_;
      tiny.split_radius = s;
      return integrate_with_origin_singularity(g, s, tiny).value;
    }
    size_t i = std::upper_bound(grid_.begin(), grid_.end(), s) - grid_.begin();
    double anchor = grid_[i - 1];
    double base = acc_[i - 1];
    if (s == anchor) return base;
    return base + integrate_adaptive(g, anchor, s, tol_);
  }

private:
  int n_;
  RadialFunction phi_;
  double tol_;
  std::vector<double> grid_;
  std::vector<double> acc_;
};

}  // namespace

RadialFunction poisson_solve_radial(int n, const RadialFunction& phi,
                                    const QuadratureConfig& cfg) {
  auto F = std::make_shared<CumulativeSource>(n, phi, cfg);
  double tol = cfg.rel_tol;
  RadialFunction u;
  u.eval = [F, n, tol](double rho) {
    if (rho >= 1.0) return 0.0;
    auto integrand = [&](double s) { return std::pow(s, 1 - n) * (*F)(s); };
    return integrate_adaptive(integrand, rho, 1.0, tol);
  };
  return u;
}

std::vector<double> poisson_solve_on_grid(int n, const RadialFunction& phi,
                                          const std::vector<double>& grid,
                                          const QuadratureConfig& cfg) {
  CumulativeSource F(n, phi, cfg);
  auto integrand = [&](double s) { return std::pow(s, 1 - n) * F(s); };
  std::vector<double> out(grid.size(), 0.0);
  double acc = 0.0;
  double upper = 1.0;
  for (size_t i = grid.size(); i-- > 0;) {
    double rho = grid[i];
    if (rho < upper) {
      acc += integrate_adaptive(integrand, rho, upper, cfg.rel_tol);
      upper = rho;
    }
    out[i] = acc;
  }
  return out;
}

NormResult weighted_norm(const RadialFunction& f, const ExtRational& k,
                         Weight weight, int n, const QuadratureConfig& cfg) {
  NormResult out;
  if (k.is_infinite()) {
    // probe the origin for unbounded growth
    double prev = std::fabs(f(cfg.split_radius));
    double sup = prev;
    int growing = 0;
    double rho = cfg.split_radius;
    for (int j = 0; j < cfg.max_depth; ++j) {
      rho *= 0.5;
      double cur = std::fabs(f(rho));
      sup = std::max(sup, cur);
      if (cur > prev * (1.0 + 1e-9)) ++growing; else growing = 0;
      if (growing >= 8) {
        out.divergent = true;
        return out;
      }
      prev = cur;
    }
    const int samples = 512;
    for (int i = 1; i <= samples; ++i)
      sup = std::max(sup, std::fabs(f(static_cast<double>(i) / samples)));
    out.value = sup;
    return out;
  }

  if (k < ExtRational(1)) throw std::domain_error("norm exponent must be >= 1");
  const double kd = to_double(k);
  const double area = sphere_surface_area(n);
  auto g = [&](double rho) {
    double w = weight == Weight::BoundaryDistance ? 1.0 - rho : 1.0;
    return std::pow(std::fabs(f(rho)), kd) * w * area * std::pow(rho, n - 1);
  };
  IntegralResult I = integrate_with_origin_singularity(g, 1.0, cfg);
  if (I.divergent) {
    out.divergent = true;
    return out;
  }
  out.value = std::pow(I.value, 1.0 / kd);
  out.converged = I.converged;
  return out;
}

PowerFamilyMember sharp_power_family(int n, double t) {
  PowerFamilyMember m;
  m.u.eval = [t](double rho) { return std::pow(rho, -t) - 1.0; };
  m.u.power_hint = t;
  double c = t * (n - 2.0 - t);
  m.phi.eval = [c, t](double rho) { return c * std::pow(rho, -t - 2.0); };
  m.phi.power_hint = t + 2.0;
  return m;
}

SharpnessReport verify_smoothing_sharpness(int n, const ExtRational& m,
                                           const ExtRational& k,
                                           const QuadratureConfig& cfg) {
  if (m < ExtRational(1) || m > k)
    throw std::domain_error("sharpness check requires 1 <= m <= k");
  SharpnessReport rep;
  rep.admissible = is_smoothing_admissible(m, k, SolutionKind::L1, n);
  const ExtRational upper = ExtRational(n) / m - ExtRational(2);  // n/m - 2

  if (rep.admissible) {
    if (upper.sign() > 0) {
      rep.power = upper * ExtRational(99, 100);
      PowerFamilyMember fam = sharp_power_family(n, to_double(rep.power));
      NormResult un = weighted_norm(fam.u, k, Weight::None, n, cfg);
      NormResult pn = weighted_norm(fam.phi, m, Weight::None, n, cfg);
      rep.u_norm = un.value;
      rep.u_divergent = un.divergent;
      rep.phi_norm = pn.value;
      if (!un.divergent && !pn.divergent && pn.value > 0.0)
        rep.ratio = un.value / pn.value;
    } else {
      // no singular probe exists below n/m - 2; use the constant source
      RadialFunction one{[](double) { return 1.0; }, 0.0};
      RadialFunction u{[n](double rho) { return (1.0 - rho * rho) / (2.0 * n); }, 0.0};
      rep.phi_norm = weighted_norm(one, m, Weight::None, n, cfg).value;
      rep.u_norm = weighted_norm(u, k, Weight::None, n, cfg).value;
      rep.ratio = rep.u_norm / rep.phi_norm;
    }
    return rep;
  }

  const ExtRational lower = ExtRational(n) / k;  // n/k
  if (!(lower < upper)) {
    rep.boundary = true;
    return rep;
  }
  rep.power = (lower + upper) / ExtRational(2);
  PowerFamilyMember fam = sharp_power_family(n, to_double(rep.power));
  NormResult pn = weighted_norm(fam.phi, m, Weight::None, n, cfg);
  NormResult un = weighted_norm(fam.u, k, Weight::None, n, cfg);
  rep.phi_norm = pn.value;
  rep.u_norm = un.divergent ? 0.0 : un.value;
  rep.u_divergent = un.divergent;
  return rep;
}

}  // namespace regula
