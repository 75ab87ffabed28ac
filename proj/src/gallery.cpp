// gallery.cpp - Explicit unbounded radial solutions and their memberships
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/gallery.hpp"

#include <cmath>
#include <stdexcept>

namespace regula {

double RadialPower::value(double rho) const { return c * std::pow(rho, -t) - offset; }

double RadialPower::deriv(double rho) const { return -c * t * std::pow(rho, -t - 1.0); }

double RadialPower::deriv2(double rho) const {
  return c * t * (t + 1.0) * std::pow(rho, -t - 2.0);
}

RadialFunction RadialPower::as_function() const {
  RadialPower self = *this;
  return RadialFunction{[self](double rho) { return self.value(rho); }, t};
}

RadialFunction RadialPower::gradient_magnitude() const {
  RadialPower self = *this;
  return RadialFunction{[self](double rho) { return std::fabs(self.deriv(rho)); },
                        t + 1.0};
}

const char* space_name(Space s) {
  switch (s) {
    case Space::Lk: return "Lk";
    case Space::LkDelta: return "Lk_delta";
    case Space::H10: return "H10";
    case Space::Linf: return "Linf";
  }
  return "?";
}

namespace {

struct PairIndices {
  ExtRational alpha, beta, A, B;
};

PairIndices exact_pair_indices(const SystemParams& params) {
  if (params.n < 3)
    throw std::domain_error("radial construction requires n >= 3");
  ScalingIndices idx = scaling_indices(params);
  if (!idx.defined())
    throw std::domain_error("construction requires pq != (1-r)(1-s)");
  const ExtRational two(2);
  ExtRational edge(params.n - 2);
  ExtRational A = two * idx.alpha() * (edge - two * idx.alpha());
  ExtRational B = two * idx.beta() * (edge - two * idx.beta());
  if (!(A.sign() > 0 && B.sign() > 0))
    throw std::domain_error("construction requires alpha,beta < (n-2)/2");
  return {idx.alpha(), idx.beta(), std::move(A), std::move(B)};
}

}  // namespace

std::pair<double, double> solve_coefficients(const SystemParams& params) {
  PairIndices pi = exact_pair_indices(params);
  const double lnA = std::log(to_double(pi.A));
  const double lnB = std::log(to_double(pi.B));
  const double r = to_double(params.r), s = to_double(params.s);
  const double p = to_double(params.p), q = to_double(params.q);
  const double det = (r - 1.0) * (s - 1.0) - p * q;  // = -(pq - (1-r)(1-s)) != 0
  const double x = ((s - 1.0) * lnA - p * lnB) / det;
  const double y = ((r - 1.0) * lnB - q * lnA) / det;
  return {std::exp(x), std::exp(y)};
}

SingularPair build_pair(const SystemParams& params) {
  PairIndices pi = exact_pair_indices(params);
  auto [c1, c2] = solve_coefficients(params);
  SingularPair pair;
  pair.params = params;
  pair.alpha = pi.alpha;
  pair.beta = pi.beta;
  pair.c1 = c1;
  pair.c2 = c2;
  pair.A = to_double(pi.A);
  pair.B = to_double(pi.B);
  pair.u = RadialPower{c1, 2.0 * to_double(pi.alpha), c1};
  pair.v = RadialPower{c2, 2.0 * to_double(pi.beta), c2};
  return pair;
}

double residual(const SingularPair& pair, std::span<const double> radii) {
  const double n = pair.params.n;
  const double r = to_double(pair.params.r), s = to_double(pair.params.s);
  const double p = to_double(pair.params.p), q = to_double(pair.params.q);
  double worst = 0.0;
  for (double rho : radii) {
    double lhs1 = -pair.u.deriv2(rho) - (n - 1.0) / rho * pair.u.deriv(rho);
    double lhs2 = -pair.v.deriv2(rho) - (n - 1.0) / rho * pair.v.deriv(rho);
    double us = pair.u.value(rho) + pair.c1;
    double vs = pair.v.value(rho) + pair.c2;
    double rhs1 = std::pow(us, r) * std::pow(vs, p);
    double rhs2 = std::pow(us, q) * std::pow(vs, s);
    worst = std::max(worst, std::fabs(lhs1 - rhs1) / std::fabs(rhs1));
    worst = std::max(worst, std::fabs(lhs2 - rhs2) / std::fabs(rhs2));
  }
  return worst;
}

bool MembershipReport::member(Func f, Space s) const {
  for (const MembershipEntry& e : entries)
    if (e.func == f && e.space == s) return e.analytic;
  return false;
}

MembershipReport membership(const SingularPair& pair,
                            std::span<const MembershipQuery> queries,
                            const QuadratureConfig& cfg) {
  const int n = pair.params.n;
  const ExtRational two(2);
  MembershipReport rep;
  rep.t_u = two * pair.alpha;
  rep.t_v = two * pair.beta;

  for (const MembershipQuery& qy : queries) {
    for (Func f : {Func::U, Func::V}) {
      const ExtRational& t = f == Func::U ? rep.t_u : rep.t_v;
      const RadialPower& fn = f == Func::U ? pair.u : pair.v;
      MembershipEntry e;
      e.func = f;
      e.space = qy.space;
      e.k = qy.k;

      NormResult nr;
      switch (qy.space) {
        case Space::Lk:
        case Space::LkDelta: {
          if (qy.k < ExtRational(1))
            throw std::domain_error("membership query requires k >= 1");
          e.analytic = t * qy.k < ExtRational(n);
          Weight w = qy.space == Space::Lk ? Weight::None : Weight::BoundaryDistance;
          nr = weighted_norm(fn.as_function(), qy.k, w, n, cfg);
          break;
        }
        case Space::H10: {
          e.analytic = t < ExtRational(n - 2, 2);
          nr = weighted_norm(fn.gradient_magnitude(), ExtRational(2), Weight::None,
                             n, cfg);
          break;
        }
        case Space::Linf: {
          e.analytic = !(t.sign() > 0);
          nr = weighted_norm(fn.as_function(), ExtRational::infinity(), Weight::None,
                             n, cfg);
          break;
        }
      }
      e.quadrature_divergent = nr.divergent;
      e.quadrature_value = nr.value;
      e.agree = e.analytic == !nr.divergent;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

PairRegime pair_regime(const SingularPair& pair) {
  const ExtRational h10_edge(pair.params.n - 2, 4);
  const ExtRational l1_edge(pair.params.n - 2, 2);
  PairRegime rg;
  rg.u_in_h10 = pair.alpha < h10_edge;
  rg.v_in_h10 = pair.beta < h10_edge;
  rg.f_in_l1 = pair.alpha < l1_edge;
  rg.g_in_l1 = pair.beta < l1_edge;
  rg.f_in_dual = pair.alpha < h10_edge;
  rg.g_in_dual = pair.beta < h10_edge;
  rg.h01_solution = rg.u_in_h10 && rg.v_in_h10 && rg.f_in_dual && rg.g_in_dual;
  rg.l1_solution = rg.f_in_l1 && rg.g_in_l1;
  return rg;
}

ScalarSharpExample scalar_sharp_example(int n, const ExtRational& m,
                                        const ExtRational& k,
                                        const QuadratureConfig& cfg) {
  if (m < ExtRational(1) || !(m < k))
    throw std::domain_error("sharp example requires 1 <= m < k");
  const ExtRational lower = ExtRational(n) / k;
  const ExtRational upper = ExtRational(n) / m - ExtRational(2);
  if (!(lower < upper))
    throw std::domain_error("example exists only beyond the smoothing boundary");

  ScalarSharpExample ex;
  ex.power = (lower + upper) / ExtRational(2);
  const double t = to_double(ex.power);
  ex.U = RadialPower{1.0, t, 1.0};
  ex.phi = RadialPower{t * (n - t - 2.0), t + 2.0, 0.0};

  NormResult pn = weighted_norm(ex.phi.as_function(), m, Weight::None, n, cfg);
  ex.phi_norm_m = pn.value;
  NormResult un = weighted_norm(ex.U.as_function(), k, Weight::None, n, cfg);
  ex.U_divergent_k = un.divergent;

  // residual of -Delta U = phi at sample radii, exact derivative formulas
  double worst = 0.0;
  for (double rho : {1e-3, 1e-2, 0.1, 0.5, 0.9, 0.999}) {
    double lhs = -ex.U.deriv2(rho) - (n - 1.0) / rho * ex.U.deriv(rho);
    double rhs = ex.phi.value(rho);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
  }
  ex.residual_max = worst;
  return ex;
}

}  // namespace regula
