// gallery.hpp - Explicit unbounded radial solutions and their memberships
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_GALLERY_HPP
#define REGULA_GALLERY_HPP

#include "regula/exponents.hpp"
#include "regula/radial.hpp"

#include <span>
#include <vector>

namespace regula {

/// x -> c * |x|^(-t) - offset on the unit ball.
struct RadialPower {
  double c = 1.0;
  double t = 1.0;
  double offset = 0.0;

  double value(double rho) const;
  double deriv(double rho) const;
  double deriv2(double rho) const;
  RadialFunction as_function() const;
  RadialFunction gradient_magnitude() const;
};

/// The explicit pair (u, v) = (c1 |x|^(-2a) - c1, c2 |x|^(-2b) - c2) solving
///   -Du = (u+c1)^r (v+c2)^p,  -Dv = (u+c1)^q (v+c2)^s on B_1,
/// with c1, c2 fixed by c1^(r-1) c2^p = A, c1^q c2^(s-1) = B where
/// A = 2a(n-2-2a), B = 2b(n-2-2b).
struct SingularPair {
  SystemParams params;
  ExtRational alpha, beta;  // exact scaling indices
  RadialPower u, v;
  double c1 = 0.0, c2 = 0.0;
  double A = 0.0, B = 0.0;  // rhs constants
};

/// Solves the 2x2 log-linear coefficient system. Throws std::domain_error
/// unless n >= 3, pq != (1-r)(1-s) and 0 < alpha, beta < (n-2)/2.
std::pair<double, double> solve_coefficients(const SystemParams& params);

SingularPair build_pair(const SystemParams& params);

/// Max relative discrepancy of -u'' - (n-1)/rho u' against the nonlinearity
/// at the given radii, over both equations, using the exact derivative
/// formulas of RadialPower.
double residual(const SingularPair& pair, std::span<const double> radii);

enum class Space { Lk, LkDelta, H10, Linf };

const char* space_name(Space s);

struct MembershipQuery {
  Space space = Space::Lk;
  ExtRational k;  // used for Lk and LkDelta
};

struct MembershipEntry {
  Func func = Func::U;
  Space space = Space::Lk;
  ExtRational k;
  bool analytic = false;       // exact threshold verdict
  bool quadrature_divergent = false;
  double quadrature_value = 0.0;
  bool agree = false;
};

struct MembershipReport {
  ExtRational t_u, t_v;  // singularity powers 2*alpha, 2*beta
  std::vector<MembershipEntry> entries;

  bool member(Func f, Space s) const;  // first matching entry's analytic flag
};

/// Analytic criteria: |x|^(-t) lies in L^k(B_1) iff t k < n (the boundary
/// weight is immaterial at an interior singularity), in H^1_0 iff
/// t < (n-2)/2, never in L^inf for t > 0. Every verdict is cross-checked by
/// quadrature; thresholds are compared in exact rationals.
MembershipReport membership(const SingularPair& pair,
                            std::span<const MembershipQuery> queries,
                            const QuadratureConfig& cfg = {});

/// Regime of the pair against the two construction theorems: an H^1_0
/// example needs both indices below (n-2)/4, an L^1 example below (n-2)/2.
struct PairRegime {
  bool u_in_h10 = false, v_in_h10 = false;
  bool f_in_l1 = false, g_in_l1 = false;
  bool f_in_dual = false, g_in_dual = false;  // L^(2n/(n+2)), sufficient for H^-1
  bool h01_solution = false;
  bool l1_solution = false;
};

PairRegime pair_regime(const SingularPair& pair);

struct ScalarSharpExample {
  ExtRational power;     // t with n/k < t < n/m - 2 (midpoint)
  RadialPower U;         // rho^(-t) - 1
  RadialPower phi;       // t(n-t-2) rho^(-t-2), the exact source of U
  double phi_norm_m = 0.0;
  bool U_divergent_k = false;
  double residual_max = 0.0;
};

/// The scalar sharpness example beyond the smoothing boundary: requires
/// 1 <= m < k <= inf with 1/m - 1/k > 2/n strictly, else refuses
/// (std::domain_error).
ScalarSharpExample scalar_sharp_example(int n, const ExtRational& m,
                                        const ExtRational& k,
                                        const QuadratureConfig& cfg = {});

}  // namespace regula

#endif
