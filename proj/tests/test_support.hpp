// test_support.hpp - Shared random generators for the test suites
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_TEST_SUPPORT_HPP
#define REGULA_TEST_SUPPORT_HPP

#include "regula/classifier.hpp"

#include <optional>
#include <random>

namespace regula::testing {

using Rng = std::mt19937_64;

/// Uniform rational num/den with 1 <= den <= max_den, 0 <= num <= max_num.
inline ExtRational rand_rational(Rng& rng, long max_num, long max_den,
                                 long min_num = 0) {
  std::uniform_int_distribution<long> dn(min_num, max_num);
  std::uniform_int_distribution<long> dd(1, max_den);
  return ExtRational(dn(rng), dd(rng));
}

inline SolutionKind rand_kind(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return SolutionKind::H01;
    case 1: return SolutionKind::L1;
    default: return SolutionKind::L1Delta;
  }
}

/// Any structurally valid parameter tuple (bounded numerators/denominators).
inline SystemParams rand_params(Rng& rng, int max_n = 9) {
  std::uniform_int_distribution<int> dn(1, max_n);
  int n = dn(rng);
  SolutionKind kind = rand_kind(rng);
  ExtRational r = rand_rational(rng, 12, 6);
  ExtRational s = rand_rational(rng, 12, 6);
  ExtRational p = rand_rational(rng, 12, 6, 1);
  ExtRational q = rand_rational(rng, 12, 6, 1);
  ExtRational gamma = rand_rational(rng, 12, 6);
  ExtRational sigma = rand_rational(rng, 12, 6);
  ExtRational theta =
      std::uniform_int_distribution<int>(0, 4)(rng) == 0
          ? ExtRational::infinity()
          : ExtRational(1) + rand_rational(rng, 40, 4);
  return SystemParams::make(n, kind, r, s, p, q, gamma, sigma, theta);
}

/// Rejection-samples a RegularityCertified tuple. Draws are biased toward
/// subcritical powers so every bootstrap case shows up at a healthy rate.
inline std::optional<SystemParams> rand_certified(Rng& rng, int max_tries = 400,
                                                  bool force_case2 = false) {
  for (int t = 0; t < max_tries; ++t) {
    std::uniform_int_distribution<int> dn(1, 7);
    int n = dn(rng);
    SolutionKind kind = rand_kind(rng);
    ExtRational pc = critical_exponent(kind, n);
    auto sub = [&](long num_cap) {
      // a rational in [0, p_c) when p_c is finite, else a small one
      ExtRational x = rand_rational(rng, num_cap, 5);
      if (pc.is_finite()) {
        ExtRational cap = pc * rand_rational(rng, 9, 10, 1) / ExtRational(10);
        if (x >= cap) x = cap;
      }
      return x;
    };
    ExtRational r = sub(8), s = sub(8);
    ExtRational p = sub(10), q = sub(10);
    if (p.is_zero()) p = ExtRational(1, 2);
    if (q.is_zero()) q = ExtRational(1, 2);
    if (force_case2 && pc.is_finite()) {
      // exact Case II after the swap reduction: p = p_c - 1 on the equation
      // carrying the smaller growth sum
      p = pc - ExtRational(1);
      if (q + s < p + r) q = p + r - s + ExtRational(1, 3);
    }
    ExtRational gamma = ExtRational(1) + sub(4);
    ExtRational sigma = ExtRational(1) + sub(4);
    ExtRational theta = std::uniform_int_distribution<int>(0, 3)(rng) == 0
                            ? ExtRational::infinity()
                            : conjugate_exponent(pc) + rand_rational(rng, 12, 3) +
                                  ExtRational(1, 7);
    SystemParams params;
    try {
      params = SystemParams::make(n, kind, r, s, p, q, gamma, sigma, theta);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto [verdict, report] = classify(params);
    (void)report;
    if (verdict.certified()) return params;
  }
  return std::nullopt;
}

}  // namespace regula::testing

#endif
