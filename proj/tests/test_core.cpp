// test_core.cpp - Exact rational scalars and the closed-form exponent algebra
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regula/exponents.hpp"
#include "test_support.hpp"

using namespace regula;
using regula::testing::Rng;
using regula::testing::rand_rational;

namespace {
const ExtRational inf = ExtRational::infinity();
}

TEST_CASE("rational arithmetic is exact and canonical") {
  ExtRational a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  CHECK(a.str() == "1/2");
  CHECK(ExtRational(-3, 6).str() == "-1/2");
  CHECK((ExtRational(1, 3) + ExtRational(1, 6)) == ExtRational(1, 2));
  CHECK((ExtRational(22, 7) * ExtRational(7, 11)) == ExtRational(2));
  CHECK((ExtRational(1, 3) - ExtRational(1, 2)) == ExtRational(-1, 6));
  CHECK((ExtRational(5) / ExtRational(4)) == ExtRational(5, 4));
  CHECK_THROWS_AS(ExtRational(1, 1) / ExtRational(0), std::domain_error);
  CHECK_THROWS_AS(ExtRational(1, 0), std::domain_error);
}

TEST_CASE("infinity is one-sided and totally ordered above every finite value") {
  CHECK(inf > ExtRational(1000000));
  CHECK(inf == inf);
  CHECK(ExtRational(3, 2) < inf);
  CHECK((inf + ExtRational(-5)) == inf);
  CHECK((inf - ExtRational(7)) == inf);
  CHECK((inf * ExtRational(2, 3)) == inf);
  CHECK((ExtRational(4) / inf) == ExtRational(0));
  CHECK(inf.reciprocal() == ExtRational(0));
  CHECK_THROWS_AS(ExtRational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(ExtRational(3) - inf, std::domain_error);
  CHECK_THROWS_AS(inf - inf, std::domain_error);
  CHECK_THROWS_AS(inf * ExtRational(0), std::domain_error);
  CHECK_THROWS_AS(inf * ExtRational(-1), std::domain_error);
  CHECK_THROWS_AS(inf / inf, std::domain_error);
  CHECK_THROWS_AS(-inf, std::domain_error);
}

TEST_CASE("string forms: num/den, integers, exact decimals, inf") {
  CHECK(ExtRational::from_string("3/4") == ExtRational(3, 4));
  CHECK(ExtRational::from_string("-3/4") == ExtRational(-3, 4));
  CHECK(ExtRational::from_string("7") == ExtRational(7));
  CHECK(ExtRational::from_string("2.75") == ExtRational(11, 4));
  CHECK(ExtRational::from_string("-0.5") == ExtRational(-1, 2));
  CHECK(ExtRational::from_string("inf") == inf);
  CHECK_THROWS_AS(ExtRational::from_string("2..5"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRational::from_string(""), std::invalid_argument);

  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    ExtRational x = rand_rational(rng, 5000, 999, -5000);
    CHECK(ExtRational::from_string(x.str()) == x);
  }
  CHECK(ExtRational::from_string(inf.str()) == inf);
}

TEST_CASE("critical exponents per class and dimension") {
  CHECK(critical_exponent(SolutionKind::H01, 3) == ExtRational(5));
  CHECK(critical_exponent(SolutionKind::L1Delta, 1) == inf);
  CHECK(critical_exponent(SolutionKind::L1, 4) == ExtRational(2));
  CHECK(critical_exponent(SolutionKind::H01, 2) == inf);
  CHECK(critical_exponent(SolutionKind::L1, 2) == inf);
  CHECK(critical_exponent(SolutionKind::L1Delta, 2) == ExtRational(3));
  CHECK_THROWS_AS(critical_exponent(SolutionKind::L1, 0), std::invalid_argument);

  for (int n = 1; n <= 30; ++n)
    for (SolutionKind k : {SolutionKind::H01, SolutionKind::L1, SolutionKind::L1Delta})
      CHECK(critical_exponent(k, n) > ExtRational(1));
}

TEST_CASE("conjugate exponent: values, errors, involution on (1, inf]") {
  CHECK(conjugate_exponent(ExtRational(5)) == ExtRational(5, 4));
  // cross-check: 1/(5/4) = 4/5 = 4/(n+2) at n = 3
  CHECK(conjugate_exponent(ExtRational(5)).reciprocal() == ExtRational(4, 5));
  CHECK(conjugate_exponent(inf) == ExtRational(1));
  CHECK(conjugate_exponent(ExtRational(2)) == ExtRational(2));
  CHECK_THROWS_AS(conjugate_exponent(ExtRational(9, 10)), std::domain_error);

  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    ExtRational x = ExtRational(1) + rand_rational(rng, 60, 12, 1);
    CHECK(conjugate_exponent(conjugate_exponent(x)) == x);
  }
  CHECK(conjugate_exponent(conjugate_exponent(inf)) == inf);
}

TEST_CASE("smoothing gap values and the identity gap = 1 - 1/p_c") {
  CHECK(smoothing_gap(SolutionKind::L1, 3) == ExtRational(2, 3));
  CHECK(smoothing_gap(SolutionKind::L1Delta, 3) == ExtRational(1, 2));
  CHECK(smoothing_gap(SolutionKind::L1, 1) == ExtRational(1));
  CHECK(smoothing_gap(SolutionKind::H01, 3) == ExtRational(4, 6));  // 4/(n+2)
  for (int n = 1; n <= 30; ++n)
    for (SolutionKind k : {SolutionKind::H01, SolutionKind::L1, SolutionKind::L1Delta}) {
      ExtRational pc = critical_exponent(k, n);
      CHECK(smoothing_gap(k, n) == ExtRational(1) - pc.reciprocal());
      CHECK(smoothing_gap(k, n) == conjugate_exponent(pc).reciprocal());
    }
}

TEST_CASE("smoothing admissibility is a strict exact comparison") {
  CHECK(is_smoothing_admissible(ExtRational(3, 2), ExtRational(3, 2),
                                SolutionKind::L1, 3));
  CHECK_FALSE(is_smoothing_admissible(ExtRational(1), ExtRational(3),
                                      SolutionKind::L1, 3));  // boundary 2/3
  CHECK(is_smoothing_admissible(ExtRational(1), ExtRational(29, 10),
                                SolutionKind::L1, 3));  // 19/29 < 2/3
  CHECK_THROWS_AS(is_smoothing_admissible(ExtRational(3), ExtRational(2),
                                          SolutionKind::L1, 3),
                  std::domain_error);
  CHECK_THROWS_AS(is_smoothing_admissible(ExtRational(1, 2), ExtRational(2),
                                          SolutionKind::L1, 3),
                  std::domain_error);

  // boundary sharpness: k = p_c - eps admissible from m = 1, k = p_c is not
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    SolutionKind kind = regula::testing::rand_kind(rng);
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    ExtRational pc = critical_exponent(kind, n);
    if (pc.is_infinite()) continue;
    ExtRational eps =
        rand_rational(rng, 30, 30, 1) * (pc - ExtRational(1)) / ExtRational(31);
    ExtRational k = pc - eps;
    if (k < ExtRational(1)) continue;
    CHECK(is_smoothing_admissible(ExtRational(1), k, kind, n));
    CHECK_FALSE(is_smoothing_admissible(ExtRational(1), pc, kind, n));
  }
}

TEST_CASE("scaling indices and the defining linear system") {
  auto params = SystemParams::make(4, SolutionKind::L1Delta, ExtRational(1),
                                   ExtRational(0), ExtRational(1), ExtRational(1),
                                   ExtRational(1), ExtRational(1), ExtRational(3));
  ScalingIndices idx = scaling_indices(params);
  CHECK(idx.denom() == ExtRational(1));
  CHECK(idx.alpha() == ExtRational(2));
  CHECK(idx.beta() == ExtRational(1));

  auto cube = SystemParams::make(5, SolutionKind::L1, ExtRational(0), ExtRational(0),
                                 ExtRational(3), ExtRational(3), ExtRational(1),
                                 ExtRational(1), ExtRational(3));
  ScalingIndices idx3 = scaling_indices(cube);
  CHECK(idx3.alpha() == ExtRational(1, 2));
  CHECK(idx3.beta() == ExtRational(1, 2));

  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    SystemParams w = regula::testing::rand_params(rng);
    ScalingIndices s = scaling_indices(w);
    ScalingIndices t = scaling_indices(w.swapped());
    CHECK(s.denom() == t.denom());
    if (!s.defined()) {
      CHECK_THROWS_AS(s.alpha(), std::domain_error);
      continue;
    }
    CHECK(s.alpha() == t.beta());
    CHECK(s.beta() == t.alpha());
    ExtRational one(1);
    CHECK((w.r - one) * s.alpha() + w.p * s.beta() == one);
    CHECK(w.q * s.alpha() + (w.s - one) * s.beta() == one);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("parameter construction: normalization and validation") {
  auto params = SystemParams::make(3, SolutionKind::L1, ExtRational(0), ExtRational(0),
                                   ExtRational(1), ExtRational(1), ExtRational(1, 2),
                                   ExtRational(2), ExtRational::infinity());
  CHECK(params.gamma == ExtRational(1));
  CHECK(params.gamma_raised);
  CHECK_FALSE(params.sigma_raised);
  CHECK(params.theta == ExtRational::infinity());

  auto bad = [](auto fn) { CHECK_THROWS_AS(fn(), std::invalid_argument); };
  bad([] {
    return SystemParams::make(3, SolutionKind::L1, ExtRational(0), ExtRational(0),
                              ExtRational(0), ExtRational(1), ExtRational(1),
                              ExtRational(1), ExtRational(2));
  });
  bad([] {
    return SystemParams::make(3, SolutionKind::L1, ExtRational(-1), ExtRational(0),
                              ExtRational(1), ExtRational(1), ExtRational(1),
                              ExtRational(1), ExtRational(2));
  });
  bad([] {
    return SystemParams::make(0, SolutionKind::L1, ExtRational(0), ExtRational(0),
                              ExtRational(1), ExtRational(1), ExtRational(1),
                              ExtRational(1), ExtRational(2));
  });
  bad([] {
    return SystemParams::make(3, SolutionKind::L1, ExtRational(0), ExtRational(0),
                              ExtRational(1), ExtRational(1), ExtRational(1),
                              ExtRational(1), ExtRational(1, 2));
  });
}
