#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "altsum/boson.hpp"
#include "altsum/classical.hpp"
#include "altsum/fockcheck.hpp"

#include <cmath>
#include <stdexcept>

using namespace altsum;

TEST_CASE("ladder-sum matrix structure") {
  const TruncatedOperator m1 = build_ladder_sum(1);
  CHECK(m1.dimension() == 2);
  CHECK(m1.entries(0, 0) == 0.0);
  CHECK(m1.entries(0, 1) == 1.0);
  CHECK(m1.entries(1, 0) == 1.0);
  CHECK(m1.entries(1, 1) == 0.0);

  const TruncatedOperator m2 = build_ladder_sum(2);
  CHECK(m2.entries(0, 1) == 1.0);
  CHECK(m2.entries(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const TruncatedOperator m3 = build_ladder_sum(3);
  CHECK(m3.entries(2, 3) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  // symmetric tridiagonal: everything off the band is zero
  for (long i = 0; i <= 3; ++i)
    for (long j = 0; j <= 3; ++j)
      if (std::abs(i - j) != 1) CHECK(m3.entries(i, j) == 0.0);

  CHECK_THROWS_AS(build_ladder_sum(0), std::invalid_argument);
}

TEST_CASE("matrix diagonals agree with the symbolic expectation polynomials") {
  const long N = 100;
  for (long s = 1; s <= 5; ++s) {
    const long m = 2 * s;
    const auto diag = diagonal_moments(N, m);
    const NPoly sym = expectation_poly(normal_order_power(m));
    REQUIRE(long(diag.size()) == N - m + 1);
    for (long n = 0; n + m <= N; ++n) {
      const double expected = sym(Rational(n)).to_double();
      CHECK(std::abs(diag[n] - expected) <=
            1e-9 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("vanishing sum at the default parameters") {
  const auto r = regulated_vanishing_sum(1, 400, 0.999, 0.1);
  CHECK(r.passed);
  CHECK(std::abs(r.computed) < 0.1);
  // the smoothed value reproduces the exact regulated series
  const NPoly summand({Rational(1), Rational(2)}, Basis::Monomial);  // 2n+1
  const double exact = abel_exact_poly(summand, Rational(999, 1000)).to_double();
  CHECK(std::abs(r.computed - exact) < 1e-6);
}

TEST_CASE("vanishing sum demonstrates that x near 1 is essential") {
  const auto r = regulated_vanishing_sum(1, 60, 0.5, 0.1);
  CHECK_FALSE(r.passed);
  // exact Abel value of sum (-x)^n (2n+1) at x = 1/2 is (1-x)/(1+x)^2 = 2/9
  CHECK(r.computed == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("vanishing sum for s = 2 within the wider band") {
  const auto r = regulated_vanishing_sum(2, 600, 0.999, 1.0);
  CHECK(r.passed);
  const NPoly summand = expectation_poly(normal_order_power(4));
  const double exact = abel_exact_poly(summand, Rational(999, 1000)).to_double();
  CHECK(std::abs(r.computed - exact) < 1e-6);
}

TEST_CASE("regulator convergence toward the limit") {
  const double c1 = std::abs(regulated_vanishing_sum(1, 200, 0.9).computed);
  const double c2 = std::abs(regulated_vanishing_sum(1, 300, 0.99).computed);
  const double c3 = std::abs(regulated_vanishing_sum(1, 400, 0.999).computed);
  CHECK(c1 > c2);
  CHECK(c2 > c3);
  CHECK(c3 < 1e-3);
}

TEST_CASE("results do not depend on truncation beyond the margin") {
  const auto r80 = regulated_vanishing_sum(1, 80, 0.9, 0.1, 60);
  const auto r120 = regulated_vanishing_sum(1, 120, 0.9, 0.1, 60);
  const auto r160 = regulated_vanishing_sum(1, 160, 0.9, 0.1, 60);
  CHECK(std::abs(r80.computed - r120.computed) < 1e-12);
  CHECK(std::abs(r120.computed - r160.computed) < 1e-12);
}

TEST_CASE("margin violations are parameter errors") {
  CHECK_THROWS_AS(regulated_vanishing_sum(8, 10, 0.999), std::invalid_argument);
  CHECK_THROWS_AS(regulated_vanishing_sum(1, 400, 0.999, 0.1, 399),
                  std::invalid_argument);
  CHECK_THROWS_AS(regulated_vanishing_sum(1, 400, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regulated_vanishing_sum(0, 400, 0.999), std::invalid_argument);

  MomentQuery mq;
  mq.k = 5;
  mq.truncation = 4;
  CHECK_THROWS_AS(regulated_moment_sum(mq), std::invalid_argument);
}

TEST_CASE("moment sum reproduces the geometric value at k = 0") {
  MomentQuery mq;
  mq.k = 0;
  mq.q = Rational(7, 3);  // irrelevant at k = 0
  mq.x = 0.999;
  mq.truncation = 50;
  mq.tolerance = 1e-3;
  const auto r = regulated_moment_sum(mq);
  CHECK(r.passed);
  CHECK(r.target == 0.5);
  CHECK(r.computed == doctest::Approx(1.0 / 1.999).epsilon(1e-9));
}

TEST_CASE("moment sum matches q^k/2 at the default parameters") {
  MomentQuery mq;
  mq.k = 2;
  mq.q = Rational(3, 2);
  mq.x = 0.999;
  mq.truncation = 400;
  mq.tolerance = 0.1;
  const auto r = regulated_moment_sum(mq);
  CHECK(r.passed);
  CHECK(r.target == doctest::Approx(1.125));
  // exact regulated series: sum (-x)^n (n + 1/2 + q^2)
  const NPoly summand({Rational(1, 2) + Rational(9, 4), Rational(1)},
                      Basis::Monomial);
  const double exact = abel_exact_poly(summand, Rational(999, 1000)).to_double();
  CHECK(std::abs(r.computed - exact) < 1e-6);
}

TEST_CASE("odd moment at zero displacement vanishes") {
  MomentQuery mq;
  mq.k = 1;
  mq.q = Rational(0);
  mq.x = 0.999;
  mq.truncation = 60;
  mq.tolerance = 1e-9;
  const auto r = regulated_moment_sum(mq);
  CHECK(r.passed);
  CHECK(r.target == 0.0);
  CHECK(std::abs(r.computed) < 1e-12);
}
