#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "altsum/combinatorics.hpp"
#include "altsum/npoly.hpp"
#include "altsum/rational.hpp"

#include "test_util.hpp"

#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace altsum;

TEST_CASE("rational construction stays in lowest terms") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 500; ++i) {
    const Rational a = testutil::random_rational(rng);
    const Rational b = testutil::random_rational(rng);
    const Rational c = testutil::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    for (const Rational& v : {a + b, a * b, a - c}) {
      CHECK(v.denominator() > 0);
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(::abs(v.numerator())).get_mpz_t(),
              v.denominator().get_mpz_t());
      if (!v.is_zero()) CHECK(g == 1);
    }
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  CHECK(Rational(-1, 4).to_string() == "-1/4");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational::from_string("3/6") == Rational(1, 2));
  CHECK(Rational::from_string("-12") == Rational(-12));
  CHECK(Rational::from_string("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);

  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testutil::random_rational(rng, 1000);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("rational decimal rendering matches printf %.15g") {
  const std::pair<Rational, double> cases[] = {
      {Rational(1, 2), 0.5},       {Rational(-1, 4), -0.25},
      {Rational(1, 8), 0.125},     {Rational(0), 0.0},
      {Rational(81, 32), 2.53125}, {Rational(1, 3), 1.0 / 3.0},
      {Rational(2, 3), 2.0 / 3.0}, {Rational(1, 100000), 1e-5},
      {Rational(Int("1000000000000000")), 1e15},
      {Rational(-1, 1999), -1.0 / 1999.0},
  };
  for (const auto& [r, d] : cases) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", d);
    CHECK(r.to_decimal(15) == std::string(buf));
  }
  // exact digits beyond double range
  const Rational huge = pow(Rational(10), 400) * Rational(3, 2);
  CHECK(huge.to_decimal(15) == "1.5e+400");
}

TEST_CASE("pow handles negative exponents") {
  CHECK(pow(Rational(3, 2), 2) == Rational(9, 4));
  CHECK(pow(Rational(2), -3) == Rational(1, 8));
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK(pow2(-4) == Rational(1, 16));
  CHECK(pow2(5) == Rational(32));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::invalid_argument);
}

TEST_CASE("binomial small cases and conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal identity") {
  for (long n = 1; n <= 50; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

namespace {
// Counts set partitions of {0..p-1} into exactly m nonempty blocks by
// enumerating all m^p labeled assignments and dividing out the m! block
// labelings.
long count_set_partitions(int p, int m) {
  if (p == 0) return m == 0 ? 1 : 0;
  if (m == 0) return 0;
  long surjective = 0;
  std::vector<int> assign(p, 0);
  while (true) {
    std::vector<bool> used(m, false);
    for (int v : assign) used[v] = true;
    bool all = true;
    for (bool u : used) all = all && u;
    if (all) ++surjective;
    int i = 0;
    for (; i < p; ++i) {
      if (++assign[i] < m) break;
      assign[i] = 0;
    }
    if (i == p) break;
  }
  long mfact = 1;
  for (int i = 2; i <= m; ++i) mfact *= i;
  return surjective / mfact;
}
}  // namespace

TEST_CASE("stirling2 against set-partition enumeration") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == count_set_partitions(4, 2));
  CHECK(count_set_partitions(4, 2) == 7);
  for (long p = 1; p <= 7; ++p) {
    CHECK(stirling2(p, 0) == 0);
    for (long m = 0; m <= p; ++m)
      CHECK(stirling2(p, m) == count_set_partitions(int(p), int(m)));
  }
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(2, 5) == 0);
}

TEST_CASE("bernoulli recurrence values") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (long k = 1; k <= 20; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
}

TEST_CASE("monomials decompose through stirling2 and falling factorials") {
  for (long p = 0; p <= 30; ++p) {
    NPoly sum;
    for (long m = 0; m <= p; ++m) {
      NPoly term = falling_factorial_poly(m);
      term *= Rational(stirling2(p, m));
      sum += term;
    }
    const NPoly direct = NPoly::power(p);
    for (long n = 0; n <= p; ++n)
      CHECK(sum(Rational(n)) == direct(Rational(n)));
    CHECK(sum == direct);
  }
}

TEST_CASE("memo tables are safe under concurrent access") {
  const Rational b40 = bernoulli(40);
  const Int s30 = stirling2(30, 11);
  std::vector<std::thread> workers;
  std::vector<bool> ok(8, false);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      bool good = true;
      for (long m = 0; m <= 60; ++m) {
        if (m <= 40 && m % 8 == t % 8) good = good && (bernoulli(m) == bernoulli(m));
        good = good && (stirling2(60 - m, m) >= 0);
      }
      good = good && (bernoulli(40) == b40) && (stirling2(30, 11) == s30);
      ok[t] = good;
    });
  for (auto& w : workers) w.join();
  for (bool g : ok) CHECK(g);
}
