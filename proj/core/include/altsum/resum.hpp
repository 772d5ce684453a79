#pragma once

#include "altsum/npoly.hpp"
#include "altsum/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace altsum {

/// How a regularized value was produced.
enum class Method { Wigner, AbelExact, Euler, EtaOracle };

std::string to_string(Method m);

/// T(m) = regularized sum_{n>=0} (-1)^n C(n, m).
/// Base case T(0) = 1/2; for s >= 1 the values satisfy
/// sum_{l=0}^{s} C(s, l) 2^{-l} T(s-l) = 0, so
/// T(s) = -sum_{l=1}^{s} C(s, l) 2^{-l} T(s-l).
struct TSequence {
  std::vector<Rational> values;  // values[m] = T(m)
};

/// An exact value assigned to a divergent series, tagged with the method
/// that produced it and a rendering of the summand.
struct RegularizedValue {
  Rational value;
  Method method = Method::Wigner;
  std::string descriptor;
};

/// T(0..max_m) by the recursion above; all values exact.
TSequence t_sequence(long max_m);

/// Regularized sum_{n>=0} (-1)^n n^p with the convention 0^0 = 1,
/// computed as sum_{m=0}^{p} S(p, m) m! T(m).  Method: Wigner.
RegularizedValue alt_power_sum(long p);

/// Regularized sum_{n>=0} (-1)^n P(n); linear in P.  Equals
/// sum_m d_m T(m) with d the binomial-basis coefficients of P.
RegularizedValue alt_poly_sum(const NPoly& P);

/// Regularized sum_{n>=0} (-1)^n <n|(a+adag)^(2s)|n> through the full
/// symbolic pipeline; the result is exactly 0 for every s >= 1.
RegularizedValue wigner_vanishing_check(long s);

/// Both sides of the k-th moment identity: lhs sums, over even s <= k,
/// C(k, s) q^(k-s) 2^(-s/2) times the regularized alternating sum of
/// <n|(a+adag)^s|n>; rhs = q^k / 2.  The two are exactly equal.
std::pair<Rational, Rational> moment_identity(long k, const Rational& q);

/// Independent oracle for alt_power_sum: 1/2 for p = 0, and
/// (2^(p+1) - 1) (-1)^p B_(p+1) / (p+1) for p >= 1 (the Dirichlet eta
/// value -eta(-p) with the series starting at n = 0).
RegularizedValue eta_oracle(long p);

}  // namespace altsum
