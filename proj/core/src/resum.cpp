#include "altsum/resum.hpp"

#include "altsum/boson.hpp"
#include "altsum/combinatorics.hpp"

#include <stdexcept>

namespace altsum {

std::string to_string(Method m) {
  switch (m) {
    case Method::Wigner: return "wigner";
    case Method::AbelExact: return "abel-exact";
    case Method::Euler: return "euler";
    case Method::EtaOracle: return "eta-oracle";
  }
  return "unknown";
}

TSequence t_sequence(long max_m) {
  if (max_m < 0) throw std::invalid_argument("t_sequence: max_m must be non-negative");
  TSequence t;
  t.values.reserve(max_m + 1);
  t.values.emplace_back(1, 2);
  for (long s = 1; s <= max_m; ++s) {
    Rational acc;
    for (long l = 1; l <= s; ++l)
      acc += Rational(binomial(s, l)) * pow2(-l) * t.values[s - l];
    t.values.push_back(-acc);
  }
  return t;
}

RegularizedValue alt_power_sum(long p) {
  if (p < 0) throw std::invalid_argument("alt_power_sum: p must be non-negative");
  const TSequence t = t_sequence(p);
  Rational acc;
  for (long m = 0; m <= p; ++m)
    acc += Rational(stirling2(p, m)) * Rational(factorial(m)) * t.values[m];
  return {acc, Method::Wigner, NPoly::power(p).to_string()};
}

RegularizedValue alt_poly_sum(const NPoly& P) {
  const NPoly d = to_basis(P, Basis::Binomial);
  Rational acc;
  if (!d.is_zero()) {
    const TSequence t = t_sequence(d.degree());
    for (long m = 0; m <= d.degree(); ++m) acc += d.coeff(m) * t.values[m];
  }
  return {acc, Method::Wigner, P.to_string()};
}

RegularizedValue wigner_vanishing_check(long s) {
  if (s < 1) throw std::invalid_argument("wigner_vanishing_check: s must be positive");
  const NPoly diag = expectation_poly(normal_order_power(2 * s));
  RegularizedValue v = alt_poly_sum(diag);
  v.descriptor = "<n|(a+ad)^" + std::to_string(2 * s) + "|n>";
  return v;
}

std::pair<Rational, Rational> moment_identity(long k, const Rational& q) {
  if (k < 0) throw std::invalid_argument("moment_identity: k must be non-negative");
  Rational lhs;
  for (long s = 0; s <= k; s += 2) {
    const Rational sum_s = alt_poly_sum(expectation_poly(normal_order_power(s))).value;
    lhs += Rational(binomial(k, s)) * pow(q, k - s) * pow2(-s / 2) * sum_s;
  }
  const Rational rhs = pow(q, k) / Rational(2);
  return {lhs, rhs};
}

RegularizedValue eta_oracle(long p) {
  if (p < 0) throw std::invalid_argument("eta_oracle: p must be non-negative");
  Rational value;
  if (p == 0) {
    value = Rational(1, 2);
  } else {
    const Rational sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
    value = (pow2(p + 1) - Rational(1)) * sign * bernoulli(p + 1) / Rational(p + 1);
  }
  return {value, Method::EtaOracle, NPoly::power(p).to_string()};
}

}  // namespace altsum
