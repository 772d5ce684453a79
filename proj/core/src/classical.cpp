#include "altsum/classical.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace altsum {

TermStream alternating_ones_stream() {
  return {[](long n) { return (n % 2 == 0) ? 1.0 : -1.0; }, "(-1)^n"};
}

TermStream alternating_n_stream() {
  return {[](long n) { return (n % 2 == 0) ? double(n) : -double(n); },
          "(-1)^n n"};
}

TermStream alternating_natural_stream() {
  return {[](long n) { return (n % 2 == 0) ? double(n + 1) : -double(n + 1); },
          "(-1)^n (n+1)"};
}

TermStream geometric_stream(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g^n", ratio);
  return {[ratio](long n) { return std::pow(ratio, double(n)); }, buf};
}

VerificationReport VerificationReport::make(
    std::string method,
    std::vector<std::pair<std::string, std::string>> parameters, double target,
    double computed, double tolerance) {
  VerificationReport r;
  r.method = std::move(method);
  r.parameters = std::move(parameters);
  r.target = target;
  r.computed = computed;
  r.tolerance = tolerance;
  r.passed = std::abs(computed - target) <= tolerance;
  return r;
}

namespace {
std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}
}  // namespace

std::string VerificationReport::to_line() const {
  std::string line = passed ? "PASS " : "FAIL ";
  line += method;
  for (const auto& [k, v] : parameters) line += " " + k + "=" + v;
  line += " computed=" + fmt15(computed);
  line += " target=" + fmt15(target);
  line += " tol=" + fmt15(tolerance);
  return line;
}

Rational abel_exact_poly(const NPoly& P, const Rational& x) {
  if (x.sign() < 0 || x >= Rational(1))
    throw std::domain_error("abel_exact_poly: x must satisfy 0 <= x < 1");
  const NPoly d = to_basis(P, Basis::Binomial);
  const Rational one_plus = Rational(1) + x;
  Rational acc;
  Rational num(1);                 // (-x)^m
  Rational den = one_plus;         // (1+x)^(m+1)
  for (long m = 0; m <= d.degree(); ++m) {
    if (m > 0) {
      num *= -x;
      den *= one_plus;
    }
    acc += d.coeff(m) * num / den;
  }
  return acc;
}

RegularizedValue abel_limit_exact(const NPoly& P) {
  const NPoly d = to_basis(P, Basis::Binomial);
  Rational acc;
  for (long m = 0; m <= d.degree(); ++m)
    acc += d.coeff(m) * pow(Rational(-1), m) * pow2(-(m + 1));
  return {acc, Method::AbelExact, P.to_string()};
}

namespace {
// P(n+1) in the monomial basis
NPoly shift_one(const NPoly& p) {
  NPoly out;
  NPoly shifted_power = NPoly::constant(Rational(1));  // (n+1)^i
  const NPoly n_plus_1({Rational(1), Rational(1)}, Basis::Monomial);
  for (long i = 0; i <= p.degree(); ++i) {
    if (i > 0) shifted_power = shifted_power * n_plus_1;
    NPoly term = shifted_power;
    term *= p.coeff(i);
    out += term;
  }
  return out;
}
}  // namespace

RegularizedValue euler_exact_poly(const NPoly& P) {
  NPoly diff = to_basis(P, Basis::Monomial);
  const long d = P.is_zero() ? 0 : P.degree();
  Rational acc;
  for (long k = 0; k <= d; ++k) {
    acc += pow(Rational(-1), k) * diff(Rational(0)) * pow2(-(k + 1));
    diff = shift_one(diff) - diff;
  }
  return {acc, Method::Euler, P.to_string()};
}

double abel_numeric(const TermStream& ts, double x, long n_max) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("abel_numeric: x must lie in (0, 1)");
  if (n_max < 0) throw std::invalid_argument("abel_numeric: n_max must be >= 0");
  // Kahan summation: individual terms can dwarf the regulated total, so
  // plain accumulation would lose the answer's low digits.
  double acc = 0.0;
  double carry = 0.0;
  double xn = 1.0;
  for (long n = 0; n <= n_max; ++n) {
    const double y = ts.term(n) * xn - carry;
    const double t = acc + y;
    carry = (t - acc) - y;
    acc = t;
    xn *= x;
  }
  return acc;
}

double cesaro_numeric(const TermStream& ts, int order, long n_max) {
  if (order < 1) throw std::invalid_argument("cesaro_numeric: order must be >= 1");
  if (n_max < 0) throw std::invalid_argument("cesaro_numeric: n_max must be >= 0");
  // acc[0] accumulates raw terms; acc[k] accumulates the running sum of
  // the level-(k-1) means, so each level needs O(1) state.
  std::vector<double> acc(order + 1, 0.0);
  double h = 0.0;
  for (long n = 0; n <= n_max; ++n) {
    acc[0] += ts.term(n);
    h = acc[0];
    for (int k = 1; k <= order; ++k) {
      acc[k] += h;
      h = acc[k] / double(n + 1);
    }
  }
  return h;
}

}  // namespace altsum
