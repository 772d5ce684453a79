#pragma once

#include "altsum/npoly.hpp"
#include "altsum/rational.hpp"
#include "altsum/resum.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace altsum {

/// Deterministic generator of real series terms a_n.
struct TermStream {
  std::function<double(long)> term;
  std::string description;
};

// Streams used throughout the checks and the CLI.
TermStream alternating_ones_stream();     // (-1)^n
TermStream alternating_n_stream();        // (-1)^n n
TermStream alternating_natural_stream();  // (-1)^n (n+1): 1 - 2 + 3 - ...
TermStream geometric_stream(double ratio);

/// Structured record of one numeric check.
/// Invariant: passed <=> |computed - target| <= tolerance.
struct VerificationReport {
  std::string method;
  std::vector<std::pair<std::string, std::string>> parameters;
  double target = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  static VerificationReport make(
      std::string method,
      std::vector<std::pair<std::string, std::string>> parameters,
      double target, double computed, double tolerance);

  /// One-line rendering: "PASS <method> k=v ... computed=... target=... tol=..."
  std::string to_line() const;
};

/// Exact value of sum_{n>=0} (-x)^n P(n) for rational 0 <= x < 1, via the
/// generating function sum_n (-x)^n C(n, m) = (-x)^m / (1+x)^(m+1).
/// Throws std::domain_error outside the convergence region.
Rational abel_exact_poly(const NPoly& P, const Rational& x);

/// The x -> 1 limit of the generating function above:
/// sum_m d_m (-1)^m / 2^(m+1), d = binomial-basis coefficients of P.
RegularizedValue abel_limit_exact(const NPoly& P);

/// Terminating Euler transform sum_{k=0}^{deg} (-1)^k (Delta^k P)(0) / 2^(k+1),
/// with the differences formed symbolically as P(n+1) - P(n).
RegularizedValue euler_exact_poly(const NPoly& P);

/// Floating-point partial sum sum_{n=0}^{n_max} a_n x^n, 0 < x < 1.
double abel_numeric(const TermStream& ts, double x, long n_max);

/// Iterated-mean Cesaro value: H^0_n are the partial sums and
/// H^k_n = (1/(n+1)) sum_{i<=n} H^(k-1)_i; returns H^order at n_max.
double cesaro_numeric(const TermStream& ts, int order, long n_max);

}  // namespace altsum
