#pragma once

#include "altsum/rational.hpp"

namespace altsum {

/// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Int binomial(long n, long k);

/// m! for m >= 0.
Int factorial(long m);

/// Stirling number of the second kind S(p, m), via
/// S(p, m) = m*S(p-1, m) + S(p-1, m-1) with S(0, 0) = 1.
/// Results are memoized; safe to call concurrently.
Int stirling2(long p, long m);

/// Bernoulli number B_m under the B_1 = -1/2 convention, from the
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1.
/// Results are memoized; safe to call concurrently.
Rational bernoulli(long m);

}  // namespace altsum
