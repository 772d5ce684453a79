#pragma once

#include "altsum/classical.hpp"
#include "altsum/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace altsum {

/// Matrix of a + adag on the Fock basis truncated at |N>: symmetric
/// tridiagonal with off-diagonal entries sqrt(n+1), n = 0..N-1.
/// Powers of the matrix are trusted only on elements (i, j) with
/// i, j <= N - m for an m-th power; rows nearer the truncation edge are
/// corrupted by the missing states above |N>.
struct TruncatedOperator {
  Eigen::MatrixXd entries;

  long dimension() const { return entries.rows(); }  // N + 1
};

/// Parameters of one regulated moment check.
struct MomentQuery {
  long k = 0;              // power of (Q + q I)
  Rational q;              // displacement along the position axis
  double x = 0.999;        // Abel regulator in (0, 1)
  long truncation = 400;   // N
  double tolerance = 0.1;
  long cutoff = -1;        // summation cutoff; -1 means N - k
};

TruncatedOperator build_ladder_sum(long N);

/// <n|(a+adag)^m|n> for n = 0..N-m, by dense matrix powers.
std::vector<double> diagonal_moments(long N, long m);

/// Checks that sum_n (-1)^n x^n <n|(a+adag)^(2s)|n> vanishes as x -> 1.
/// The regulated series is evaluated from the trusted diagonal window by
/// iterated averaging of its partial sums, so the reported value matches
/// the exact regulated sum far beyond the truncation cutoff.  Requires
/// N >= 2s + 1 (margin); throws std::invalid_argument otherwise.
VerificationReport regulated_vanishing_sum(long s, long N, double x,
                                           double tolerance = 0.1,
                                           long cutoff = -1);

/// Checks sum_n (-1)^n x^n <n|(Q + q I)^k|n> against q^k / 2, where
/// Q = (a+adag)/sqrt(2).  Same margin and evaluation rules as above.
VerificationReport regulated_moment_sum(const MomentQuery& mq);

}  // namespace altsum
