#include "altsum/fockcheck.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace altsum {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& m, long k) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (long i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

// Evaluates sum_n (-1)^n x^n diag[n] over the full (infinite) index range
// from the finite trusted window: forms the partial sums and applies
// iterated adjacent averaging, which collapses the oscillating remainder
// by a factor (1-x)/2 per pass.  Returns the smoothed value and reports
// how many passes were applied.
double smoothed_alternating_sum(const std::vector<double>& diag, double x,
                                int& passes) {
  std::vector<double> s(diag.size());
  double acc = 0.0;
  double xn = 1.0;
  for (std::size_t n = 0; n < diag.size(); ++n) {
    const double term = (n % 2 == 0 ? 1.0 : -1.0) * xn * diag[n];
    acc += term;
    s[n] = acc;
    xn *= x;
  }
  passes = static_cast<int>(std::min<std::size_t>(16, s.size() / 2));
  std::size_t len = s.size();
  for (int p = 0; p < passes; ++p) {
    for (std::size_t i = 0; i + 1 < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    --len;
  }
  return s[len - 1];
}

void check_regulator(double x) {
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument("fockcheck: regulator x must lie in (0, 1)");
}

}  // namespace

TruncatedOperator build_ladder_sum(long N) {
  if (N < 1) throw std::invalid_argument("build_ladder_sum: N must be >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (long n = 0; n < N; ++n) {
    const double v = std::sqrt(double(n + 1));
    m(n, n + 1) = v;
    m(n + 1, n) = v;
  }
  return {std::move(m)};
}

std::vector<double> diagonal_moments(long N, long m) {
  if (m < 0) throw std::invalid_argument("diagonal_moments: negative power");
  if (N < m + 1)
    throw std::invalid_argument("diagonal_moments: truncation too small for power");
  const TruncatedOperator op = build_ladder_sum(N);
  const Eigen::MatrixXd p = matrix_power(op.entries, m);
  std::vector<double> out(N - m + 1);
  for (long n = 0; n + m <= N; ++n) out[n] = p(n, n);
  return out;
}

VerificationReport regulated_vanishing_sum(long s, long N, double x,
                                           double tolerance, long cutoff) {
  if (s < 1)
    throw std::invalid_argument("regulated_vanishing_sum: s must be >= 1");
  check_regulator(x);
  const long m = 2 * s;
  if (N < m + 1)
    throw std::invalid_argument(
        "regulated_vanishing_sum: truncation N too small for s (need N >= 2s+1)");
  if (cutoff < 0) cutoff = N - m;
  if (cutoff < 1 || cutoff > N - m)
    throw std::invalid_argument(
        "regulated_vanishing_sum: cutoff outside the trusted margin");

  std::vector<double> diag = diagonal_moments(N, m);
  diag.resize(cutoff + 1);
  int passes = 0;
  const double computed = smoothed_alternating_sum(diag, x, passes);
  return VerificationReport::make(
      "fock-vanishing",
      {{"s", std::to_string(s)},
       {"N", std::to_string(N)},
       {"x", fmt(x)},
       {"cutoff", std::to_string(cutoff)},
       {"passes", std::to_string(passes)}},
      0.0, computed, tolerance);
}

VerificationReport regulated_moment_sum(const MomentQuery& mq) {
  if (mq.k < 0)
    throw std::invalid_argument("regulated_moment_sum: k must be >= 0");
  check_regulator(mq.x);
  if (mq.truncation < mq.k + 1)
    throw std::invalid_argument(
        "regulated_moment_sum: truncation N too small for k (need N >= k+1)");
  long cutoff = mq.cutoff;
  if (cutoff < 0) cutoff = mq.truncation - mq.k;
  if (cutoff < 1 || cutoff > mq.truncation - mq.k)
    throw std::invalid_argument(
        "regulated_moment_sum: cutoff outside the trusted margin");

  const double q = mq.q.to_double();
  const TruncatedOperator op = build_ladder_sum(mq.truncation);
  const long dim = op.dimension();
  const Eigen::MatrixXd shifted =
      op.entries / std::sqrt(2.0) +
      q * Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd p = matrix_power(shifted, mq.k);

  std::vector<double> diag(cutoff + 1);
  for (long n = 0; n <= cutoff; ++n) diag[n] = p(n, n);
  int passes = 0;
  const double computed = smoothed_alternating_sum(diag, mq.x, passes);
  const double target = std::pow(q, double(mq.k)) / 2.0;
  return VerificationReport::make(
      "fock-moment",
      {{"k", std::to_string(mq.k)},
       {"q", mq.q.to_string()},
       {"x", fmt(mq.x)},
       {"N", std::to_string(mq.truncation)},
       {"cutoff", std::to_string(cutoff)},
       {"passes", std::to_string(passes)}},
      target, computed, mq.tolerance);
}

}  // namespace altsum
