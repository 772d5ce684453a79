#include "altsum/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace altsum {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long m) {
  if (m < 0) throw std::invalid_argument("factorial: m must be non-negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

namespace {
std::mutex stirling_mutex;
// row p holds S(p, 0..p)
std::vector<std::vector<Int>> stirling_rows = {{Int(1)}};

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table = {Rational(1)};
}  // namespace

Int stirling2(long p, long m) {
  if (p < 0 || m < 0)
    throw std::invalid_argument("stirling2: arguments must be non-negative");
  if (m > p) return 0;
  std::lock_guard<std::mutex> lock(stirling_mutex);
  while (static_cast<long>(stirling_rows.size()) <= p) {
    const auto& prev = stirling_rows.back();
    const long r = static_cast<long>(stirling_rows.size());
    std::vector<Int> row(r + 1);
    row[0] = 0;
    for (long j = 1; j < r; ++j) row[j] = j * prev[j] + prev[j - 1];
    row[r] = 1;
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[p][m];
}

Rational bernoulli(long m) {
  if (m < 0) throw std::invalid_argument("bernoulli: m must be non-negative");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  while (static_cast<long>(bernoulli_table.size()) <= m) {
    const long k = static_cast<long>(bernoulli_table.size());
    Rational acc;
    for (long j = 0; j < k; ++j)
      acc += Rational(binomial(k + 1, j)) * bernoulli_table[j];
    bernoulli_table.push_back(-acc / Rational(binomial(k + 1, k)));
  }
  return bernoulli_table[m];
}

}  // namespace altsum
