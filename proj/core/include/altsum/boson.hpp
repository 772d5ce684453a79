#pragma once

#include "altsum/npoly.hpp"
#include "altsum/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace altsum {

/// Operator polynomial of a single bosonic mode in normal order:
/// sum of c_{jk} * adag^j a^k, keyed by (creation power j, annihilation
/// power k).  Normal order is the canonical form for the algebra
/// [a, adag] = 1, so equal operators have equal term maps.  Zero
/// coefficients are never stored.
class NormalOrderedPoly {
public:
  using Key = std::pair<long, long>;  // (j, k)

  NormalOrderedPoly() = default;

  static NormalOrderedPoly identity();

  /// Accumulates c * adag^j a^k; erases the term if the total vanishes.
  void add_term(long j, long k, const Rational& c);

  Rational coeff(long j, long k) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  NormalOrderedPoly& operator+=(const NormalOrderedPoly& o);
  NormalOrderedPoly& operator*=(const Rational& c);
  friend NormalOrderedPoly operator*(const Rational& c, NormalOrderedPoly p) {
    return p *= c;
  }

  bool operator==(const NormalOrderedPoly& o) const = default;

  std::string to_string() const;

private:
  std::map<Key, Rational> terms_;
};

/// Normal-ordered form of (a + adag)^m, by repeated left multiplication
/// with the rewrite a * adag^j = adag^j * a + j * adag^(j-1).
NormalOrderedPoly normal_order_power(long m);

/// Normal-ordered form of the symmetrically (Weyl) ordered power
/// :(adag a)^m:_W, i.e. sum_{l=0}^{m} (l!/2^l) C(m,l)^2 adag^(m-l) a^(m-l).
NormalOrderedPoly weyl_to_normal(long m);

/// Retains exactly the terms with equal creation and annihilation powers.
NormalOrderedPoly diagonal_part(const NormalOrderedPoly& p);

/// <n|p|n> as a polynomial in n: each diagonal term adag^m a^m contributes
/// its coefficient times n(n-1)...(n-m+1); off-diagonal terms contribute
/// nothing.  Monomial basis.
NPoly expectation_poly(const NormalOrderedPoly& p);

}  // namespace altsum
