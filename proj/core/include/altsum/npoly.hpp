#pragma once

#include "altsum/rational.hpp"

#include <string>
#include <vector>

namespace altsum {

/// Coefficient basis of an NPoly: powers n^i, or binomial coefficients C(n, m).
enum class Basis { Monomial, Binomial };

/// Polynomial in the Fock index n with exact rational coefficients.
///
/// The basis is explicit: coefficients()[i] multiplies n^i in the monomial
/// basis and C(n, i) in the binomial basis.  Trailing zero coefficients are
/// never stored, so the leading coefficient is nonzero (the zero polynomial
/// is the empty coefficient list).  Conversions between the two bases are
/// exact and invertible.
class NPoly {
public:
  NPoly() : basis_(Basis::Monomial) {}
  NPoly(std::vector<Rational> coeffs, Basis basis);

  static NPoly constant(const Rational& c);
  /// n^p in the monomial basis.
  static NPoly power(long p);

  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of index i; 0 beyond the stored range.
  Rational coeff(long i) const;

  /// Evaluation at a rational point, exact in either basis.  In the
  /// binomial basis C(x, m) is the generalized binomial x(x-1)...(x-m+1)/m!.
  Rational operator()(const Rational& x) const;

  NPoly& operator+=(const NPoly& o);  // requires matching bases
  NPoly& operator-=(const NPoly& o);
  NPoly& operator*=(const Rational& c);
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(NPoly a, const Rational& c) { return a *= c; }
  friend NPoly operator*(const Rational& c, NPoly a) { return a *= c; }
  /// Polynomial product; monomial basis only.
  NPoly operator*(const NPoly& o) const;

  /// Equality as functions of n (bases are converted if they differ).
  bool operator==(const NPoly& o) const;
  bool operator!=(const NPoly& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void trim();

  std::vector<Rational> coeffs_;
  Basis basis_;
};

/// n(n-1)...(n-m+1) as a monomial-basis polynomial of degree m
/// (the empty product 1 for m = 0).  Evaluates to 0 at n = 0..m-1 and
/// to n!/(n-m)! at integer n >= m, matching the action of a^m on |n>.
NPoly falling_factorial_poly(long m);

/// Rewrites P(n) = sum_m d_m C(n, m) with d_m the forward differences of P
/// at 0; exact on integer grids.  Requires the monomial basis.
NPoly monomial_to_binomial_basis(const NPoly& p);

/// Inverse of monomial_to_binomial_basis.  Requires the binomial basis.
NPoly binomial_to_monomial_basis(const NPoly& p);

/// Converts to the requested basis (identity when already there).
NPoly to_basis(const NPoly& p, Basis b);

}  // namespace altsum
