#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace altsum {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Exact rational scalar, the universal number type of the library.
///
/// Values are always stored in lowest terms with a positive denominator,
/// and every operation (+, -, *, / by nonzero) is exact.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(int n) : q_(n) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  /// Parses "p/q" or "p" (optional sign, arbitrary precision).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const;

  /// Lowest-terms decimal string: "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Decimal rendering with the given number of significant digits,
  /// '%g'-style: fixed notation for moderate exponents, scientific
  /// otherwise, trailing zeros stripped.  Exact in the sense that the
  /// digits are those of the rational itself, not of a double.
  std::string to_decimal(std::size_t significant = 15) const;

  /// Nearest double (may overflow to +/-inf for huge values).
  double to_double() const { return q_.get_d(); }

private:
  mpq_class q_;  // canonical: lowest terms, positive denominator
};

/// base^exp with integer exponent; negative exponents require base != 0.
Rational pow(const Rational& base, long exp);

/// 2^exp for any integer exp.
Rational pow2(long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace altsum
