#include "altsum/npoly.hpp"

#include "altsum/combinatorics.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace altsum {

NPoly::NPoly(std::vector<Rational> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
  trim();
}

NPoly NPoly::constant(const Rational& c) {
  return NPoly({c}, Basis::Monomial);
}

NPoly NPoly::power(long p) {
  if (p < 0) throw std::invalid_argument("NPoly::power: p must be non-negative");
  std::vector<Rational> c(p + 1);
  c[p] = Rational(1);
  return NPoly(std::move(c), Basis::Monomial);
}

void NPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational NPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational NPoly::operator()(const Rational& x) const {
  if (basis_ == Basis::Monomial) {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }
  // binomial basis: sum d_m * x(x-1)...(x-m+1)/m!
  Rational acc;
  Rational falling(1);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (m > 0) falling *= x - Rational(static_cast<long>(m) - 1);
    acc += coeffs_[m] * falling / Rational(factorial(static_cast<long>(m)));
  }
  return acc;
}

NPoly& NPoly::operator+=(const NPoly& o) {
  if (!o.is_zero() && !is_zero() && basis_ != o.basis_)
    throw std::invalid_argument("NPoly: mixed-basis addition");
  if (is_zero()) basis_ = o.basis_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  NPoly neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

NPoly& NPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

NPoly NPoly::operator*(const NPoly& o) const {
  if (basis_ != Basis::Monomial || o.basis_ != Basis::Monomial)
    throw std::invalid_argument("NPoly: product requires the monomial basis");
  if (is_zero() || o.is_zero()) return NPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return NPoly(std::move(c), Basis::Monomial);
}

bool NPoly::operator==(const NPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (basis_ == o.basis_) return coeffs_ == o.coeffs_;
  return to_basis(*this, Basis::Monomial).coefficients() ==
         to_basis(o, Basis::Monomial).coefficients();
}

std::string NPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].to_string();
    if (i > 0) {
      os << (basis_ == Basis::Monomial ? "*n" : "*C(n,");
      if (basis_ == Basis::Monomial) {
        if (i > 1) os << "^" << i;
      } else {
        os << i << ")";
      }
    }
  }
  return os.str();
}

NPoly falling_factorial_poly(long m) {
  if (m < 0)
    throw std::invalid_argument("falling_factorial_poly: m must be non-negative");
  NPoly p = NPoly::constant(Rational(1));
  for (long i = 0; i < m; ++i)
    p = p * NPoly({Rational(-i), Rational(1)}, Basis::Monomial);
  return p;
}

NPoly monomial_to_binomial_basis(const NPoly& p) {
  if (p.is_zero()) return NPoly({}, Basis::Binomial);
  if (p.basis() != Basis::Monomial)
    throw std::invalid_argument("monomial_to_binomial_basis: wrong input basis");
  const long d = p.degree();
  // forward-difference table on the integer grid 0..d
  std::vector<Rational> row(d + 1);
  for (long n = 0; n <= d; ++n) row[n] = p(Rational(n));
  std::vector<Rational> out(d + 1);
  out[0] = row[0];
  for (long k = 1; k <= d; ++k) {
    for (long i = 0; i + k <= d; ++i) row[i] = row[i + 1] - row[i];
    out[k] = row[0];
  }
  return NPoly(std::move(out), Basis::Binomial);
}

NPoly binomial_to_monomial_basis(const NPoly& p) {
  if (p.is_zero()) return NPoly({}, Basis::Monomial);
  if (p.basis() != Basis::Binomial)
    throw std::invalid_argument("binomial_to_monomial_basis: wrong input basis");
  NPoly out;
  for (long m = 0; m <= p.degree(); ++m) {
    if (p.coeff(m).is_zero()) continue;
    NPoly term = falling_factorial_poly(m);
    term *= p.coeff(m) / Rational(factorial(m));
    out += term;
  }
  return out;
}

NPoly to_basis(const NPoly& p, Basis b) {
  if (p.basis() == b || p.is_zero()) {
    if (p.is_zero()) return NPoly({}, b);
    return p;
  }
  return b == Basis::Binomial ? monomial_to_binomial_basis(p)
                              : binomial_to_monomial_basis(p);
}

}  // namespace altsum
