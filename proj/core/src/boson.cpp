#include "altsum/boson.hpp"

#include "altsum/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace altsum {

NormalOrderedPoly NormalOrderedPoly::identity() {
  NormalOrderedPoly p;
  p.add_term(0, 0, Rational(1));
  return p;
}

void NormalOrderedPoly::add_term(long j, long k, const Rational& c) {
  if (j < 0 || k < 0)
    throw std::invalid_argument("NormalOrderedPoly: negative operator power");
  if (c.is_zero()) return;
  const Key key{j, k};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational NormalOrderedPoly::coeff(long j, long k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

NormalOrderedPoly& NormalOrderedPoly::operator+=(const NormalOrderedPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalOrderedPoly& NormalOrderedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string NormalOrderedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (key.first > 0) os << "*ad^" << key.first;
    if (key.second > 0) os << "*a^" << key.second;
  }
  return os.str();
}

NormalOrderedPoly normal_order_power(long m) {
  if (m < 0)
    throw std::invalid_argument("normal_order_power: m must be non-negative");
  NormalOrderedPoly p = NormalOrderedPoly::identity();
  for (long step = 0; step < m; ++step) {
    NormalOrderedPoly next;
    for (const auto& [key, c] : p.terms()) {
      const auto [j, k] = key;
      // adag * (adag^j a^k)
      next.add_term(j + 1, k, c);
      // a * (adag^j a^k) = adag^j a^(k+1) + j * adag^(j-1) a^k
      next.add_term(j, k + 1, c);
      if (j > 0) next.add_term(j - 1, k, Rational(j) * c);
    }
    p = std::move(next);
  }
  return p;
}

NormalOrderedPoly weyl_to_normal(long m) {
  if (m < 0)
    throw std::invalid_argument("weyl_to_normal: m must be non-negative");
  NormalOrderedPoly p;
  for (long l = 0; l <= m; ++l) {
    const Rational c = Rational(factorial(l)) * pow2(-l) *
                       Rational(binomial(m, l) * binomial(m, l));
    p.add_term(m - l, m - l, c);
  }
  return p;
}

NormalOrderedPoly diagonal_part(const NormalOrderedPoly& p) {
  NormalOrderedPoly out;
  for (const auto& [key, c] : p.terms())
    if (key.first == key.second) out.add_term(key.first, key.second, c);
  return out;
}

NPoly expectation_poly(const NormalOrderedPoly& p) {
  NPoly out;
  for (const auto& [key, c] : p.terms()) {
    if (key.first != key.second) continue;
    NPoly term = falling_factorial_poly(key.first);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace altsum
