#include "altsum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace altsum {

Rational::Rational(const Int& num, const Int& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::from_string(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  // mpz_set_str accepts "-" but not "+"
  auto drop_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return t;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!is_int(num)) throw std::invalid_argument("Rational: malformed number '" + s + "'");
  if (slash == std::string::npos) return Rational(Int(drop_plus(num)));
  const std::string den = s.substr(slash + 1);
  if (!is_int(den)) throw std::invalid_argument("Rational: malformed number '" + s + "'");
  return Rational(Int(drop_plus(num)), Int(drop_plus(den)));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

// Rounds a digit string (no sign, no point) to `keep` digits, half away
// from zero.  Returns the rounded digits and bumps `exp10` when a carry
// lengthens the number ("999" -> "100", exponent + 1).
std::string round_digits(std::string digits, std::size_t keep, long& exp10) {
  if (digits.size() <= keep) return digits;
  const bool round_up = digits[keep] >= '5';
  digits.resize(keep);
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
    }
    if (i < 0) {
      digits.insert(digits.begin(), '1');
      digits.resize(keep);
      ++exp10;
    }
  }
  return digits;
}

void strip_trailing_zeros(std::string& digits) {
  const auto last = digits.find_last_not_of('0');
  digits.resize(last == std::string::npos ? 1 : last + 1);
}

}  // namespace

std::string Rational::to_decimal(std::size_t significant) const {
  if (significant == 0) significant = 1;
  if (is_zero()) return "0";

  // 512-bit mantissa gives ~154 exact decimal digits, far beyond any
  // rendering we produce.
  mpf_class f(q_, 512);
  mp_exp_t e = 0;
  std::string digits = f.get_str(e, 10, significant + 8);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  long exp10 = static_cast<long>(e);  // value = 0.digits * 10^exp10
  digits = round_digits(digits, significant, exp10);
  strip_trailing_zeros(digits);

  const long lead = exp10 - 1;  // exponent of the leading digit
  std::string out;
  if (lead >= -4 && lead < static_cast<long>(significant)) {
    if (lead >= 0) {
      if (static_cast<long>(digits.size()) <= lead)
        digits.append(lead + 1 - digits.size(), '0');
      out = digits.substr(0, lead + 1);
      if (digits.size() > static_cast<std::size_t>(lead + 1))
        out += "." + digits.substr(lead + 1);
    } else {
      out = "0." + std::string(-lead - 1, '0') + digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e";
    out += (lead < 0) ? "-" : "+";
    std::string es = std::to_string(lead < 0 ? -lead : lead);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out += es;
  }
  return sign + out;
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero() && exp < 0)
    throw std::invalid_argument("Rational: 0 raised to a negative power");
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return exp > 0 ? Rational(num, den) : Rational(den, num);
}

Rational pow2(long exp) { return pow(Rational(2), exp); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace altsum
