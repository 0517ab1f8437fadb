#include "unitfrac/rational.hpp"

#include <limits>

namespace unitfrac {

Rational Rational::make(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r;
  r.value_.get_num() = num;
  r.value_.get_den() = den;
  r.value_.canonicalize();
  return r;
}

Rational Rational::unit(const BigInt& n) { return make(BigInt(1), n); }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

BigInt floor_of_reciprocal(const Rational& x) {
  if (x.is_zero()) throw DomainError("reciprocal of zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.den().get_mpz_t(), x.num().get_mpz_t());
  return q;
}

Rational reciprocal(const Rational& x) {
  if (x.is_zero()) throw DomainError("reciprocal of zero");
  return Rational::make(x.den(), x.num());
}

bool is_canonical(const Rational& x) {
  if (x.den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return g == 1;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::size_t decimal_digits(const BigInt& n) {
  if (n == 0) return 1;
  BigInt a = abs(n);
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, d - 1);
  return a < p ? d - 1 : d;
}

std::string to_decimal(const Rational& x, int places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt a = abs(x.num()) * scale;
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), x.den().get_mpz_t());
  std::string digits = q.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = x.sign() < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + n.get_str());
  return n.get_si();
}

}  // namespace unitfrac
