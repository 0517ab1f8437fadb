#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "unitfrac/errors.hpp"

namespace unitfrac {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Denominators in greedy expansions grow doubly exponentially, so both parts
/// are arbitrary precision. Every constructor and arithmetic operator leaves
/// the value canonical, which makes `==` a structural comparison.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}

  /// num/den reduced; sign carried on the numerator. Throws DomainError if den = 0.
  static Rational make(const BigInt& num, const BigInt& den);
  /// 1/n for n ≠ 0.
  static Rational unit(const BigInt& n);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_integer() const { return den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  mpq_class value_;
};

/// Largest integer ≤ x.
BigInt floor(const Rational& x);

/// ⌊1/x⌋. Throws DomainError for x = 0.
BigInt floor_of_reciprocal(const Rational& x);

/// 1/x. Throws DomainError for x = 0.
Rational reciprocal(const Rational& x);

/// gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& x);

/// Parse a base-10 integer with optional sign. Throws DomainError on junk.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& n);

/// Number of base-10 digits of |n| (1 for zero).
std::size_t decimal_digits(const BigInt& n);

/// Truncated fixed-point decimal rendering, e.g. "0.3125" with `places` = 4.
std::string to_decimal(const Rational& x, int places);

std::int64_t to_int64(const BigInt& n);

}  // namespace unitfrac
