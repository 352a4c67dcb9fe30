#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fewdist/errors.hpp"

namespace fewdist {

/// Arbitrary-precision integer. All counting results (binomials, bounds)
/// use this type so no bound ever overflows.
using Int = mpz_class;

/// Exact rational scalar. Always held in canonical form: denominator > 0
/// and gcd(|numerator|, denominator) = 1. Every operation in the library
/// goes through this type; nothing is ever rounded to floating point.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(const Int& n) : value_(n) {}

  /// Builds num/den in canonical form. Throws DivisionByZeroError if den = 0.
  Rational(const Int& num, const Int& den);

  /// Parses "n" or "n/d" with optional leading minus. Throws ParseError.
  static Rational from_string(std::string_view text);

  Int numerator() const { return value_.get_num(); }
  Int denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Non-negative integer power (0^0 = 1).
  Rational pow(unsigned long e) const;

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws DivisionByZeroError

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_;  // kept canonical at all times
};

}  // namespace fewdist
