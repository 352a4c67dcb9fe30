#include "fewdist/rational.hpp"

#include <cctype>
#include <ostream>

namespace fewdist {

Rational::Rational(const Int& num, const Int& den) : value_(num, den) {
  if (sgn(den) == 0) {
    throw DivisionByZeroError("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view part) -> Int {
    if (part.empty()) throw ParseError("empty integer literal");
    if (part[0] == '+') part.remove_prefix(1);  // mpz rejects a leading '+'
    std::size_t i = part.empty() || part[0] != '-' ? 0 : 1;
    if (i == part.size()) throw ParseError("sign without digits");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError("bad integer literal: " + std::string(part));
      }
    }
    return Int(std::string(part));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator: " + std::string(text));
  return Rational(num, den);
}

Rational Rational::pow(unsigned long e) const {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
  Rational out;
  out.value_ = mpq_class(num, den);  // canonical: gcd preserved under powers
  return out;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace fewdist
