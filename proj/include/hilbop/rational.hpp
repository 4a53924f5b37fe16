#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hilbop {

// Exact arbitrary-precision rational scalar.  Always canonical: lowest terms,
// positive denominator.  This is the only coefficient type in the library;
// nothing is ever rounded.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Parses "p/q" or a bare integer "p".
  static Rational parse(const std::string& s);

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Exact integer value; throws domain_error unless is_integer() and the
  // value fits in long.
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const;
  // Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  // Canonical "p/q" form, denominator always present ("3/1", "-1/24").
  std::string str() const;

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hilbop
