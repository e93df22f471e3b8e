#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "shapecone/errors.hpp"

namespace shapecone {

/// Exact rational number in canonical form: positive denominator and
/// coprime numerator/denominator. Zero is 0/1.
///
/// Binary floating point is deliberately not convertible into a Rational;
/// decimal text goes through parse(), which reads it positionally
/// ("0.25" is exactly 1/4).
class Rational {
 public:
  Rational() = default;
  Rational(int value) : q_(value) {}                   // NOLINT
  Rational(long value) : q_(value) {}                  // NOLINT
  Rational(long long value) : q_(std::to_string(value)) {}  // NOLINT
  Rational(unsigned long value) : q_(value) {}         // NOLINT
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Rational(double) = delete;
  Rational(float) = delete;

  /// Reads an integer ("-3"), a fraction ("2/3", "-4/6") or a finite
  /// decimal ("0.25", "-1.5", ".5"). Surrounding spaces are allowed.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical-form check: denominator > 0 and gcd(|num|, den) == 1.
  bool is_canonical() const;

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  /// Lossy; only for display.
  double to_double() const { return q_.get_d(); }

  Rational abs() const { return Rational(::abs(q_)); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace shapecone
