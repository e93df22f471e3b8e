#include "shapecone/rational.hpp"

#include <cctype>
#include <ostream>

namespace shapecone {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw MalformedEntry("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) {
    throw ZeroDenominator("zero denominator");
  }
  q_ = mpq_class(mpz_class(std::to_string(numerator)),
                 mpz_class(std::to_string(denominator)));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw ZeroDenominator("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) malformed(text);

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    const mpz_class d{std::string(den), 10};
    if (d == 0) {
      throw ZeroDenominator("zero denominator in '" + std::string(text) + "'");
    }
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed(text);
    if (!whole.empty() && !all_digits(whole)) malformed(text);
    if (!frac.empty() && !all_digits(frac)) malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole) + std::string(frac);
    value = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), scale);
  } else {
    if (!all_digits(body)) malformed(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

bool Rational::is_canonical() const {
  if (q_.get_den() <= 0) return false;
  mpz_class g;
  mpz_class num = ::abs(q_.get_num());
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q_.get_den_mpz_t());
  return g == 1;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace shapecone
