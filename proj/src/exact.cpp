#include "tamari/exact.h"

#include <stdexcept>

namespace tamari {

const Rational& ExtRat::value() const {
  if (inf_) throw std::domain_error("value of infinite ExtRat");
  return value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return ExtRat::infinity();
  return ExtRat(a.value_ + b.value_);
}

ExtRat operator-(const ExtRat& a, const ExtRat& b) {
  if (b.inf_) throw std::domain_error("subtracting infinity");
  if (a.inf_) return a;
  return ExtRat(a.value_ - b.value_);
}

ExtRat operator-(const ExtRat& a) {
  if (a.inf_) throw std::domain_error("negating infinity");
  return ExtRat(Rational(-a.value_));
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_str(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(t));
    Integer p(t.substr(0, slash));
    Integer q(t.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + t + "'");
  }
}

std::string ExtRat::str() const { return inf_ ? "inf" : rational_str(value_); }

ExtRat ExtRat::parse(std::string_view s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return infinity();
  return ExtRat(parse_rational(s));
}

}  // namespace tamari
