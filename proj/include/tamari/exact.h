#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tamari {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An exact rational number or +infinity.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(std::int64_t v) : value_(v) {}
  ExtRat(Rational v) : value_(std::move(v)) {}

  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  /// Throws if infinite.
  const Rational& value() const;

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  /// inf - finite is inf; anything minus inf throws.
  friend ExtRat operator-(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator-(const ExtRat& a);

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  /// "p/q", "p" for integers, "inf" for infinity.
  std::string str() const;
  static ExtRat parse(std::string_view s);

 private:
  Rational value_{0};
  bool inf_ = false;
};

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view s);

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tamari
