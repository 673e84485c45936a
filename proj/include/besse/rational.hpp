#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace besse {

/// Exact reduced fraction over 64-bit integers.
///
/// Invariant: gcd(|num|, den) == 1 and den >= 1. Every operation computes in
/// 128-bit intermediates and throws std::overflow_error when the reduced
/// result does not fit back into 64 bits, so a result is either exact or
/// absent.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical text form: "0" for zero, otherwise an explicit sign followed
  /// by "num/den" in lowest terms, e.g. "-1/30" or "+2/1".
  std::string to_string() const;

  /// Accepts "n", "+n", "-n", "n/d" (d != 0) with optional sign. Throws
  /// std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor division for integers with a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Result of the extended Euclidean algorithm: x*a + y*b == gcd.
struct Bezout {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace besse
