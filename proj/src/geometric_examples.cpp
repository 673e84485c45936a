#include "besse/geometric_examples.hpp"

#include <numeric>
#include <utility>

namespace besse {

WeightedHopfSpec::WeightedHopfSpec(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1)
    throw InvalidInput(InputError::NonPositiveMultiplicity, "weights must be positive");
  if (std::gcd(p, q) != 1)
    throw InvalidInput(InputError::NotCoprime, "weights " + std::to_string(p) + " and " +
                                                   std::to_string(q) + " are not coprime");
  if (p > q) std::swap(p, q);
  p_ = p;
  q_ = q;
}

SeifertInvariants weighted_hopf_from_bezout(const WeightedHopfSpec& spec, std::int64_t x, std::int64_t y) {
  __int128 lhs = static_cast<__int128>(x) * spec.q() + static_cast<__int128>(y) * spec.p();
  if (lhs != 1) throw std::invalid_argument("Bezout identity x*q + y*p = 1 fails");
  return validate(0, {{spec.p(), x}, {spec.q(), y}});
}

BesseExample weighted_hopf(std::int64_t p, std::int64_t q) {
  WeightedHopfSpec spec(p, q);
  // extended_gcd(q, p) gives x*q + y*p = 1.
  auto bz = extended_gcd(spec.q(), spec.p());
  auto s = normalize(weighted_hopf_from_bezout(spec, bz.x, bz.y));
  return BesseExample{s, prime_period_spectrum(s), spec};
}

BesseExample ellipsoid_boundary(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw NonPositiveAxis("ellipsoid axes must be positive, got " + a.to_string() + " and " + b.to_string());
  Rational ratio = b / a;
  return weighted_hopf(ratio.den(), ratio.num());
}

SeifertInvariants trivial_fibration(std::int64_t genus) { return validate(genus, {{1, 0}}); }

}  // namespace besse
