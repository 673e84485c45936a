#pragma once

#include <cstdint>
#include <stdexcept>

#include "besse/classifier.hpp"
#include "besse/rational.hpp"
#include "besse/seifert.hpp"

namespace besse {

/// Coprime weights (p, q) of the circle action z.(z0, z1) = (z^p z0, z^q z1)
/// on S^3, stored with p <= q.
class WeightedHopfSpec {
 public:
  /// Throws InvalidInput(NotCoprime) unless gcd(p, q) == 1, and
  /// InvalidInput(NonPositiveMultiplicity) for a weight below 1.
  WeightedHopfSpec(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// A generated fibration together with the spectrum of its Besse flow.
struct BesseExample {
  SeifertInvariants invariants;
  PeriodSpectrum spectrum;
  WeightedHopfSpec weights;
};

/// Seifert data (0; (p, x), (q, y)) with x*q + y*p = 1 from the extended gcd,
/// returned in normal form. The Euler number is -1/(pq).
BesseExample weighted_hopf(std::int64_t p, std::int64_t q);

/// Same construction from an explicit Bezout solution x*q + y*p = 1, before
/// normalization. Throws std::invalid_argument if the identity fails.
SeifertInvariants weighted_hopf_from_bezout(const WeightedHopfSpec& spec, std::int64_t x, std::int64_t y);

class NonPositiveAxis : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Boundary of the ellipsoid E(a, b): writes b/a = q/p in lowest terms and
/// defers to weighted_hopf(p, q). Throws NonPositiveAxis unless a, b > 0.
BesseExample ellipsoid_boundary(const Rational& a, const Rational& b);

/// (g; (1, 0)), the product fibration over the genus-g base.
SeifertInvariants trivial_fibration(std::int64_t genus);

}  // namespace besse
