#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "besse/geometric_examples.hpp"
#include "besse/orbi_cohomology.hpp"

using namespace besse;

namespace {
PeriodSpectrum P(std::vector<Rational> v) { return PeriodSpectrum::from_values(std::move(v)); }
}  // namespace

TEST_CASE("WeightedHopfSpec") {
  WeightedHopfSpec spec(5, 3);
  CHECK(spec.p() == 3);
  CHECK(spec.q() == 5);
  CHECK_THROWS_AS(WeightedHopfSpec(2, 4), InvalidInput);
  CHECK_THROWS_AS(WeightedHopfSpec(0, 1), InvalidInput);
}

TEST_CASE("weighted_hopf examples") {
  auto hopf = weighted_hopf(1, 1);
  CHECK(euler_number(hopf.invariants) == Rational(-1));
  CHECK(hopf.invariants == validate(0, {{1, 1}}));
  CHECK(hopf.spectrum == P({1}));

  // x*q + y*p = 1 with (x, y) = (1, -1) gives (0;(2,1),(3,-1)), e = -(1/2 - 1/3).
  auto ex = weighted_hopf(2, 3);
  CHECK(euler_number(ex.invariants) == Rational(-1, 6));
  CHECK(ex.spectrum == P({1, Rational(1, 2), Rational(1, 3)}));
  CHECK(equivalent(ex.invariants, weighted_hopf_from_bezout(WeightedHopfSpec(2, 3), 1, -1)));

  CHECK(weighted_hopf(1, 2).spectrum == P({1, Rational(1, 2)}));
  CHECK(weighted_hopf(3, 2).invariants == ex.invariants);
  CHECK_THROWS_AS(weighted_hopf(4, 6), InvalidInput);
}

TEST_CASE("weighted_hopf over all coprime weights up to 50") {
  for (std::int64_t p = 1; p <= 50; ++p)
    for (std::int64_t q = 1; q <= 50; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto ex = weighted_hopf(p, q);
      CHECK(euler_number(ex.invariants) == Rational(-1, p * q));
      CHECK(is_besse_realizable(ex.invariants));
      std::vector<Rational> expected{1};
      if (p >= 2) expected.emplace_back(1, p);
      if (q >= 2) expected.emplace_back(1, q);
      CHECK(ex.spectrum == P(expected));
      CHECK(prime_period_spectrum(ex.invariants) == ex.spectrum);
    }
}

TEST_CASE("the Bezout representative does not matter") {
  for (std::int64_t p = 1; p <= 15; ++p)
    for (std::int64_t q = p; q <= 15; ++q) {
      if (std::gcd(p, q) != 1) continue;
      WeightedHopfSpec spec(p, q);
      auto bz = extended_gcd(q, p);
      auto reference = weighted_hopf(p, q).invariants;
      for (std::int64_t t = -4; t <= 4; ++t) {
        auto s = weighted_hopf_from_bezout(spec, bz.x + t * p, bz.y - t * q);
        CHECK(equivalent(s, reference, false));
      }
    }
  CHECK_THROWS_AS(weighted_hopf_from_bezout(WeightedHopfSpec(2, 3), 1, 1), std::invalid_argument);
}

TEST_CASE("ellipsoid_boundary") {
  CHECK(ellipsoid_boundary(1, 1).invariants == weighted_hopf(1, 1).invariants);
  CHECK(ellipsoid_boundary(1, Rational(3, 2)).invariants == weighted_hopf(2, 3).invariants);
  auto e = ellipsoid_boundary(2, 1);
  CHECK(e.weights.p() == 1);
  CHECK(e.weights.q() == 2);
  CHECK(e.invariants == weighted_hopf(1, 2).invariants);
  CHECK_THROWS_AS(ellipsoid_boundary(0, 1), NonPositiveAxis);
  CHECK_THROWS_AS(ellipsoid_boundary(1, Rational(-1, 2)), NonPositiveAxis);
}

TEST_CASE("only the axis ratio matters") {
  const std::vector<Rational> scales{Rational(1, 7), Rational(2, 3), 5, Rational(11, 4)};
  for (std::int64_t an = 1; an <= 6; ++an)
    for (std::int64_t bn = 1; bn <= 6; ++bn)
      for (const auto& lambda : scales) {
        Rational a(an, 2), b(bn, 3);
        CHECK(equivalent(ellipsoid_boundary(a, b).invariants,
                         ellipsoid_boundary(lambda * a, lambda * b).invariants, false));
      }
}

TEST_CASE("trivial_fibration") {
  for (std::int64_t g = -3; g <= 3; ++g) {
    auto t = trivial_fibration(g);
    CHECK(t.genus() == g);
    CHECK(euler_number(t) == Rational(0));
    CHECK_FALSE(is_besse_realizable(t));
  }
}

TEST_CASE("weighted Hopf bundles agree with the cohomological criterion") {
  for (std::int64_t p = 1; p <= 20; ++p)
    for (std::int64_t q = 1; q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::vector<std::int64_t> weights{p, q};
      auto ring = weighted_projective_ring(weights);
      CHECK(total_space_is_manifold(ring, EulerClassCoeff(ring, 1)) ==
            is_besse_realizable(weighted_hopf(p, q).invariants));
    }
}
