#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "besse/orbifold_base.hpp"
#include "besse/random_data.hpp"
#include "oracles.hpp"

using namespace besse;

namespace {
SeifertInvariants S(std::int64_t g, std::vector<SeifertPair> pairs) { return validate(g, std::move(pairs)); }
TwoOrbifold sphere(std::vector<std::int64_t> cones) { return make_orbifold(true, 0, std::move(cones)); }
}  // namespace

TEST_CASE("base_of") {
  CHECK(base_of(S(0, {{1, 0}})) == sphere({}));
  CHECK(base_of(S(0, {{1, -1}, {2, 1}, {3, 1}, {5, 1}})) == sphere({2, 3, 5}));
  auto rp2 = base_of(S(-1, {{2, 1}}));
  CHECK_FALSE(rp2.orientable);
  CHECK(rp2.genus == 1);
  CHECK(rp2.cone_orders == std::vector<std::int64_t>{2});
  CHECK(describe(rp2) == "RP2(2)");
  CHECK(describe(base_of(S(0, {{5, 1}, {2, 1}, {3, 1}}))) == "S2(2,3,5)");
}

TEST_CASE("make_orbifold rejects malformed data") {
  CHECK_THROWS_AS(make_orbifold(true, 0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbifold(false, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbifold(true, -1, {}), std::invalid_argument);
}

TEST_CASE("orbifold Euler characteristic") {
  CHECK(orbifold_euler_characteristic(sphere({})) == Rational(2));
  // 2 - (1/2 + 2/3 + 4/5) = (60 - 15 - 20 - 24) / 30.
  CHECK(orbifold_euler_characteristic(sphere({2, 3, 5})) == Rational(60 - 15 - 20 - 24, 30));
  CHECK(orbifold_euler_characteristic(sphere({2, 3, 5})) == Rational(1, 30));
  CHECK(orbifold_euler_characteristic(make_orbifold(true, 1, {})) == Rational(0));
  CHECK(orbifold_euler_characteristic(make_orbifold(false, 1, {})) == Rational(1));
  CHECK(orbifold_euler_characteristic(make_orbifold(false, 2, {})) == Rational(0));
  CHECK(orbifold_euler_characteristic(sphere({2, 3, 6})) == Rational(0));
  CHECK(orbifold_euler_characteristic(make_orbifold(true, 2, {3})) == Rational(-2) - Rational(2, 3));
}

TEST_CASE("adding a cone point of order a lowers chi by 1 - 1/a") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 500; ++it) {
    bool orientable = rng() % 2;
    std::int64_t genus = static_cast<std::int64_t>(rng() % 4) + (orientable ? 0 : 1);
    std::vector<std::int64_t> cones;
    for (auto n = rng() % 5; n > 0; --n) cones.push_back(2 + static_cast<std::int64_t>(rng() % 10));
    auto o = make_orbifold(orientable, genus, cones);
    std::int64_t a = 2 + static_cast<std::int64_t>(rng() % 10);
    cones.push_back(a);
    auto bigger = make_orbifold(orientable, genus, cones);
    CHECK(orbifold_euler_characteristic(o) - orbifold_euler_characteristic(bigger) == Rational(1) - Rational(1, a));
  }
}

TEST_CASE("developability") {
  CHECK_FALSE(is_developable(sphere({3})));
  CHECK(is_developable(sphere({2, 2})));
  CHECK_FALSE(is_developable(sphere({2, 3})));
  CHECK(is_developable(make_orbifold(true, 1, {})));
  CHECK(is_developable(make_orbifold(false, 1, {5})));
  CHECK(is_developable(make_orbifold(true, 1, {7})));
}

TEST_CASE("developable spherical sphere-orbifolds are exactly the SO(3) quotients") {
  // Among spheres with positive chi, developability must match the list of
  // quotients S^2/G for finite G in SO(3).
  for (std::int64_t n = 0; n <= 3; ++n) {
    std::vector<std::int64_t> cones(static_cast<std::size_t>(n), 2);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t idx, std::int64_t lo) {
      if (idx == cones.size()) {
        auto o = sphere(cones);
        if (orbifold_euler_characteristic(o).sign() <= 0) {
          CHECK(is_developable(o));
          return;
        }
        std::vector<long long> ll(cones.begin(), cones.end());
        CHECK(is_developable(o) == oracle::is_spherical_quotient_signature(ll));
        return;
      }
      for (std::int64_t a = lo; a <= 12; ++a) {
        cones[idx] = a;
        walk(idx + 1, a);
      }
    };
    walk(0, 2);
  }
}

TEST_CASE("geometry_type") {
  CHECK(geometry_type(sphere({2, 3, 5})) == Geometry::Spherical);
  CHECK(geometry_type(sphere({2, 3, 6})) == Geometry::Euclidean);
  CHECK(geometry_type(sphere({5})) == Geometry::Bad);
  CHECK(geometry_type(sphere({2, 3, 7})) == Geometry::Hyperbolic);
  CHECK(geometry_type(make_orbifold(true, 1, {})) == Geometry::Euclidean);
  CHECK(geometry_type(make_orbifold(true, 2, {})) == Geometry::Hyperbolic);
  CHECK(to_string(Geometry::Bad) == "Bad");
}

TEST_CASE("the base is unchanged by normalization") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 2000; ++it) {
    auto s = random_invariants(rng);
    CHECK(base_of(normalize(s)) == base_of(s));
  }
}

TEST_CASE("developability only sees the surface and the cone multiset") {
  auto a = base_of(S(0, {{3, 1}, {2, 1}}));
  auto b = base_of(S(0, {{2, -1}, {1, 9}, {3, 2}}));
  CHECK(a == b);
  CHECK(is_developable(a) == is_developable(b));
}
