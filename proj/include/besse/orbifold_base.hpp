#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "besse/rational.hpp"
#include "besse/seifert.hpp"

namespace besse {

/// Closed 2-orbifold with only cone points: an underlying surface (orientable
/// of some genus, or nonorientable with `genus` crosscaps) plus cone orders.
struct TwoOrbifold {
  bool orientable = true;
  std::int64_t genus = 0;
  std::vector<std::int64_t> cone_orders;  // sorted ascending, each >= 2

  friend bool operator==(const TwoOrbifold&, const TwoOrbifold&) = default;
};

/// Builds a TwoOrbifold, sorting the cone orders. Throws std::invalid_argument
/// when a cone order is below 2, the genus is negative, or a nonorientable
/// surface has no crosscaps.
TwoOrbifold make_orbifold(bool orientable, std::int64_t genus, std::vector<std::int64_t> cone_orders);

enum class Geometry { Spherical, Euclidean, Hyperbolic, Bad };

std::string_view to_string(Geometry g);

/// Base orbifold of the fibration: the surface from the genus field, one cone
/// point per exceptional fiber.
TwoOrbifold base_of(const SeifertInvariants& s);

/// chi(|O|) - sum (1 - 1/a_i).
Rational orbifold_euler_characteristic(const TwoOrbifold& o);

/// False only for the teardrop S^2(a) and the spindle S^2(a,b) with a != b.
bool is_developable(const TwoOrbifold& o);

Geometry geometry_type(const TwoOrbifold& o);

/// Conventional name, e.g. "S2(2,3,5)", "T2", "RP2(2)", "N3", "F2(3)".
std::string describe(const TwoOrbifold& o);

}  // namespace besse
