#include "besse/orbifold_base.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace besse {

TwoOrbifold make_orbifold(bool orientable, std::int64_t genus, std::vector<std::int64_t> cone_orders) {
  if (genus < 0) throw std::invalid_argument("orbifold genus must be nonnegative");
  if (!orientable && genus < 1)
    throw std::invalid_argument("nonorientable surface needs at least one crosscap");
  for (auto a : cone_orders)
    if (a < 2) throw std::invalid_argument("cone order must be at least 2");
  std::sort(cone_orders.begin(), cone_orders.end());
  return TwoOrbifold{orientable, genus, std::move(cone_orders)};
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "Spherical";
    case Geometry::Euclidean: return "Euclidean";
    case Geometry::Hyperbolic: return "Hyperbolic";
    case Geometry::Bad: return "Bad";
  }
  return "Unknown";
}

TwoOrbifold base_of(const SeifertInvariants& s) {
  std::vector<std::int64_t> cones;
  for (const auto& p : s.pairs())
    if (p.a >= 2) cones.push_back(p.a);
  bool orientable = s.orientable_base();
  std::int64_t genus = orientable ? s.genus() : -s.genus();
  return make_orbifold(orientable, genus, std::move(cones));
}

Rational orbifold_euler_characteristic(const TwoOrbifold& o) {
  Rational chi = o.orientable ? Rational(2 - 2 * o.genus) : Rational(2 - o.genus);
  for (auto a : o.cone_orders) chi -= Rational(1) - Rational(1, a);
  return chi;
}

bool is_developable(const TwoOrbifold& o) {
  bool sphere = o.orientable && o.genus == 0;
  if (!sphere) return true;
  if (o.cone_orders.size() == 1) return false;
  if (o.cone_orders.size() == 2) return o.cone_orders[0] == o.cone_orders[1];
  return true;
}

Geometry geometry_type(const TwoOrbifold& o) {
  if (!is_developable(o)) return Geometry::Bad;
  int sign = orbifold_euler_characteristic(o).sign();
  if (sign > 0) return Geometry::Spherical;
  if (sign == 0) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

std::string describe(const TwoOrbifold& o) {
  std::string name;
  if (o.orientable) {
    if (o.genus == 0) name = "S2";
    else if (o.genus == 1) name = "T2";
    else name = "F" + std::to_string(o.genus);
  } else {
    name = o.genus == 1 ? "RP2" : o.genus == 2 ? "K2" : "N" + std::to_string(o.genus);
  }
  if (!o.cone_orders.empty()) {
    name += '(';
    for (std::size_t i = 0; i < o.cone_orders.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(o.cone_orders[i]);
    }
    name += ')';
  }
  return name;
}

}  // namespace besse
