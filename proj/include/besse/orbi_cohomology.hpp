#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace besse {

/// The graded ring Z[u] / <m * u^d> with deg u = 2.
///
/// Degree 2j is Z for j < d and Z/m for j >= d; odd degrees vanish. This is
/// the orbifold cohomology of a weighted projective space (d = n + 1,
/// m = product of weights) and of the cone C/Z_k (d = 1, m = k).
struct CyclicGradedRing {
  std::int64_t d = 1;
  std::int64_t m = 1;

  /// First degree of the torsion tail, 2d.
  std::int64_t stable_degree() const { return 2 * d; }

  friend bool operator==(const CyclicGradedRing&, const CyclicGradedRing&) = default;
};

class EmptyWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ring of the weighted projective space CP^n_a for weights (a_0, ..., a_n).
/// Throws EmptyWeights for an empty list, std::invalid_argument for a weight
/// below 1 and std::overflow_error when the product exceeds 64 bits.
CyclicGradedRing weighted_projective_ring(std::span<const std::int64_t> weights);

/// Ring of C/Z_k. Throws std::invalid_argument for k < 1.
CyclicGradedRing cyclic_quotient_ring(std::int64_t k);

/// Coefficient k of a degree-2 class e = k*u. When the ring has d == 1, H^2
/// is Z/m and the coefficient is kept reduced into [0, m).
class EulerClassCoeff {
 public:
  EulerClassCoeff(const CyclicGradedRing& ring, std::int64_t k);
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
};

struct GroupDescriptor {
  enum class Kind { FreeRank1, Cyclic, Zero };
  Kind kind = Kind::Zero;
  std::int64_t order = 0;  // only meaningful for Cyclic, always >= 2 there

  static GroupDescriptor free_rank1() { return {Kind::FreeRank1, 0}; }
  static GroupDescriptor zero() { return {Kind::Zero, 0}; }
  static GroupDescriptor cyclic(std::int64_t order) {
    return order == 1 ? zero() : GroupDescriptor{Kind::Cyclic, order};
  }

  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// H^i of the ring.
GroupDescriptor cohomology_group(const CyclicGradedRing& r, std::int64_t i);

/// Whether cup product with e = k*u maps H^i isomorphically onto H^{i+2}.
bool cup_is_isomorphism(const CyclicGradedRing& r, const EulerClassCoeff& e, std::int64_t i);

/// Smallest i0 such that cup with e is an isomorphism in every degree
/// i >= i0, or nullopt when it fails throughout the tail.
std::optional<std::int64_t> isomorphism_threshold(const CyclicGradedRing& r, const EulerClassCoeff& e);

/// gcd(k, m) == 1.
bool euler_condition_by_gcd(const CyclicGradedRing& r, const EulerClassCoeff& e);

/// Largest torsion order the enumeration route will walk.
inline constexpr std::int64_t kMaxEnumerationOrder = 1'000'000'000;

/// Walks x -> k*x over Z/m and checks that no nonzero x is sent to 0.
/// Throws std::length_error when m exceeds kMaxEnumerationOrder.
bool euler_condition_by_enumeration(const CyclicGradedRing& r, const EulerClassCoeff& e);

/// Thrown when the two routes for the Euler condition disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cup product with e is an isomorphism H^i -> H^{i+2} for all i in the
/// stable range i >= 2d. Computed by both routes; throws ConsistencyError if
/// they disagree.
bool euler_condition_holds(const CyclicGradedRing& r, const EulerClassCoeff& e);

/// The orbifold is a manifold iff its cohomology vanishes in high degrees,
/// i.e. m == 1.
bool orbifold_is_manifold(const CyclicGradedRing& r);

/// The total space of the circle orbibundle with Euler class e is a manifold.
bool total_space_is_manifold(const CyclicGradedRing& r, const EulerClassCoeff& e);

/// Number of principal S^1-orbibundles, i.e. the cardinality of H^2.
struct BundleClassCount {
  bool infinite_cyclic = false;
  std::int64_t count = 0;  // valid when !infinite_cyclic

  std::string to_string() const;
  friend bool operator==(const BundleClassCount&, const BundleClassCount&) = default;
};

BundleClassCount count_bundle_classes(const CyclicGradedRing& r);

}  // namespace besse
