#include "besse/orbi_cohomology.hpp"

#include <numeric>
#include <vector>

namespace besse {

CyclicGradedRing weighted_projective_ring(std::span<const std::int64_t> weights) {
  if (weights.empty()) throw EmptyWeights("weighted projective space needs at least one weight");
  std::int64_t product = 1;
  for (auto w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
    if (__builtin_mul_overflow(product, w, &product))
      throw std::overflow_error("product of weights overflows");
  }
  return CyclicGradedRing{static_cast<std::int64_t>(weights.size()), product};
}

CyclicGradedRing cyclic_quotient_ring(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
  return CyclicGradedRing{1, k};
}

EulerClassCoeff::EulerClassCoeff(const CyclicGradedRing& ring, std::int64_t k) : k_(k) {
  if (ring.d == 1) {
    k_ %= ring.m;
    if (k_ < 0) k_ += ring.m;
  }
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::FreeRank1: return "Z";
    case Kind::Cyclic: return "Z/" + std::to_string(order);
    case Kind::Zero: return "0";
  }
  return "?";
}

GroupDescriptor cohomology_group(const CyclicGradedRing& r, std::int64_t i) {
  if (i < 0 || i % 2 != 0) return GroupDescriptor::zero();
  if (i / 2 < r.d) return GroupDescriptor::free_rank1();
  return GroupDescriptor::cyclic(r.m);
}

bool cup_is_isomorphism(const CyclicGradedRing& r, const EulerClassCoeff& e, std::int64_t i) {
  auto source = cohomology_group(r, i);
  auto target = cohomology_group(r, i + 2);
  using Kind = GroupDescriptor::Kind;
  if (source.kind == Kind::Zero && target.kind == Kind::Zero) return true;
  if (source.kind != target.kind) return false;
  if (source.kind == Kind::FreeRank1) return e.k() == 1 || e.k() == -1;
  return euler_condition_by_gcd(r, e);
}

std::optional<std::int64_t> isomorphism_threshold(const CyclicGradedRing& r, const EulerClassCoeff& e) {
  // From degree 2d on the map is the same in every even degree and odd
  // degrees are zero, so degree 2d decides the whole tail.
  if (!cup_is_isomorphism(r, e, r.stable_degree())) return std::nullopt;
  for (std::int64_t i = r.stable_degree() - 1; i >= 0; --i)
    if (!cup_is_isomorphism(r, e, i)) return i + 1;
  return 0;
}

bool euler_condition_by_gcd(const CyclicGradedRing& r, const EulerClassCoeff& e) {
  return std::gcd(e.k(), r.m) == 1;
}

bool euler_condition_by_enumeration(const CyclicGradedRing& r, const EulerClassCoeff& e) {
  // An endomorphism of a finite group is bijective iff its kernel is trivial.
  const std::int64_t m = r.m;
  if (m > kMaxEnumerationOrder)
    throw std::length_error("Z/" + std::to_string(m) + " is too large to enumerate");
  std::int64_t step = e.k() % m;
  if (step < 0) step += m;
  std::int64_t image = 0;
  for (std::int64_t x = 1; x < m; ++x) {
    image += step;
    if (image >= m) image -= m;
    if (image == 0) return false;
  }
  return true;
}

bool euler_condition_holds(const CyclicGradedRing& r, const EulerClassCoeff& e) {
  bool by_gcd = euler_condition_by_gcd(r, e);
  bool by_enum = euler_condition_by_enumeration(r, e);
  if (by_gcd != by_enum)
    throw ConsistencyError("Euler condition routes disagree for m=" + std::to_string(r.m) +
                           ", k=" + std::to_string(e.k()));
  return by_gcd;
}

bool orbifold_is_manifold(const CyclicGradedRing& r) { return r.m == 1; }

bool total_space_is_manifold(const CyclicGradedRing& r, const EulerClassCoeff& e) {
  return euler_condition_holds(r, e);
}

std::string BundleClassCount::to_string() const {
  return infinite_cyclic ? "InfiniteCyclic" : "Finite(" + std::to_string(count) + ")";
}

BundleClassCount count_bundle_classes(const CyclicGradedRing& r) {
  if (r.d == 1) return {false, r.m};
  return {true, 0};
}

}  // namespace besse
