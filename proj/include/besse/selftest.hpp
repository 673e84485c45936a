#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace besse {

struct SelftestResult {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t realizable = 0;
  std::vector<std::string> failures;  // one line per disagreement

  bool ok() const { return failures.empty(); }
};

/// Randomized cross-checks on `iterations` random invariants: the two
/// realizability routes are complementary, a random move sequence keeps the
/// Euler number, normal form and spectrum, and normalization is idempotent.
SelftestResult run_selftest(std::uint64_t seed, std::size_t iterations);

}  // namespace besse
