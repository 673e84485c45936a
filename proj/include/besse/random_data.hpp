#pragma once

#include <cstdint>
#include <random>

#include "besse/seifert.hpp"

namespace besse {

struct RandomInvariantsOptions {
  std::size_t max_pairs = 5;
  std::int64_t max_multiplicity = 12;
  std::int64_t max_abs_twist = 30;
  std::int64_t max_abs_genus = 3;
};

/// Uniformly chosen pair count, multiplicities and twists, resampled until
/// every pair is coprime.
SeifertInvariants random_invariants(std::mt19937_64& rng, const RandomInvariantsOptions& opts = {});

/// Applies one randomly chosen elementary move. Insertion is skipped once
/// the invariants carry `max_pairs` pairs.
SeifertInvariants random_move(std::mt19937_64& rng, const SeifertInvariants& s, std::size_t max_pairs = 8);

}  // namespace besse
