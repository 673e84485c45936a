#include "besse/random_data.hpp"

#include <numeric>
#include <vector>

namespace besse {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

SeifertInvariants random_invariants(std::mt19937_64& rng, const RandomInvariantsOptions& opts) {
  auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(opts.max_pairs)));
  std::vector<SeifertPair> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    SeifertPair p{uniform(rng, 1, opts.max_multiplicity), uniform(rng, -opts.max_abs_twist, opts.max_abs_twist)};
    if (p.a == 1 || std::gcd(p.a, p.b) == 1) pairs.push_back(p);
  }
  return validate(uniform(rng, -opts.max_abs_genus, opts.max_abs_genus), std::move(pairs));
}

SeifertInvariants random_move(std::mt19937_64& rng, const SeifertInvariants& s, std::size_t max_pairs) {
  const std::size_t n = s.pairs().size();
  std::vector<std::size_t> trivial;
  for (std::size_t i = 0; i < n; ++i)
    if (s.pairs()[i] == SeifertPair{1, 0}) trivial.push_back(i);

  for (;;) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        if (n >= 2) {
          auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
          auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
          return moves::swap_pairs(s, i, j);
        }
        break;
      case 1:
        if (n < max_pairs) return moves::insert_trivial(s);
        break;
      case 2:
        if (!trivial.empty())
          return moves::remove_trivial(
              s, trivial[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(trivial.size()) - 1))]);
        break;
      default:
        if (n >= 2) {
          auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
          auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
          if (j >= i) ++j;
          return moves::shift_twist(s, i, j);
        }
        break;
    }
  }
}

}  // namespace besse
