#include "besse/selftest.hpp"

#include <random>

#include "besse/classifier.hpp"
#include "besse/random_data.hpp"

namespace besse {

SelftestResult run_selftest(std::uint64_t seed, std::size_t iterations) {
  SelftestResult result;
  result.seed = seed;
  result.iterations = iterations;
  std::mt19937_64 rng(seed);
  auto fail = [&](const SeifertInvariants& s, const std::string& what) {
    result.failures.push_back(s.to_string() + ": " + what);
  };

  for (std::size_t it = 0; it < iterations; ++it) {
    auto s = random_invariants(rng);
    bool realizable = is_besse_realizable(s);
    if (realizable == finitely_covered_by_trivial(s))
      fail(s, "is_besse_realizable and finitely_covered_by_trivial agree");
    if (realizable) ++result.realizable;

    auto normal = normalize(s);
    if (normalize(normal) != normal) fail(s, "normalize is not idempotent");

    auto moved = s;
    for (int step = 0; step < 8; ++step) moved = random_move(rng, moved);
    if (euler_number(moved) != euler_number(s)) fail(s, "Euler number changed under moves");
    if (normalize(moved) != normal) fail(s, "normal form changed under moves");
    if (is_besse_realizable(moved) != realizable) fail(s, "realizability changed under moves");
    if (realizable && !spectra_match(prime_period_spectrum(moved), prime_period_spectrum(s)))
      fail(s, "spectrum changed under moves");
  }
  return result;
}

}  // namespace besse
