#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "besse/rational.hpp"

namespace besse {

enum class InputError {
  NonPositiveMultiplicity,
  NotCoprime,
  Malformed,
};

std::string_view to_string(InputError kind);

/// Raised for rejected user data. `kind()` says which rule was broken.
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(InputError kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  InputError kind() const { return kind_; }

 private:
  InputError kind_;
};

/// One fiber pair (a, b): a is the multiplicity of the fiber, b the twist.
struct SeifertPair {
  std::int64_t a = 1;
  std::int64_t b = 0;

  friend auto operator<=>(const SeifertPair&, const SeifertPair&) = default;
};

/// Seifert invariants (g; (a1,b1), ..., (an,bn)) of a closed 3-manifold.
///
/// genus >= 0 is an orientable base of that genus; genus < 0 is a
/// nonorientable base with |genus| crosscaps. Pairs with a == 1 are allowed
/// anywhere and carry integral twisting. Instances are only created through
/// validate(), so every value satisfies a >= 1 and gcd(a, b) == 1 for a >= 2.
class SeifertInvariants {
 public:
  std::int64_t genus() const { return genus_; }
  bool orientable_base() const { return genus_ >= 0; }
  std::span<const SeifertPair> pairs() const { return pairs_; }

  /// Text form "g;(a1,b1),(a2,b2)", the same grammar parse() accepts.
  std::string to_string() const;

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;

  friend SeifertInvariants validate(std::int64_t genus, std::vector<SeifertPair> pairs);

 private:
  SeifertInvariants(std::int64_t genus, std::vector<SeifertPair> pairs)
      : genus_(genus), pairs_(std::move(pairs)) {}

  std::int64_t genus_ = 0;
  std::vector<SeifertPair> pairs_;
};

/// Checks raw data and builds invariants. Throws InvalidInput with
/// NonPositiveMultiplicity or NotCoprime.
SeifertInvariants validate(std::int64_t genus, std::vector<SeifertPair> pairs);

/// Parses "g;(a1,b1),(a2,b2),..." (whitespace ignored, the pair list may be
/// empty) and validates the result.
SeifertInvariants parse_seifert(std::string_view text);

/// -sum b_i / a_i.
Rational euler_number(const SeifertInvariants& s);

/// Canonical form: one leading pair (1, b0) carrying the integer part, then
/// the exceptional pairs with 0 < b < a sorted by (a, b).
SeifertInvariants normalize(const SeifertInvariants& s);

/// Negates every b_i.
SeifertInvariants reverse_orientation(const SeifertInvariants& s);

bool equivalent(const SeifertInvariants& s1, const SeifertInvariants& s2,
                bool allow_reversal = false);

/// The elementary moves that generate fiber-preserving equivalence.
/// Each move keeps the Euler number and the normal form unchanged.
namespace moves {

/// Swaps pairs i and j.
SeifertInvariants swap_pairs(const SeifertInvariants& s, std::size_t i, std::size_t j);

/// Appends (1, 0).
SeifertInvariants insert_trivial(const SeifertInvariants& s);

/// Removes pair i, which must be (1, 0).
SeifertInvariants remove_trivial(const SeifertInvariants& s, std::size_t i);

/// (a_i, b_i), (a_j, b_j) -> (a_i, b_i + a_i), (a_j, b_j - a_j); i != j.
SeifertInvariants shift_twist(const SeifertInvariants& s, std::size_t i, std::size_t j);

}  // namespace moves

}  // namespace besse
