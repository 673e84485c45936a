#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "besse/rational.hpp"
#include "besse/seifert.hpp"

namespace besse {

/// Prime period spectrum of a Besse Reeb flow, rescaled so the generic
/// period is 1 (units of 2*pi). Holds 1 and 1/a for each exceptional
/// multiplicity a, sorted descending, without repetition.
class PeriodSpectrum {
 public:
  /// Builds a spectrum from a set of values; throws std::invalid_argument
  /// unless 1 is present and every value is 1/a for an integer a >= 1.
  static PeriodSpectrum from_values(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  bool contains(const Rational& r) const;

  friend bool operator==(const PeriodSpectrum&, const PeriodSpectrum&) = default;

 private:
  explicit PeriodSpectrum(std::vector<Rational> values) : values_(std::move(values)) {}
  std::vector<Rational> values_;
};

/// Thrown when a spectrum is requested for a fibration with Euler number 0.
class NotRealizable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fibration is realized by a Besse Reeb flow iff its Euler number is nonzero.
bool is_besse_realizable(const SeifertInvariants& s);

/// Whether some finite cover is a trivial fibration; decided through the
/// Euler number and complementary to is_besse_realizable.
bool finitely_covered_by_trivial(const SeifertInvariants& s);

/// {1} together with {1/a_i : a_i >= 2}. Throws NotRealizable when the
/// Euler number vanishes.
PeriodSpectrum prime_period_spectrum(const SeifertInvariants& s);

bool spectra_match(const PeriodSpectrum& p1, const PeriodSpectrum& p2);

enum class Verdict { StrictlyContactomorphic, Distinct, NotRealizable };
enum class Side { First, Second, Both };

std::string_view to_string(Verdict v);
std::string_view to_string(Side s);

/// What the classifier looked at for one input.
struct SideWitness {
  SeifertInvariants normal_form;
  Rational euler_number;
  std::optional<PeriodSpectrum> spectrum;  // empty when not realizable
};

struct ClassificationResult {
  Verdict verdict = Verdict::Distinct;
  std::optional<Side> unrealizable;  // set exactly when verdict is NotRealizable
  bool spectra_match = false;
  SideWitness first;
  SideWitness second;
};

/// Classifies two Besse contact 3-manifolds up to strict contactomorphism by
/// comparing the Seifert fibrations their Reeb flows induce.
ClassificationResult classify(const SeifertInvariants& s1, const SeifertInvariants& s2,
                              bool allow_reversal = false);

}  // namespace besse
