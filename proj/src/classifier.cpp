#include "besse/classifier.hpp"

#include <algorithm>

namespace besse {

PeriodSpectrum PeriodSpectrum::from_values(std::vector<Rational> values) {
  for (const auto& v : values)
    if (v.num() != 1) throw std::invalid_argument("spectrum value " + v.to_string() + " is not 1/a");
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || values.front() != Rational(1))
    throw std::invalid_argument("spectrum must contain the generic period 1");
  return PeriodSpectrum(std::move(values));
}

bool PeriodSpectrum::contains(const Rational& r) const {
  return std::find(values_.begin(), values_.end(), r) != values_.end();
}

bool is_besse_realizable(const SeifertInvariants& s) { return !euler_number(s).is_zero(); }

bool finitely_covered_by_trivial(const SeifertInvariants& s) {
  // Independent of is_besse_realizable so the two can be cross-checked: the
  // Euler number vanishes iff sum b_i * (L / a_i) == 0 with L = lcm(a_i).
  __int128 lcm = 1;
  for (const auto& p : s.pairs()) {
    __int128 a = p.a, x = lcm, y = a;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    lcm = lcm / x * a;
    if (lcm > (static_cast<__int128>(1) << 100))
      return euler_number(s).is_zero();
  }
  __int128 total = 0;
  for (const auto& p : s.pairs()) total += static_cast<__int128>(p.b) * (lcm / p.a);
  return total == 0;
}

PeriodSpectrum prime_period_spectrum(const SeifertInvariants& s) {
  if (!is_besse_realizable(s))
    throw NotRealizable("fibration " + s.to_string() + " has Euler number 0");
  std::vector<Rational> values{Rational(1)};
  for (const auto& p : s.pairs())
    if (p.a >= 2) values.emplace_back(1, p.a);
  return PeriodSpectrum::from_values(std::move(values));
}

bool spectra_match(const PeriodSpectrum& p1, const PeriodSpectrum& p2) { return p1 == p2; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlyContactomorphic: return "StrictlyContactomorphic";
    case Verdict::Distinct: return "Distinct";
    case Verdict::NotRealizable: return "NotRealizable";
  }
  return "Unknown";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::First: return "first";
    case Side::Second: return "second";
    case Side::Both: return "both";
  }
  return "unknown";
}

namespace {

SideWitness witness_for(const SeifertInvariants& s) {
  auto e = euler_number(s);
  std::optional<PeriodSpectrum> spectrum;
  if (!e.is_zero()) spectrum = prime_period_spectrum(s);
  return SideWitness{normalize(s), e, std::move(spectrum)};
}

}  // namespace

ClassificationResult classify(const SeifertInvariants& s1, const SeifertInvariants& s2,
                              bool allow_reversal) {
  ClassificationResult result{Verdict::Distinct, std::nullopt, false, witness_for(s1), witness_for(s2)};
  bool ok1 = result.first.spectrum.has_value();
  bool ok2 = result.second.spectrum.has_value();
  if (ok1 && ok2) result.spectra_match = spectra_match(*result.first.spectrum, *result.second.spectrum);

  if (!ok1 || !ok2) {
    result.verdict = Verdict::NotRealizable;
    result.unrealizable = !ok1 && !ok2 ? Side::Both : !ok1 ? Side::First : Side::Second;
  } else if (equivalent(s1, s2, allow_reversal)) {
    result.verdict = Verdict::StrictlyContactomorphic;
  }
  return result;
}

}  // namespace besse
