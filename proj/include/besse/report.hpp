#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "besse/classifier.hpp"
#include "besse/geometric_examples.hpp"
#include "besse/orbi_cohomology.hpp"
#include "besse/orbifold_base.hpp"
#include "besse/seifert.hpp"

namespace besse::report {

using Json = nlohmann::json;

Json pair_list(const SeifertInvariants& s);
Json spectrum(const PeriodSpectrum& p);
Json base(const TwoOrbifold& o);

/// Verdict plus the Euler number that decided it.
Json realizability(const SeifertInvariants& s);

/// Full report for one fibration: input echo, normal form, Euler number,
/// base orbifold, realizability and (when realizable) the spectrum.
Json fibration(const SeifertInvariants& s);

Json comparison(const ClassificationResult& result, bool allow_reversal);

/// `origin` names where the ring came from, e.g. "weights 2,3".
Json cohomology(const CyclicGradedRing& r, const std::string& origin,
                const std::optional<EulerClassCoeff>& e, std::int64_t max_degree);

Json example(const BesseExample& ex, const Json& provenance);

/// Key-value rendering: one "dotted.path: value" line per leaf, sorted.
std::string to_text(const Json& doc);

}  // namespace besse::report
