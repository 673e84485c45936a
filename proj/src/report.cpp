#include "besse/report.hpp"

#include <sstream>

namespace besse::report {

Json pair_list(const SeifertInvariants& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs()) pairs.push_back(Json::array({p.a, p.b}));
  return pairs;
}

Json spectrum(const PeriodSpectrum& p) {
  Json values = Json::array();
  for (const auto& v : p.values()) values.push_back(v.to_string());
  return values;
}

Json base(const TwoOrbifold& o) {
  return Json{
      {"name", describe(o)},
      {"orientable", o.orientable},
      {"genus", o.genus},
      {"cone_orders", o.cone_orders},
      {"euler_characteristic", orbifold_euler_characteristic(o).to_string()},
      {"developable", is_developable(o)},
      {"geometry", std::string(to_string(geometry_type(o)))},
  };
}

Json realizability(const SeifertInvariants& s) {
  auto e = euler_number(s);
  bool realizable = is_besse_realizable(s);
  std::string reason = realizable ? "euler_number = " + e.to_string() + " != 0" : "euler_number = 0";
  return Json{
      {"besse_realizable", realizable},
      {"finitely_covered_by_trivial", finitely_covered_by_trivial(s)},
      {"euler_number", e.to_string()},
      {"reason", reason},
  };
}

Json fibration(const SeifertInvariants& s) {
  auto normal = normalize(s);
  Json doc{
      {"input", s.to_string()},
      {"genus", s.genus()},
      {"pairs", pair_list(s)},
      {"normal_form", normal.to_string()},
      {"euler_number", euler_number(s).to_string()},
      {"base", base(base_of(s))},
      {"realizability", realizability(s)},
  };
  doc["spectrum"] = is_besse_realizable(s) ? spectrum(prime_period_spectrum(s)) : Json(nullptr);
  if (!s.orientable_base())
    doc["note"] = "nonorientable base: only vanishing of the Euler number is convention-independent";
  return doc;
}

namespace {

Json side(const SideWitness& w) {
  return Json{
      {"normal_form", w.normal_form.to_string()},
      {"euler_number", w.euler_number.to_string()},
      {"spectrum", w.spectrum ? spectrum(*w.spectrum) : Json(nullptr)},
  };
}

}  // namespace

Json comparison(const ClassificationResult& result, bool allow_reversal) {
  Json doc{
      {"verdict", std::string(to_string(result.verdict))},
      {"allow_reversal", allow_reversal},
      {"spectra_match", result.spectra_match},
      {"first", side(result.first)},
      {"second", side(result.second)},
  };
  doc["not_realizable"] = result.unrealizable ? Json(std::string(to_string(*result.unrealizable))) : Json(nullptr);
  return doc;
}

Json cohomology(const CyclicGradedRing& r, const std::string& origin,
                const std::optional<EulerClassCoeff>& e, std::int64_t max_degree) {
  Json groups = Json::array();
  for (std::int64_t i = 0; i <= max_degree; ++i) groups.push_back(cohomology_group(r, i).to_string());
  Json doc{
      {"origin", origin},
      {"ring", Json{{"d", r.d}, {"m", r.m}, {"presentation", "Z[u]/<" + std::to_string(r.m) + "*u^" + std::to_string(r.d) + ">"}}},
      {"groups", groups},
      {"orbifold_is_manifold", orbifold_is_manifold(r)},
      {"bundle_classes", count_bundle_classes(r).to_string()},
      {"stable_range_start", r.stable_degree()},
  };
  if (e) {
    bool by_gcd = euler_condition_by_gcd(r, *e);
    bool by_enum = euler_condition_by_enumeration(r, *e);
    auto threshold = isomorphism_threshold(r, *e);
    doc["euler_class"] = Json{
        {"k", e->k()},
        {"condition_by_gcd", by_gcd},
        {"condition_by_enumeration", by_enum},
        {"euler_condition_holds", euler_condition_holds(r, *e)},
        {"total_space_is_manifold", total_space_is_manifold(r, *e)},
        {"cup_iso_from_degree", threshold ? Json(*threshold) : Json(nullptr)},
        {"holds_in_stable_range", threshold && *threshold <= r.stable_degree()},
        {"holds_from_degree_2d_minus_1", threshold && *threshold <= r.stable_degree() - 1},
    };
  }
  return doc;
}

Json example(const BesseExample& ex, const Json& provenance) {
  Json doc = fibration(ex.invariants);
  doc["weights"] = Json::array({ex.weights.p(), ex.weights.q()});
  doc["provenance"] = provenance;
  doc["construction"] = "Bezout: (0;(p,x),(q,y)) with x*q + y*p = 1";
  return doc;
}

namespace {

void flatten(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else {
    out << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

std::string to_text(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace besse::report
