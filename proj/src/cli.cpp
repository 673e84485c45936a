#include "besse/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "besse/report.hpp"
#include "besse/selftest.hpp"

namespace besse::cli {

namespace {

using report::Json;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto r = Rational::parse(item);
    if (!r.is_integer()) throw InvalidInput(InputError::Malformed, "expected integer, got '" + item + "'");
    values.push_back(r.num());
  }
  if (values.empty()) throw InvalidInput(InputError::Malformed, "expected a comma separated list of integers");
  return values;
}

struct Options {
  std::string format = "json";
  std::string seifert;
  std::string first;
  std::string second;
  bool allow_reversal = false;
  std::string weights;
  std::int64_t cyclic = 0;
  std::optional<std::int64_t> euler_coeff;
  std::int64_t max_degree = -1;
  std::vector<std::int64_t> hopf;
  std::vector<std::string> ellipsoid;
  std::optional<std::int64_t> trivial;
  std::uint64_t seed = 1;
  std::size_t iterations = 10000;
};

void emit(std::ostream& out, const Options& opts, const Json& doc) {
  if (opts.format == "text") out << report::to_text(doc);
  else out << doc.dump(2) << '\n';
}

Json error_doc(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Besse Reeb flows on Seifert fibered 3-manifolds", "besse"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  const char* seifert_help = "Seifert invariants 'g;(a1,b1),(a2,b2),...'";
  auto single = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--seifert", opts.seifert, seifert_help)->required();
    return cmd;
  };
  auto* normalize_cmd = single("normalize", "Normal form of the invariants");
  auto* euler_cmd = single("euler", "Euler number -sum b/a");
  auto* base_cmd = single("base", "Base 2-orbifold");
  auto* realizable_cmd = single("realizable", "Whether a Besse Reeb flow induces the fibration");
  auto* spectrum_cmd = single("spectrum", "Prime period spectrum in units of 2pi");

  auto* compare_cmd = app.add_subcommand("compare", "Classify two Besse 3-manifolds up to strict contactomorphism");
  compare_cmd->add_option("--first", opts.first, seifert_help)->required();
  compare_cmd->add_option("--second", opts.second, seifert_help)->required();
  compare_cmd->add_flag("--allow-reversal", opts.allow_reversal, "Also accept orientation-reversing equivalences");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Cyclic orbifold cohomology rings");
  auto* weights_opt = cohomology_cmd->add_option("--weights", opts.weights, "Weights a0,...,an of CP^n_a");
  auto* cyclic_opt = cohomology_cmd->add_option("--cyclic", opts.cyclic, "Order k of C/Z_k");
  weights_opt->excludes(cyclic_opt);
  cohomology_cmd->add_option("--euler-coeff", opts.euler_coeff, "Euler class e = k*u");
  cohomology_cmd->add_option("--max-degree", opts.max_degree, "Last degree listed in 'groups'");

  auto* example_cmd = app.add_subcommand("example", "Generate a geometric example");
  auto* hopf_opt = example_cmd->add_option("--hopf", opts.hopf, "Weighted Hopf action with weights p q")->expected(2);
  auto* ellipsoid_opt = example_cmd->add_option("--ellipsoid", opts.ellipsoid, "Ellipsoid axes a b (rationals)")->expected(2);
  auto* trivial_opt = example_cmd->add_option("--trivial", opts.trivial, "Trivial fibration over genus g");
  hopf_opt->excludes(ellipsoid_opt)->excludes(trivial_opt);
  ellipsoid_opt->excludes(trivial_opt);

  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized internal consistency checks");
  selftest_cmd->add_option("--seed", opts.seed, "Random seed");
  selftest_cmd->add_option("--iterations", opts.iterations, "Number of random inputs");

  std::vector<std::string> argv(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--format") {
      ++i;
      continue;
    }
    if (argv[i].rfind('-', 0) == 0) continue;
    if (app.get_subcommand_no_throw(argv[i]) == nullptr) {
      std::string message = "unknown subcommand '" + argv[i] + "'";
      err << "usage error: " << message << '\n' << app.help();
      emit(out, opts, error_doc("Usage", message));
      return kInvalidInput;
    }
    break;
  }
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    emit(out, opts, error_doc("Usage", e.what()));
    return kInvalidInput;
  }

  try {
    Json doc;
    if (app.got_subcommand(compare_cmd)) {
      auto s1 = parse_seifert(opts.first);
      auto s2 = parse_seifert(opts.second);
      auto result = classify(s1, s2, opts.allow_reversal);
      doc = report::comparison(result, opts.allow_reversal);
      doc["first"]["input"] = s1.to_string();
      doc["second"]["input"] = s2.to_string();
    } else if (app.got_subcommand(cohomology_cmd)) {
      CyclicGradedRing ring;
      std::string origin;
      if (*weights_opt) {
        auto weights = parse_int_list(opts.weights);
        ring = weighted_projective_ring(weights);
        origin = "weighted projective space, weights " + opts.weights;
      } else if (*cyclic_opt) {
        ring = cyclic_quotient_ring(opts.cyclic);
        origin = "C/Z_" + std::to_string(opts.cyclic);
      } else {
        throw InvalidInput(InputError::Malformed, "cohomology needs --weights or --cyclic");
      }
      std::optional<EulerClassCoeff> coeff;
      if (opts.euler_coeff) coeff.emplace(ring, *opts.euler_coeff);
      std::int64_t max_degree = opts.max_degree >= 0 ? opts.max_degree : ring.stable_degree() + 3;
      doc = report::cohomology(ring, origin, coeff, max_degree);
    } else if (app.got_subcommand(example_cmd)) {
      if (*hopf_opt) {
        doc = report::example(weighted_hopf(opts.hopf[0], opts.hopf[1]),
                              Json{{"kind", "weighted_hopf"}, {"p", opts.hopf[0]}, {"q", opts.hopf[1]}});
      } else if (*ellipsoid_opt) {
        auto a = Rational::parse(opts.ellipsoid[0]);
        auto b = Rational::parse(opts.ellipsoid[1]);
        doc = report::example(ellipsoid_boundary(a, b),
                              Json{{"kind", "ellipsoid"}, {"a", a.to_string()}, {"b", b.to_string()}});
      } else if (*trivial_opt) {
        doc = report::fibration(trivial_fibration(*opts.trivial));
        doc["provenance"] = Json{{"kind", "trivial"}, {"genus", *opts.trivial}};
      } else {
        throw InvalidInput(InputError::Malformed, "example needs --hopf, --ellipsoid or --trivial");
      }
    } else if (app.got_subcommand(selftest_cmd)) {
      auto result = run_selftest(opts.seed, opts.iterations);
      doc = Json{{"selftest", Json{{"seed", result.seed},
                                   {"iterations", result.iterations},
                                   {"realizable", result.realizable},
                                   {"failures", result.failures},
                                   {"ok", result.ok()}}}};
      emit(out, opts, doc);
      return result.ok() ? kOk : kInconsistent;
    } else {
      auto s = parse_seifert(opts.seifert);
      Json base{{"input", s.to_string()}};
      if (app.got_subcommand(normalize_cmd)) {
        base["normal_form"] = normalize(s).to_string();
        base["euler_number"] = euler_number(s).to_string();
      } else if (app.got_subcommand(euler_cmd)) {
        base["euler_number"] = euler_number(s).to_string();
      } else if (app.got_subcommand(base_cmd)) {
        base["base"] = report::base(base_of(s));
      } else if (app.got_subcommand(spectrum_cmd)) {
        base["euler_number"] = euler_number(s).to_string();
        base["spectrum"] = report::spectrum(prime_period_spectrum(s));
      } else if (app.got_subcommand(realizable_cmd)) {
        base = report::fibration(s);
        if (is_besse_realizable(s) == finitely_covered_by_trivial(s))
          throw ConsistencyError("realizability routes disagree for " + s.to_string());
      }
      doc = std::move(base);
    }
    doc["command"] = app.get_subcommands().front()->get_name();
    emit(out, opts, doc);
    return kOk;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    emit(out, opts, error_doc("Inconsistent", e.what()));
    return kInconsistent;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    emit(out, opts, error_doc(std::string(to_string(e.kind())), e.what()));
    return kInvalidInput;
  } catch (const NotRealizable& e) {
    err << "not realizable: " << e.what() << '\n';
    emit(out, opts, error_doc("NotRealizable", e.what()));
    return kInvalidInput;
  } catch (const std::exception& e) {
    // Remaining library errors (bad weights, axes, overflow) are input problems.
    err << "invalid input: " << e.what() << '\n';
    emit(out, opts, error_doc("InvalidInput", e.what()));
    return kInvalidInput;
  }
}

}  // namespace besse::cli
