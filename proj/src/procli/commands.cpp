#include "procat/procli/commands.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "procat/factor.hpp"
#include "procat/graded.hpp"
#include "procat/probar.hpp"
#include "procat/procli/generators.hpp"
#include "procat/procli/io.hpp"
#include "procat/procli/suites.hpp"

namespace procat::procli {

using factor::ArrowMorphism;
using factor::ReedyFactorization;
using fincat::FinSetMap;
using graded::ElementId;
using probar::OneMorphism;

namespace {

struct Config {
  std::string command;
  std::string input;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  bool has_input = false;
  bool has_depth = false;
  bool has_seed = false;
  std::string format = "json";
  std::vector<int> criteria;
  bool recheck = false;
};

struct Outcome {
  std::string output;
  int status = kExitOk;
};

const fincat::GraphFactorization& graph() {
  static const fincat::GraphFactorization g;
  return g;
}

json config_json(const Config& c) {
  json j{{"command", c.command}};
  if (c.has_input) j["input"] = c.input;
  if (c.has_depth) j["depth"] = c.depth;
  if (c.has_seed) j["seed"] = c.seed;
  if (!c.criteria.empty()) j["criteria"] = c.criteria;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string yes(bool b) { return b ? "true" : "false"; }

void invariant(const std::vector<std::string>& failures, const std::string& what) {
  if (!failures.empty()) fail(ErrorKind::kInvariantFailure, what + ": " + failures.front());
}

// factor: the Reedy factorization of an input or random natural map over a finite poset.
Outcome cmd_factor(const Config& c) {
  std::optional<PosetArrowInput> in;
  if (c.has_input) {
    in = poset_arrow_from_json(read_json_file(c.input));
  } else {
    require(c.has_seed, ErrorKind::kParseError, "factor needs --input or --seed");
    Rng rng(c.seed);
    auto p = random_poset_arrow(rng, 1 + rng.below(8), 5);
    in = PosetArrowInput{p.index, p.arrow, p.depth};
  }
  const ReedyFactorization r = factor::reedy_factorize(in->arrow, graph(), {in->depth, in->depth});
  const auto failures =
      factor::check_reedy(r, factor::MorphismPredicate::injective(), factor::MorphismPredicate::surjective());
  invariant(failures, "factorization");
  const json fj = to_json(r);
  if (c.format == "text") {
    std::ostringstream os;
    for (const auto& e : fj["elements"]) {
      os << "element " << e["element"] << " (level " << e["level"] << "): H = " << e["H"]
         << ", g = " << e["g"]["images"].dump() << ", h = " << e["h"]["images"].dump() << "\n";
    }
    os << "composite: exact\nlw_part levelwise injective: true\nsp_part special surjective: true\n";
    return {os.str()};
  }
  return {dump({{"config", config_json(c)}, {"factorization", fj}, {"failures", json::array()}})};
}

// chi: the chi-construction on a random composable pair over the chain, with its law checks.
Outcome cmd_chi(const Config& c) {
  require(c.has_seed && c.has_depth, ErrorKind::kParseError, "chi needs --seed and --depth");
  Rng rng(c.seed);
  const std::size_t depth = c.depth;
  const OneMorphism f = random_chain_arrow(rng, 2, 3);
  const auto e1 = random_arrow_extension(rng, f, 2, 3, 2);
  const auto e2 = random_arrow_extension(rng, e1.arrow, 2, 3, 2);
  const std::size_t mid_depth = e2.morphism.source_map.alpha()(depth);
  const std::size_t low_depth = e1.morphism.source_map.alpha()(mid_depth);
  const ReedyFactorization r0 = factor::reedy_factorize(f, graph(), {low_depth, low_depth});
  const ReedyFactorization r1 = factor::reedy_factorize(e1.arrow, graph(), {mid_depth, mid_depth});
  const ReedyFactorization r2 = factor::reedy_factorize(e2.arrow, graph(), {depth + 1, depth + 1});
  const OneMorphism chi1 = factor::chi_construct(r0, r1, e1.morphism, graph(), mid_depth);
  const OneMorphism chi2 = factor::chi_construct(r1, r2, e2.morphism, graph(), depth);
  const ArrowMorphism both = factor::compose(e2.morphism, e1.morphism);
  const OneMorphism chi12 = factor::chi_construct(r0, r2, both, graph(), depth);
  invariant(factor::chi_failures(r0, r2, both, chi12, depth), "rectangles");
  const bool composition = probar::equal_upto(chi12, probar::compose(chi2, chi1), depth);
  const ArrowMorphism id = factor::identity_arrow_morphism(e2.arrow);
  const OneMorphism chi_id = factor::chi_construct(r2, r2, id, graph(), depth);
  const bool identity = probar::equal_upto(chi_id, OneMorphism::identity(r2.middle), depth);
  // Monotonicity against the successor reindexing of the identity.
  const auto& chain = graded::standard_chain();
  const graded::IncreasingMap next(chain, chain, [](ElementId n) { return n + 1; });
  const ArrowMorphism up{probar::reindex(id.source_map, next, depth), probar::reindex(id.target_map, next, depth)};
  const OneMorphism chi_up = factor::chi_construct(r2, r2, up, graph(), depth);
  const bool monotone = probar::leq(chi_id, chi_up, depth);
  if (!identity) fail(ErrorKind::kInvariantFailure, "chi of the identity is not the identity");
  if (!composition) fail(ErrorKind::kInvariantFailure, "chi does not respect composition");
  json sizes = json::array();
  for (ElementId b = 0; b <= depth; ++b) sizes.push_back({r0.middle->value(both.source_map.alpha()(b)), r2.middle->value(b)});
  if (c.format == "text") {
    std::ostringstream os;
    for (ElementId b = 0; b <= depth; ++b)
      os << "chi_" << b << ": " << fincat::to_string(chi12.phi(b)) << "\n";
    os << "identity: " << yes(identity) << "\ncomposition: " << yes(composition) << "\nrectangles: true\n"
       << "monotone: " << yes(monotone) << "\n";
    return {os.str()};
  }
  return {dump({{"config", config_json(c)},
                {"chi", truncated_morphism_json(chi12, depth)},
                {"middle_sizes", sizes},
                {"laws", {{"identity", identity}, {"composition", composition}, {"rectangles", true}, {"monotone", monotone}}}})};
}

// lift: finite-set squares and retract extraction from JSON, or a random special-lift instance.
Outcome cmd_lift(const Config& c) {
  if (c.has_input) {
    const json in = read_json_file(c.input);
    require(in.is_object() && in.contains("kind") && in["kind"].is_string(), ErrorKind::kParseError,
            "lift input needs a kind");
    const std::string kind = in["kind"].get<std::string>();
    if (kind == "square") {
      require(in.contains("square"), ErrorKind::kParseError, "missing field square");
      const fincat::LiftingSquare sq = square_from_json(in["square"]);
      require(fincat::commutes(sq), ErrorKind::kPreconditionViolated, "the square does not commute");
      require(sq.left.is_injective(), ErrorKind::kPreconditionViolated, "left leg is not injective");
      const auto lift = factor::finset_solver(sq);
      require(lift.has_value(), ErrorKind::kNoLift, "right leg is not surjective");
      if (!fincat::solves(sq, *lift)) fail(ErrorKind::kInvariantFailure, "lift does not solve the square");
      if (c.format == "text") return {"lift: " + fincat::to_string(*lift) + "\nsolves: true\n"};
      return {dump({{"config", config_json(c)}, {"kind", kind}, {"square", to_json(sq)}, {"lift", to_json(*lift)}})};
    }
    if (kind == "retract") {
      require(in.contains("map"), ErrorKind::kParseError, "missing field map");
      const FinSetMap h = finset_map_from_json(in["map"]);
      const factor::RetractDiagram r = factor::retract_extract(h, graph());
      invariant(factor::retract_failures(r), "retract");
      if (c.format == "text") {
        std::ostringstream os;
        os << "of: " << fincat::to_string(r.of) << "\nsource_in: " << fincat::to_string(r.source_in)
           << "\nsource_out: " << fincat::to_string(r.source_out) << "\nverified: true\n";
        return {os.str()};
      }
      return {dump({{"config", config_json(c)}, {"kind", kind}, {"retract", to_json(r)}})};
    }
    fail(ErrorKind::kParseError, "unknown lift kind " + kind);
  }
  require(c.has_seed, ErrorKind::kParseError, "lift needs --input or --seed");
  Rng rng(c.seed);
  auto p = random_poset_arrow(rng, 1 + rng.below(6), 3);
  const ReedyFactorization r = factor::reedy_factorize(p.arrow, graph(), {p.depth, p.depth});
  auto x = random_pointed_object(rng, p.index, p.depth, 3);
  auto ext = random_pointed_extension(rng, x, p.depth, 2);
  auto lambda = *random_pointed_map(rng, ext.target, r.middle, p.depth);
  const factor::NaturalSquare sq{ext.inclusion, r.sp_part, probar::compose(lambda, ext.inclusion),
                                 probar::compose(r.sp_part, lambda)};
  const OneMorphism lift = factor::lift_against_special(sq, p.depth);
  invariant(factor::lift_failures(sq, lift, p.depth), "lift");
  if (c.format == "text") {
    std::ostringstream os;
    const auto& index = dynamic_cast<const graded::FinitePosetIndex&>(*p.index);
    for (std::size_t e = 0; e < index.poset().size(); ++e)
      os << "lift_" << e << ": " << fincat::to_string(lift.phi(index.id_of(e))) << "\n";
    os << "triangles and naturality: verified\n";
    return {os.str()};
  }
  return {dump({{"config", config_json(c)},
                {"kind", "special"},
                {"right", to_json(r)},
                {"left", poset_arrow_json(sq.left)},
                {"top", poset_arrow_json(sq.top)},
                {"bottom", poset_arrow_json(sq.bottom)},
                {"lift", poset_arrow_json(lift)}})};
}

fincat::FiniteCategory category_input(const Config& c, const char* command) {
  require(c.has_input, ErrorKind::kParseError, std::string(command) + " needs --input");
  return category_from_json(read_json_file(c.input));
}

// aindex: the levels of A_I through depth, with the truncation checks.
Outcome cmd_aindex(const Config& c) {
  require(c.has_depth, ErrorKind::kParseError, "aindex needs --depth");
  const graded::AIndexPoset a(category_input(c, "aindex"));
  if (c.format == "dot") return {truncated_poset_dot(a, c.depth)};
  std::optional<graded::AIndexReport> report;
  if (c.depth >= 1) report = graded::check_a_index(a, c.depth);
  if (report && !report->ok()) {
    auto all = report->cofinite_violations;
    all.insert(all.end(), report->failures.begin(), report->failures.end());
    invariant(all, "A_I truncation checks");
  }
  if (c.format == "text") {
    std::ostringstream os;
    for (std::size_t l = 0; l <= c.depth; ++l) os << "level " << l << ": " << a.level_size(l) << "\n";
    os << "elements: " << a.count_upto(c.depth) << "\n";
    if (report) os << "truncation checks: passed\n";
    return {os.str()};
  }
  json check = nullptr;
  if (report)
    check = {{"ok", true},
             {"upper_bounds_exhaustive", report->upper_bounds_exhaustive},
             {"sections_checked", report->sections_checked},
             {"certificate_instances", report->certificate_instances},
             {"over_category_objects", report->over_category_objects},
             {"cofinality_witnesses", report->cofinality_witnesses},
             {"max_witness_level", report->max_witness_level}};
  return {dump({{"config", config_json(c)}, {"poset", truncated_poset_json(a, c.depth)}, {"check", check}})};
}

// ehdemo: the Edwards-Hastings construction truncated to diagrams with at most depth objects.
Outcome cmd_ehdemo(const Config& c) {
  require(c.has_depth, ErrorKind::kParseError, "ehdemo needs --depth");
  const graded::EhReport r = graded::eh_m_construction(category_input(c, "ehdemo"), c.depth);
  if (c.format == "text") return {graded::to_text(r)};
  json first = nullptr;
  if (r.first_unbounded) first = {r.first_unbounded->first, r.first_unbounded->second};
  return {dump({{"config", config_json(c)},
                {"axiom1", r.category.nonempty},
                {"axiom2", r.category.pairs_have_cones},
                {"axiom3", r.category.parallel_pairs_equalized},
                {"counterexample_condition", r.counterexample_condition()},
                {"max_size", r.max_size},
                {"diagrams", r.diagrams},
                {"truncation_nonempty", r.truncation_nonempty},
                {"truncation_directed", r.truncation_directed},
                {"unbounded_pairs", r.unbounded_pairs},
                {"overlapping_unbounded_pairs", r.overlapping_unbounded_pairs},
                {"first_unbounded", first}})};
}

// rectify: tilde_a of a random arrow family, with its truncated checks.
Outcome cmd_rectify(const Config& c) {
  require(c.has_seed && c.has_depth, ErrorKind::kParseError, "rectify needs --seed and --depth");
  Rng rng(c.seed);
  const std::size_t depth = c.depth;
  auto family = random_arrow_family(rng, 2, 3);
  const probar::Rectification rect = probar::tilde_a(*family);
  invariant(probar::check_shaped(*rect.object, depth), "X_F functoriality");
  std::vector<std::string> cofinality;
  for (const auto& proj : rect.projections)
    for (auto& s : graded::truncated_cofinality(proj, {depth, depth + 13})) cofinality.push_back(std::move(s));
  invariant(cofinality, "projection cofinality");
  auto jx = probar::j_apply(rect.object);
  const probar::FamilyMorphism iso = probar::rectification_iso(family, rect, jx, {14, 18});
  const probar::FamilyMorphism inv = probar::rectification_iso_inverse(family, rect, jx, {6, 18});
  const auto e = *family->shape.find_morphism("0->1");
  const OneMorphism back = probar::compose(inv.components[1], probar::compose(jx->arrows[e], iso.components[0]));
  const probar::EqualityVerdict verdict = probar::dominate_pair(family->arrows[e], back, {3, 24});
  if (c.format == "text") {
    std::ostringstream os;
    os << "index levels:";
    for (std::size_t l = 0; l <= depth; ++l) os << " " << rect.index->level_size(l);
    os << "\nX_F functorial: true\nprojections cofinal: true\n"
       << "j_apply arrow: " << (verdict.verdict == probar::Verdict::kEqual ? "equal" : "unknown") << "\n";
    return {os.str()};
  }
  json projections = json::array(), components = json::array(), transition = json::array();
  for (const auto& proj : rect.projections) projections.push_back(graded::tabulate(proj, depth));
  for (const auto& comp : rect.object->components()) components.push_back(truncated_object_json(*comp, depth));
  for (ElementId a = 0; a < rect.index->count_upto(depth); ++a) transition.push_back(to_json(rect.object->transition(e, a)));
  return {dump({{"config", config_json(c)},
                {"index", truncated_poset_json(*rect.index, depth)},
                {"projections", projections},
                {"components", components},
                {"transition", transition},
                {"j_apply_arrow", to_json(verdict, 3)}})};
}

std::vector<std::string> rerun_args(const json& config) {
  std::vector<std::string> args{config.at("command").get<std::string>()};
  if (config.contains("input")) args.insert(args.end(), {"--input", config["input"].get<std::string>()});
  if (config.contains("depth")) args.insert(args.end(), {"--depth", std::to_string(config["depth"].get<std::size_t>())});
  if (config.contains("seed")) args.insert(args.end(), {"--seed", std::to_string(config["seed"].get<std::uint64_t>())});
  if (config.contains("criteria"))
    for (int k : config["criteria"]) args.insert(args.end(), {"--criterion", std::to_string(k)});
  args.insert(args.end(), {"--format", "json"});
  return args;
}

// verify --recheck: offline validation of factor, square and retract certificates; every other
// artifact is re-derived from its recorded configuration and compared.
Outcome recheck(const Config& c) {
  require(c.has_input, ErrorKind::kParseError, "verify --recheck needs --input");
  const json a = read_json_file(c.input);
  require(a.is_object() && a.contains("config") && a["config"].is_object() && a["config"].contains("command"),
          ErrorKind::kParseError, "not a procat artifact");
  const std::string command = a["config"]["command"].get<std::string>();
  std::vector<std::string> failures;
  std::string method = "offline";
  if (command == "factor") {
    require(a.contains("factorization"), ErrorKind::kParseError, "missing field factorization");
    failures = recheck_reedy(a["factorization"]);
  } else if (command == "lift" && a.value("kind", "") == "square") {
    const fincat::LiftingSquare sq = square_from_json(a.at("square"));
    if (!fincat::solves(sq, finset_map_from_json(a.at("lift")))) failures.push_back("lift does not solve the square");
  } else if (command == "lift" && a.value("kind", "") == "retract") {
    failures = factor::retract_failures(retract_from_json(a.at("retract")));
  } else {
    method = "re-derived";
    std::ostringstream out, err;
    const int status = run(rerun_args(a["config"]), out, err);
    if (status != kExitOk && !(command == "verify" && status == kExitOther))
      failures.push_back("re-derivation exited with status " + std::to_string(status) + ": " + err.str());
    else if (parse_json(out.str()) != a)
      failures.push_back("re-derived artifact differs");
  }
  const int status = failures.empty() ? kExitOk : kExitInvariant;
  if (c.format == "text") {
    std::ostringstream os;
    os << "recheck " << command << " (" << method << "): " << (failures.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& f : failures) os << "  " << f << "\n";
    return {os.str(), status};
  }
  return {dump({{"recheck", command}, {"method", method}, {"ok", failures.empty()}, {"failures", failures}}), status};
}

// verify: the acceptance suites, or --recheck of an emitted artifact.
Outcome cmd_verify(const Config& c) {
  if (c.recheck) return recheck(c);
  require(c.has_seed, ErrorKind::kParseError, "verify needs --seed");
  std::vector<int> criteria = c.criteria;
  if (criteria.empty())
    for (int k = 1; k <= kCriteria; ++k) criteria.push_back(k);
  bool all = true;
  std::ostringstream os;
  json suites = json::array();
  for (int k : criteria) {
    const SuiteResult r = run_criterion(k, c.seed);
    all = all && r.passed();
    os << to_text(r);
    suites.push_back(to_json(r));
  }
  const int status = all ? kExitOk : kExitOther;
  if (c.format == "text") return {os.str(), status};
  return {dump({{"config", config_json(c)}, {"passed", all}, {"suites", suites}}), status};
}

Outcome dispatch(const Config& c) {
  if (c.command == "factor") return cmd_factor(c);
  if (c.command == "chi") return cmd_chi(c);
  if (c.command == "lift") return cmd_lift(c);
  if (c.command == "aindex") return cmd_aindex(c);
  if (c.command == "ehdemo") return cmd_ehdemo(c);
  if (c.command == "rectify") return cmd_rectify(c);
  return cmd_verify(c);
}

}  // namespace

int exit_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError: return kExitParse;
    case ErrorKind::kBudgetExhausted:
    case ErrorKind::kPreimageNotFound: return kExitBudget;
    case ErrorKind::kInvariantFailure: return kExitInvariant;
    default: return kExitPrecondition;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"procat: Reedy factorizations, lifts and index constructions for pro-objects of finite sets"};
  app.require_subcommand(1);
  Config c;
  struct Spec {
    const char* name;
    const char* help;
    std::vector<std::string> formats;
  };
  const std::vector<Spec> specs{
      {"factor", "Reedy factorization of a natural map over a finite poset, with its validation", {"json", "text"}},
      {"chi", "chi-construction on a random composable pair, with law checks", {"json", "text"}},
      {"lift", "lift a square or extract a retract (--input), or lift a random special instance (--seed)", {"json", "text"}},
      {"aindex", "levels of the index A_I of a finite directed category", {"json", "dot", "text"}},
      {"ehdemo", "the Edwards-Hastings construction on a finite category", {"text", "json"}},
      {"rectify", "rectification of a random arrow family", {"json", "text"}},
      {"verify", "run the acceptance suites, or recheck an emitted artifact", {"text", "json"}},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--input", c.input, "input JSON file")->each([&](const std::string&) { c.has_input = true; });
    sub->add_option("--depth", c.depth, "truncation depth")->each([&](const std::string&) { c.has_depth = true; });
    sub->add_option("--seed", c.seed, "seed for generated instances")->each([&](const std::string&) { c.has_seed = true; });
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(s.formats))->default_str(s.formats.front());
    if (std::string(s.name) == "verify") {
      sub->add_option("--criterion", c.criteria, "run only these criteria")->check(CLI::Range(1, kCriteria));
      sub->add_flag("--recheck", c.recheck, "re-validate the artifact given by --input");
    }
    sub->callback([&c, sub, formats = s.formats] {
      c.command = sub->get_name();
      if (sub->get_option("--format")->count() == 0) c.format = formats.front();
    });
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }
  try {
    const Outcome o = dispatch(c);
    out << o.output;
    return o.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

}  // namespace procat::procli
