#include "procat/procli/suites.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "procat/factor.hpp"
#include "procat/graded.hpp"
#include "procat/probar.hpp"
#include "procat/procli/commands.hpp"
#include "procat/procli/generators.hpp"

namespace procat::procli {

using factor::ArrowMorphism;
using factor::MorphismPredicate;
using factor::NaturalSquare;
using factor::ReedyFactorization;
using fincat::FinSetMap;
using graded::ElementId;
using graded::IncreasingMap;
using probar::OneMorphism;
using probar::ProBarObject;
using probar::Verdict;

namespace {

constexpr std::size_t kKeptFailures = 5;

const fincat::GraphFactorization& graph() {
  static const fincat::GraphFactorization g;
  return g;
}

const MorphismPredicate& injective() {
  static const MorphismPredicate p = MorphismPredicate::injective();
  return p;
}

const MorphismPredicate& surjective() {
  static const MorphismPredicate p = MorphismPredicate::surjective();
  return p;
}

IncreasingMap shift(std::size_t k) {
  const auto& c = graded::standard_chain();
  return IncreasingMap(c, c, [k](ElementId n) { return n + k; });
}

// Collects case outcomes; a case is one call of `run_case`, failing on its first failed check.
class Collector {
 public:
  explicit Collector(SuiteResult& r) : r_(r) {}

  void run_case(const std::string& label, const std::function<void(Collector&)>& body) {
    ++r_.cases;
    label_ = label;
    case_failed_ = false;
    try {
      body(*this);
    } catch (const Error& e) {
      record(e.what());
    }
  }

  // Returns ok so that callers can skip dependent checks.
  bool check(bool ok, const std::string& what) {
    if (!ok) record(what);
    return ok;
  }

  bool none(const std::vector<std::string>& failures, const std::string& what) {
    return check(failures.empty(), failures.empty() ? what : what + ": " + failures.front());
  }

 private:
  void record(const std::string& what) {
    if (case_failed_) return;
    case_failed_ = true;
    ++r_.failed;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(label_ + ": " + what);
  }

  SuiteResult& r_;
  std::string label_;
  bool case_failed_ = false;
};

std::string label(const char* kind, int i) { return std::string(kind) + " #" + std::to_string(i); }

// Criterion 1: Reedy factorizations of random natural maps over cofinite posets.
void reedy_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 200; ++i) {
    c.run_case(label("instance", i), [&](Collector& c) {
      auto p = random_poset_arrow(rng, 1 + rng.below(8), 5);
      const ReedyFactorization f = factor::reedy_factorize(p.arrow, graph(), {p.depth, p.depth});
      c.none(factor::check_reedy(f, injective(), surjective()), "factorization invariants");
    });
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Collector timing(r);
  timing.run_case("time budget", [&](Collector& c) { c.check(seconds < 10.0, "200 instances took over 10 s"); });
}

// Criterion 2: identity, composition and monotonicity laws of the chi-construction.
void chi_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  for (int i = 0; i < 20; ++i) {
    c.run_case(label("identity", i), [&](Collector& c) {
      const OneMorphism f = random_chain_arrow(rng, 3, 3);
      const ReedyFactorization rf = factor::reedy_factorize(f, graph(), {5, 5});
      const auto id = factor::identity_arrow_morphism(f);
      const OneMorphism chi = factor::chi_construct(rf, rf, id, graph(), 5);
      c.check(probar::equal_upto(chi, OneMorphism::identity(rf.middle), 5), "chi(id) is not the identity");
      c.none(factor::chi_failures(rf, rf, id, chi, 5), "chi(id) rectangles");
    });
  }
  for (int i = 0; i < 50; ++i) {
    c.run_case(label("composable pair", i), [&](Collector& c) {
      const OneMorphism f = random_chain_arrow(rng, 2, 3);
      const auto e1 = random_arrow_extension(rng, f, 2, 3, 2);
      const auto e2 = random_arrow_extension(rng, e1.arrow, 2, 3, 2);
      const std::size_t depth = 3;
      const std::size_t mid_depth = e2.morphism.source_map.alpha()(depth);
      const std::size_t low_depth = e1.morphism.source_map.alpha()(mid_depth);
      const ReedyFactorization r0 = factor::reedy_factorize(f, graph(), {low_depth, low_depth});
      const ReedyFactorization r1 = factor::reedy_factorize(e1.arrow, graph(), {mid_depth, mid_depth});
      const ReedyFactorization r2 = factor::reedy_factorize(e2.arrow, graph(), {depth, depth});
      const OneMorphism chi1 = factor::chi_construct(r0, r1, e1.morphism, graph(), mid_depth);
      const OneMorphism chi2 = factor::chi_construct(r1, r2, e2.morphism, graph(), depth);
      const ArrowMorphism both = factor::compose(e2.morphism, e1.morphism);
      const OneMorphism chi12 = factor::chi_construct(r0, r2, both, graph(), depth);
      c.check(probar::equal_upto(chi12, probar::compose(chi2, chi1), depth), "chi of the composite differs");
      c.none(factor::chi_failures(r0, r2, both, chi12, depth), "composite rectangles");
    });
  }
  std::size_t monotone = 0;
  for (int i = 0; i < 50; ++i) {
    c.run_case(label("order-related pair", i), [&](Collector& c) {
      const OneMorphism f = random_chain_arrow(rng, 2, 3);
      const auto e = random_arrow_extension(rng, f, 2, 3, 2);
      const std::size_t depth = 3;
      // Raise alpha by 0..2 pointwise, keeping it strictly increasing; at least one step is raised.
      const auto alpha = e.morphism.source_map.alpha();
      std::vector<ElementId> raised;
      for (ElementId b = 0; b <= depth; ++b) {
        ElementId v = alpha(b) + rng.below(3);
        if (!raised.empty() && v <= raised.back()) v = raised.back() + 1;
        raised.push_back(v);
      }
      if (raised == graded::tabulate(alpha, depth)) raised[depth] += 1;
      const auto& chain = graded::standard_chain();
      const IncreasingMap higher(chain, chain, [raised, alpha, depth](ElementId b) {
        return b <= depth ? raised[b] : raised[depth] + (alpha(b) - alpha(depth));
      });
      const ArrowMorphism up{probar::reindex(e.morphism.source_map, higher, depth),
                             probar::reindex(e.morphism.target_map, higher, depth)};
      if (!c.check(probar::leq(e.morphism.source_map, up.source_map, depth) &&
                       probar::leq(e.morphism.target_map, up.target_map, depth),
                   "generated pair is not order-related"))
        return;
      const ReedyFactorization rf = factor::reedy_factorize(f, graph(), {raised[depth], raised[depth]});
      const ReedyFactorization rt = factor::reedy_factorize(e.arrow, graph(), {depth, depth});
      const OneMorphism lo = factor::chi_construct(rf, rt, e.morphism, graph(), depth);
      const OneMorphism hi = factor::chi_construct(rf, rt, up, graph(), depth);
      c.none(factor::chi_failures(rf, rt, up, hi, depth), "raised rectangles");
      if (c.check(probar::leq(lo, hi, depth), "chi is not monotone: chi(lower) <= chi(upper) fails")) ++monotone;
    });
  }
  r.notes.push_back("monotone on " + std::to_string(monotone) + " of 50 order-related pairs");
}

// Criterion 3: lifts of constant injective left legs against Reedy special parts.
void inductive_lift_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  for (int i = 0; i < 100; ++i) {
    c.run_case(label("square", i), [&](Collector& c) {
      auto p = random_poset_arrow(rng, 1 + rng.below(6), 4);
      const ReedyFactorization f = factor::reedy_factorize(p.arrow, graph(), {p.depth, p.depth});
      const std::size_t a = rng.between(0, 3);
      const FinSetMap left = random_injection(rng, a, a + rng.below(3));
      auto base = ProBarObject::constant(p.index, left.cod());
      const auto lambda = *random_pointed_map(rng, base, f.middle, p.depth);
      const NaturalSquare sq = factor::constant_left_square(
          left, f.sp_part, [lambda, left](ElementId t) { return fincat::compose(lambda.phi(t), left); },
          [lambda, f](ElementId t) { return fincat::compose(f.sp_part.phi(t), lambda.phi(t)); });
      if (!c.none(factor::square_failures(sq, p.depth), "generated square")) return;
      const OneMorphism lift = factor::lift_against_special(sq, p.depth);
      c.none(factor::lift_failures(sq, lift, p.depth), "lift");
    });
  }
}

// Criterion 4: round trips through lift_pro_to_bar and domination certificates.
void fullness_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  std::size_t equal = 0, unequal = 0;
  for (int i = 0; i < 100; ++i) {
    c.run_case(label("instance", i), [&](Collector& c) {
      const ChainPair p = random_chain_pair(rng, 2, 3);
      const probar::ClassicMorphism d = rerepresent(rng, p.morphism, 2);
      if (!c.check(probar::check_compatible(d, 4, 16).ok(), "generated data is not compatible")) return;
      const OneMorphism g = probar::lift_pro_to_bar(d, {5, 20});
      c.none(probar::check_natural(g, 5), "lift is not natural");
      c.check(probar::classic_equal(probar::to_pro(g), d, 5, 20) == Verdict::kEqual, "to_pro of the lift differs");
      c.check(probar::stabilized_equal(probar::to_pro(g), d, 20) == Verdict::kEqual, "stabilized round trip differs");
      const OneMorphism& f = p.morphism;
      const OneMorphism raised = probar::reindex(f, graded::compose(shift(1), f.alpha()), 8);
      c.check(probar::dominate_pair(f, raised, {5, 14}).verdict == Verdict::kEqual, "no witness for f <= f'");
      c.check(probar::dominate_pair(f, g, {4, 20}).verdict == Verdict::kEqual, "no witness joining f and its lift");
      auto other = random_natural(rng, p.source, p.target, random_chain_reindexing(rng, 3, 2));
      if (!other) return;
      const Verdict oracle = probar::stabilized_equal(probar::to_pro(f), probar::to_pro(*other), 16);
      if (!c.check(oracle != Verdict::kUnknown, "stabilized oracle undecided")) return;
      const bool certified = probar::dominate_pair(f, *other, {4, 16}).verdict == Verdict::kEqual;
      c.check(certified == (oracle == Verdict::kEqual), "domination disagrees with the stabilized oracle");
      (oracle == Verdict::kEqual ? equal : unequal)++;
    });
  }
  r.notes.push_back(std::to_string(equal) + " equal and " + std::to_string(unequal) + " unequal random pairs");
}

// Criterion 5: A_I truncation checks over the catalog of small directed categories.
void a_index_suite(SuiteResult& r) {
  Collector c(r);
  for (const auto& nc : fincat::small_directed_catalog()) {
    c.run_case(nc.name, [&](Collector& c) {
      const graded::AIndexPoset a(nc.category);
      const auto report = graded::check_a_index(a, 3);
      c.none(report.cofinite_violations, "cofiniteness");
      c.none(report.failures, "upper bounds and cofinality");
      c.check(report.max_witness_level <= 3, "a cofinality witness lies above level 3");
      c.check(report.over_category_objects > 0, "no over-category objects were checked");
    });
  }
}

// Criterion 6: the Edwards-Hastings demo through the command line on the bundled input.
void eh_suite(SuiteResult& r) {
  Collector c(r);
  c.run_case("ehdemo on the parallel pair", [&](Collector& c) {
    std::ostringstream out, err;
    const std::string input = std::string(PROCAT_DATA_DIR) + "/parallel_pair.json";
    const int status = run({"ehdemo", "--input", input, "--depth", "2", "--format", "text"}, out, err);
    if (!c.check(status == 0, "ehdemo exited with status " + std::to_string(status) + ": " + err.str())) return;
    const std::string text = out.str();
    c.check(text.find("axiom2: true") != std::string::npos, "axiom 2 not reported true");
    c.check(text.find("axiom3: false") != std::string::npos, "axiom 3 not reported false");
  });
}

// Criterion 7: factor-then-lift closes, and retract certificates verify.
void wfs_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  for (int i = 0; i < 60; ++i) {
    c.run_case(label("levelwise square", i), [&](Collector& c) {
      auto p = random_poset_arrow(rng, 1 + rng.below(6), 3);
      const ReedyFactorization f = factor::reedy_factorize(p.arrow, graph(), {p.depth, p.depth});
      if (!c.none(factor::check_reedy(f, injective(), surjective()), "factorization parts")) return;
      auto x = random_pointed_object(rng, p.index, p.depth, 3);
      auto ext = random_pointed_extension(rng, x, p.depth, 2);
      auto u = *random_pointed_map(rng, x, f.middle, p.depth);
      // Bottom: forced to h ∘ u on the image of the inclusion, random elsewhere.
      auto forced = [&](ElementId t, std::size_t y) -> std::optional<std::size_t> {
        if (y < x->value(t)) return f.sp_part.phi(t)(u.phi(t)(y));
        return std::nullopt;
      };
      auto v = random_pointed_map(rng, ext.target, p.arrow.target(), p.depth, forced);
      if (!v) {
        auto lambda = *random_pointed_map(rng, ext.target, f.middle, p.depth);
        u = probar::compose(lambda, ext.inclusion);
        v = probar::compose(f.sp_part, lambda);
      }
      const NaturalSquare sq{ext.inclusion, f.sp_part, u, *v};
      if (!c.none(factor::square_failures(sq, p.depth), "generated square")) return;
      c.check(factor::is_levelwise(sq.left, injective(), p.depth), "left leg is not levelwise injective");
      const OneMorphism lift = factor::lift_against_special(sq, p.depth);
      c.none(factor::lift_failures(sq, lift, p.depth), "lift");
    });
  }
  for (int i = 0; i < 40; ++i) {
    c.run_case(label("retract", i), [&](Collector& c) {
      const std::size_t y = rng.between(1, 3);
      const FinSetMap h = random_surjection(rng, y + rng.below(3), y);
      const factor::RetractDiagram rd = factor::retract_extract(h, graph());
      if (!c.none(factor::retract_failures(rd), "retract certificate")) return;
      c.check(rd.of == fincat::graph_factorization(h).p, "retract is not of p_h");
      const std::size_t a = rng.below(3);
      const FinSetMap left = random_injection(rng, a, a + rng.below(3));
      const FinSetMap top = random_map(rng, a, h.dom());
      std::vector<std::size_t> bottom(left.cod());
      for (auto& b : bottom) b = rng.below(h.cod());
      for (std::size_t k = 0; k < a; ++k) bottom[left(k)] = h(top(k));
      const fincat::LiftingSquare sq{left, h, top, FinSetMap(left.cod(), h.cod(), bottom)};
      c.check(fincat::solves(sq, factor::transport_lift(rd, sq)), "transported lift");
    });
  }
}

// Criterion 8: rectification of random arrow families.
void rectification_suite(SuiteResult& r, Rng& rng) {
  Collector c(r);
  for (int i = 0; i < 50; ++i) {
    c.run_case(label("family", i), [&](Collector& c) {
      auto family = random_arrow_family(rng, 2, 3);
      const probar::Rectification rect = probar::tilde_a(*family);
      c.none(probar::check_shaped(*rect.object, 5), "X_F functoriality");
      c.none(graded::check_cofinite(*rect.index, 6), "product index");
      for (const auto& proj : rect.projections) c.none(graded::truncated_cofinality(proj, {3, 16}), "projection cofinality");
      auto jx = probar::j_apply(rect.object);
      const probar::FamilyMorphism iso = probar::rectification_iso(family, rect, jx, {14, 18});
      const probar::FamilyMorphism inv = probar::rectification_iso_inverse(family, rect, jx, {6, 18});
      for (std::size_t d = 0; d < 2; ++d) {
        c.none(probar::check_natural(iso.components[d], 8), "isomorphism");
        c.none(probar::check_natural(inv.components[d], 5), "inverse");
        const OneMorphism round = probar::compose(inv.components[d], iso.components[d]);
        c.check(probar::dominate_pair(round, OneMorphism::identity(family->objects[d]), {3, 24}).verdict ==
                    Verdict::kEqual,
                "j_apply object differs from the input");
      }
      const auto e = *family->shape.find_morphism("0->1");
      const OneMorphism back = probar::compose(inv.components[1], probar::compose(jx->arrows[e], iso.components[0]));
      c.check(probar::dominate_pair(family->arrows[e], back, {3, 24}).verdict == Verdict::kEqual,
              "j_apply arrow differs from the input");
    });
  }
}

const char* suite_name(int criterion) {
  static const char* names[] = {"reedy", "chi-laws", "inductive-lift", "fullness",
                                "a-index", "edwards-hastings", "wfs", "rectification"};
  return names[criterion - 1];
}

}  // namespace

SuiteResult run_criterion(int criterion, std::uint64_t seed) {
  require(criterion >= 1 && criterion <= kCriteria, ErrorKind::kInvalidArgument, "no such criterion");
  SuiteResult r;
  r.criterion = criterion;
  r.name = suite_name(criterion);
  Rng rng(seed * 1000003u + static_cast<std::uint64_t>(criterion));
  const auto start = std::chrono::steady_clock::now();
  switch (criterion) {
    case 1: reedy_suite(r, rng); break;
    case 2: chi_suite(r, rng); break;
    case 3: inductive_lift_suite(r, rng); break;
    case 4: fullness_suite(r, rng); break;
    case 5: a_index_suite(r); break;
    case 6: eh_suite(r); break;
    case 7: wfs_suite(r, rng); break;
    default: rectification_suite(r, rng); break;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_suites(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, seed));
  return out;
}

std::string to_text(const SuiteResult& r, bool with_time) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << " " << r.criterion << " " << r.name << ": " << r.cases << " cases, "
     << r.failed << " failed";
  if (with_time) os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
  os << "\n";
  for (const auto& f : r.failures) os << "  failure: " << f << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"criterion", r.criterion}, {"name", r.name},         {"passed", r.passed()}, {"cases", r.cases},
          {"failed", r.failed},       {"failures", r.failures}, {"notes", r.notes}};
}

}  // namespace procat::procli
