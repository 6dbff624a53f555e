#include <set>

#include "doctest.h"
#include "procat/graded.hpp"
#include "procat/probar.hpp"
#include "procat/procli/generators.hpp"

using namespace procat;
using namespace procat::probar;
using fincat::FiniteCategory;
using graded::IncreasingMap;
using graded::standard_chain;
using procli::Rng;

namespace {

const GradedPosetHandle& chain() {
  static const GradedPosetHandle c = standard_chain();
  return c;
}

IncreasingMap shift(std::size_t k) {
  return IncreasingMap(chain(), chain(), [k](ElementId n) { return n + k; });
}

bool throws_kind(ErrorKind kind, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// Test-side germ oracle on chains: compare both germs after pulling back to a far level, where
// eventually constant objects have stabilized.
bool germs_agree_far(const ProBarObject& x, const Germ& g, const Germ& h, std::size_t far) {
  return fincat::compose(g.map, x.arrow(far, g.node)) == fincat::compose(h.map, x.arrow(far, h.node));
}

// Classic equality of two 1-morphisms between chain objects stable by `stable`: by compatibility
// every germ is determined by the germ at the stable target level.
bool chain_classic_equal(const OneMorphism& f, const OneMorphism& g, std::size_t stable) {
  const Germ a{f.alpha()(stable), f.phi(stable)};
  const Germ b{g.alpha()(stable), g.phi(stable)};
  return germs_agree_far(*f.source(), a, b, std::max(a.node, b.node) + stable + 8);
}

// Shaped object over linear(n) on the standard chain with random natural transitions.
ShapedObjectHandle random_linear_shaped(Rng& rng, std::size_t n, std::size_t stable) {
  for (;;) {
    std::vector<ProBarObjectHandle> comps;
    for (std::size_t i = 0; i <= n; ++i) comps.push_back(procli::random_chain_object(rng, stable, 3));
    std::vector<OneMorphism> steps;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto s = procli::random_natural(rng, comps[i], comps[i + 1], IncreasingMap::identity(chain()));
      if (s) steps.push_back(*s);
      else ok = false;
    }
    if (!ok) continue;
    const auto shape = FiniteCategory::linear(n);
    auto transition = [shape, steps](std::size_t m, ElementId a) {
      const auto& mm = shape.morphism(m);
      FinSetMap t = FinSetMap::identity(steps[mm.dom].source()->value(a));
      for (std::size_t i = mm.dom; i < mm.cod; ++i) t = fincat::compose(steps[i].phi(a), t);
      return t;
    };
    return std::make_shared<const ShapedObject>(shape, comps, transition);
  }
}

FiniteCategory cospan() {
  fincat::CategoryBuilder b;
  const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
  b.add_morphism("f", x, z);
  b.add_morphism("g", y, z);
  return b.build();
}

}  // namespace

TEST_CASE("chain objects: values, composite arrows, constancy") {
  const FinSetMap s0(3, 2, {0, 1, 1}), s1(2, 3, {2, 0});
  auto x = ProBarObject::chain({2, 3, 2}, {s0, s1});
  CHECK(x->value(0) == 2);
  CHECK(x->value(7) == 2);
  CHECK(x->constant_above() == 2);
  CHECK(x->arrow(2, 0) == fincat::compose(s0, s1));
  CHECK(x->arrow(9, 1) == s1);
  CHECK(x->arrow(9, 4).is_identity());
  CHECK(check_functorial(*x, 6).empty());
  CHECK(check_constant_above(*x, 6).empty());
  CHECK(throws_kind(ErrorKind::kInvalidArgument, [&] { x->arrow(0, 1); }));
}

TEST_CASE("pullback along a reindexing reads the original object") {
  const FinSetMap s0(3, 2, {0, 1, 1});
  auto x = ProBarObject::chain({2, 3}, {s0});
  auto y = ProBarObject::pullback(x, shift(1));
  CHECK(y->value(0) == 3);
  CHECK(y->arrow(3, 0).is_identity());
  auto z = ProBarObject::pullback(x, IncreasingMap::identity(chain()));
  CHECK(z->arrow(1, 0) == s0);
  CHECK(check_functorial(*y, 5).empty());
}

TEST_CASE("1-morphism laws: identity, associativity, order, reindexing") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = procli::random_chain_pair(rng, 2, 3);
    const OneMorphism& f = p.morphism;
    CHECK(check_natural(f, 6).empty());
    CHECK(equal_upto(compose(f, OneMorphism::identity(p.source)), f, 6));
    CHECK(equal_upto(compose(OneMorphism::identity(p.target), f), f, 6));
    CHECK(leq(f, f, 6));

    auto q = procli::random_natural(rng, p.target, p.target, shift(1));
    auto r = procli::random_natural(rng, p.source, p.source, shift(2));
    if (q && r) CHECK(equal_upto(compose(*q, compose(f, *r)), compose(compose(*q, f), *r), 6));

    const IncreasingMap up = graded::compose(shift(1), f.alpha());
    const OneMorphism g = reindex(f, up, 6);
    CHECK(leq(f, g, 6));
    CHECK(check_natural(g, 6).empty());
    CHECK(equal_upto(reindex(f, f.alpha(), 6), f, 6));
    const IncreasingMap up2 = graded::compose(shift(3), f.alpha());
    CHECK(equal_upto(reindex(g, up2, 6), reindex(f, up2, 6), 6));
  }
}

TEST_CASE("reindex below the index map throws NotDominating") {
  auto x = ProBarObject::constant(chain(), 2);
  const OneMorphism f(x, x, shift(2), [](ElementId) { return FinSetMap::identity(2); });
  CHECK(throws_kind(ErrorKind::kNotDominating, [&] { reindex(f, shift(1), 3); }));
}

TEST_CASE("leq on the chain: identity-indexed f below its successor reindexing") {
  const FinSetMap s0(3, 2, {0, 1, 0}), s1(2, 3, {1, 2});
  auto x = ProBarObject::chain({2, 3, 2}, {s0, s1});
  const OneMorphism f = OneMorphism::identity(x);
  const OneMorphism g = reindex(f, shift(1), 8);
  CHECK(leq(f, g, 8));
  CHECK_FALSE(leq(g, f, 8));
  // The triangle at level 0 is the arrow 1 -> 0.
  CHECK(g.phi(0) == s0);
}

TEST_CASE("to_pro: identity representatives and order compatibility") {
  Rng rng(5);
  auto p = procli::random_chain_pair(rng, 2, 3);
  const ClassicMorphism id = to_pro(OneMorphism::identity(p.source));
  for (std::size_t b = 0; b < 5; ++b) {
    CHECK(id.representative(b).node == b);
    CHECK(id.representative(b).map.is_identity());
  }
  const OneMorphism& f = p.morphism;
  const OneMorphism g = reindex(f, graded::compose(shift(2), f.alpha()), 6);
  CHECK(classic_equal(to_pro(f), to_pro(g), 6, 12) == Verdict::kEqual);
  CHECK(check_compatible(to_pro(f), 5, 12).ok());
  auto q = procli::random_natural(rng, p.target, p.target, shift(1));
  REQUIRE(q);
  CHECK(classic_equal(to_pro(compose(*q, f)), compose(to_pro(*q), to_pro(f)), 6, 12) == Verdict::kEqual);
}

TEST_CASE("lift_pro_to_bar round trip on eventually constant data") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = procli::random_chain_pair(rng, 2, 3);
    const ClassicMorphism d = procli::rerepresent(rng, p.morphism, 2);
    REQUIRE(check_compatible(d, 4, 16).ok());
    const OneMorphism g = lift_pro_to_bar(d, {5, 20});
    CHECK(check_natural(g, 5).empty());
    CHECK(graded::is_strictly_increasing(g.alpha(), 5));
    CHECK(classic_equal(to_pro(g), d, 5, 20) == Verdict::kEqual);
    CHECK(stabilized_equal(to_pro(g), d, 20) == Verdict::kEqual);
    for (std::size_t b = 0; b <= 5; ++b)
      CHECK(germs_agree_far(*p.source, Germ{g.alpha()(b), g.phi(b)}, d.representative(b), 40));
  }
}

TEST_CASE("lift on constant objects keeps the base map") {
  auto x = ProBarObject::constant(chain(), 2);
  auto y = ProBarObject::constant(chain(), 3);
  const FinSetMap h(2, 3, {2, 0});
  const ClassicMorphism d(ClassicObject::of(x), ClassicObject::of(y), [h](std::size_t b) { return Germ{b, h}; });
  const OneMorphism g = lift_pro_to_bar(d, {4, 8});
  for (std::size_t b = 0; b <= 4; ++b) CHECK(g.phi(b) == h);
  CHECK(throws_kind(ErrorKind::kBudgetExhausted, [&] { g.phi(5); }));
}

TEST_CASE("lift: budget exhaustion and incompatible data") {
  auto x = ProBarObject::constant(chain(), 2);
  const ClassicMorphism id = ClassicMorphism::identity(ClassicObject::of(x));
  CHECK(throws_kind(ErrorKind::kBudgetExhausted, [&] { lift_pro_to_bar(id, {3, 3}); }));
  CHECK_NOTHROW(lift_pro_to_bar(id, {3, 4}));
  const ClassicMorphism bad(ClassicObject::of(x), ClassicObject::of(x), [](std::size_t b) {
    return Germ{b, b % 2 ? FinSetMap(2, 2, {1, 0}) : FinSetMap::identity(2)};
  });
  CHECK_FALSE(check_compatible(bad, 2, 6).ok());
  CHECK(throws_kind(ErrorKind::kPreconditionViolated, [&] { lift_pro_to_bar(bad, {3, 8}); }));
}

TEST_CASE("dominate_pair: equal pairs get witnesses, unequal pairs stay unknown") {
  Rng rng(77);
  int equal_seen = 0, unequal_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto p = procli::random_chain_pair(rng, 2, 3);
    const OneMorphism& f = p.morphism;
    auto self = dominate_pair(f, f, {5, 12});
    REQUIRE(self.verdict == Verdict::kEqual);
    CHECK(leq(f, *self.witness, 5));

    const OneMorphism g = reindex(f, graded::compose(shift(1), f.alpha()), 8);
    auto up = dominate_pair(f, g, {5, 14});
    REQUIRE(up.verdict == Verdict::kEqual);
    CHECK(leq(g, *up.witness, 5));

    auto other = procli::random_natural(rng, p.source, p.target, procli::random_chain_reindexing(rng, 3, 2));
    if (!other) continue;
    const bool equal = chain_classic_equal(f, *other, 2);
    CHECK((stabilized_equal(to_pro(f), to_pro(*other), 16) == Verdict::kEqual) == equal);
    for (std::size_t budget : {8u, 16u}) {
      auto v = dominate_pair(f, *other, {4, budget});
      CHECK((v.verdict == Verdict::kEqual) == equal);
    }
    if (!equal) CHECK(stabilized_equal(to_pro(f), to_pro(*other), 16) == Verdict::kUnequal);
    (equal ? equal_seen : unequal_seen)++;
  }
  CHECK(equal_seen > 0);
  CHECK(unequal_seen > 0);
}

TEST_CASE("classic objects over finite categories compare germs exactly") {
  auto cat = FiniteCategory::from_poset(fincat::FinitePoset::chain(2));
  // Under the poset convention the only non-identity arrow runs from the larger element.
  std::size_t arrow = 0;
  for (std::size_t m = 0; m < cat.morphism_count(); ++m)
    if (!cat.is_identity(m)) arrow = m;
  const auto& am = cat.morphism(arrow);
  std::vector<std::size_t> values(2);
  values[am.dom] = 3;
  values[am.cod] = 2;
  std::vector<FinSetMap> maps;
  for (std::size_t m = 0; m < cat.morphism_count(); ++m)
    maps.push_back(m == arrow ? FinSetMap(3, 2, {0, 0, 1}) : FinSetMap::identity(values[cat.morphism(m).dom]));
  auto x = std::make_shared<const ClassicObject>(fincat::Diagram(cat, values, maps));
  const Germ at_bottom{am.cod, FinSetMap::identity(2)};
  const Germ at_top{am.dom, FinSetMap(3, 2, {0, 0, 1})};
  CHECK(x->compare(at_bottom, at_top, 0).verdict == Verdict::kEqual);
  CHECK(x->compare(at_bottom, Germ{am.dom, FinSetMap(3, 2, {1, 0, 1})}, 0).verdict == Verdict::kUnequal);
}

TEST_CASE("S: nu is an isomorphism and morphisms lift through A_I") {
  const SFunctor s({1, 2});
  auto cat = FiniteCategory::terminal();
  auto x = std::make_shared<const ClassicObject>(fincat::Diagram(cat, {2}, {FinSetMap::identity(2)}));
  auto y = std::make_shared<const ClassicObject>(fincat::Diagram(cat, {3}, {FinSetMap::identity(3)}));
  auto sx = s.on_object(x);
  CHECK(sx == s.on_object(x));
  CHECK(sx->value(5) == 2);
  CHECK(are_inverse(s.nu(x), s.nu_inverse(x), 1, 2) == Verdict::kEqual);

  const FinSetMap h(2, 3, {1, 2});
  const ClassicMorphism d(x, y, [h](std::size_t) { return Germ{0, h}; });
  const OneMorphism lifted = s.on_morphism(d);
  CHECK(check_natural(lifted, 1).empty());
  const ClassicMorphism conj = compose(s.nu(y), compose(d, s.nu_inverse(x)));
  CHECK(classic_equal(to_pro(lifted), conj, 1, 2) == Verdict::kEqual);
  // Back in classic form the lift is d again.
  CHECK(classic_equal(compose(s.nu_inverse(y), compose(to_pro(lifted), s.nu(x))), d, 0, 2) == Verdict::kEqual);

  const OneMorphism id = s.on_morphism(ClassicMorphism::identity(x));
  CHECK(dominate_pair(id, OneMorphism::identity(sx), {1, 2}).verdict == Verdict::kEqual);
}

TEST_CASE("S over the two-element chain") {
  const SFunctor s({0, 2});
  auto cat = FiniteCategory::from_poset(fincat::FinitePoset::chain(2));
  std::size_t arrow = 0;
  for (std::size_t m = 0; m < cat.morphism_count(); ++m)
    if (!cat.is_identity(m)) arrow = m;
  const std::size_t top = cat.morphism(arrow).dom, bottom = cat.morphism(arrow).cod;
  auto diagram = [&](std::size_t top_size, std::size_t bottom_size, FinSetMap down) {
    std::vector<std::size_t> values(2);
    values[top] = top_size;
    values[bottom] = bottom_size;
    std::vector<FinSetMap> maps;
    for (std::size_t m = 0; m < cat.morphism_count(); ++m)
      maps.push_back(m == arrow ? down : FinSetMap::identity(values[cat.morphism(m).dom]));
    return std::make_shared<const ClassicObject>(fincat::Diagram(cat, values, maps));
  };
  auto x = diagram(2, 2, FinSetMap(2, 2, {1, 0}));
  auto y = diagram(2, 1, FinSetMap(2, 1, {0, 0}));
  CHECK(are_inverse(s.nu(x), s.nu_inverse(x), 1, 2) == Verdict::kEqual);
  CHECK(are_inverse(s.nu(y), s.nu_inverse(y), 1, 2) == Verdict::kEqual);
  // Every node of y is represented at the top of x.
  const ClassicMorphism d(x, y, [top](std::size_t node) {
    return Germ{top, node == top ? FinSetMap(2, 2, {0, 1}) : FinSetMap(2, 1, {0, 0})};
  });
  REQUIRE(check_compatible(d, 0, 0).ok());
  const OneMorphism sd = s.on_morphism(d);
  CHECK(check_natural(sd, 0).empty());
  CHECK(classic_equal(to_pro(sd), compose(s.nu(y), compose(d, s.nu_inverse(x))), 0, 2) == Verdict::kEqual);
}

TEST_CASE("S preserves composites over the terminal category") {
  const SFunctor s({1, 2});
  auto cat = FiniteCategory::terminal();
  auto object = [&](std::size_t n) {
    return std::make_shared<const ClassicObject>(fincat::Diagram(cat, {n}, {FinSetMap::identity(n)}));
  };
  auto x = object(2), y = object(3), z = object(2);
  const FinSetMap h(2, 3, {1, 2}), k(3, 2, {0, 0, 1});
  const ClassicMorphism d(x, y, [h](std::size_t) { return Germ{0, h}; });
  const ClassicMorphism e(y, z, [k](std::size_t) { return Germ{0, k}; });
  const OneMorphism composite = compose(s.on_morphism(e), s.on_morphism(d));
  CHECK(classic_equal(to_pro(composite), to_pro(s.on_morphism(compose(e, d))), 0, 2) == Verdict::kEqual);
}

TEST_CASE("inverse equivalence: identity data gives the strict inverse") {
  using G = InverseEquivalence<std::size_t, FinSetMap, std::size_t, FinSetMap>;
  G::Data data{
      [](const std::size_t& n) { return n; },
      [](const std::size_t& n) { return FinSetMap::identity(n); },
      [](const std::size_t& n) { return FinSetMap::identity(n); },
      [](const FinSetMap& a, const FinSetMap& b) { return fincat::compose(a, b); },
      [](const FinSetMap& f) { return f.dom(); },
      [](const FinSetMap& f) { return f.cod(); },
      [](const FinSetMap& f, const std::size_t&, const std::size_t&) { return std::optional<FinSetMap>(f); },
  };
  const G g(data);
  const FinSetMap f(3, 2, {1, 0, 1});
  CHECK(g.apply_object(4) == 4);
  CHECK(g.apply_morphism(f) == f);
  data.preimage = [](const FinSetMap&, const std::size_t&, const std::size_t&) { return std::optional<FinSetMap>(); };
  const G broken(data);
  CHECK(throws_kind(ErrorKind::kPreimageNotFound, [&] { broken.apply_morphism(f); }));
}

TEST_CASE("shaped objects restrict componentwise") {
  Rng rng(3);
  auto x = random_linear_shaped(rng, 2, 2);
  CHECK(check_shaped(*x, 5).empty());
  auto jx = j_apply(x);
  CHECK(jx->objects.size() == 3);
  for (std::size_t m = 0; m < x->shape().morphism_count(); ++m) {
    CHECK(jx->arrows[m].alpha().is_identity());
    CHECK(check_natural(jx->arrows[m], 5).empty());
    for (ElementId a = 0; a < 5; ++a) CHECK(jx->arrows[m].phi(a) == x->transition(m, a));
  }
}

TEST_CASE("j_full_lift on the arrow shape uses the successor dominator") {
  Rng rng(8);
  auto x = random_linear_shaped(rng, 1, 2);
  auto jx = j_apply(x);
  // The square commutes only after reindexing: each component is shifted by one.
  FamilyMorphism f{jx, jx, {}};
  for (std::size_t d = 0; d < 2; ++d) f.components.push_back(reindex(OneMorphism::identity(x->component(d)), shift(1), 6));
  const ShapedMorphism lifted = j_full_lift(x, x, f, {5, 12});
  for (std::size_t d = 0; d < 2; ++d) {
    for (ElementId b = 0; b <= 5; ++b) CHECK(lifted.components[d].alpha()(b) == b + 2);
    CHECK(leq(f.components[d], lifted.components[d], 5));
  }
  FamilyMorphism id{jx, jx, {}};
  for (std::size_t d = 0; d < 2; ++d) id.components.push_back(OneMorphism::identity(x->component(d)));
  const ShapedMorphism lid = j_full_lift(x, x, id, {5, 12});
  for (std::size_t d = 0; d < 2; ++d) {
    for (ElementId b = 0; b <= 5; ++b) CHECK(lid.components[d].alpha()(b) == b + 1);
    CHECK(dominate_pair(lid.components[d], OneMorphism::identity(x->component(d)), {5, 12}).verdict == Verdict::kEqual);
  }
}

TEST_CASE("j_full_lift on a discrete shape is a common reindexing") {
  Rng rng(9);
  auto p = procli::random_chain_pair(rng, 2, 3);
  auto q = procli::random_chain_pair(rng, 2, 3);
  const auto shape = FiniteCategory::discrete(2);
  auto x = std::make_shared<const ShapedObject>(shape, std::vector{p.source, q.source},
                                                [](std::size_t, ElementId) -> FinSetMap { fail(ErrorKind::kInvariantFailure, "no arrows"); });
  auto y = std::make_shared<const ShapedObject>(shape, std::vector{p.target, q.target},
                                                [](std::size_t, ElementId) -> FinSetMap { fail(ErrorKind::kInvariantFailure, "no arrows"); });
  const FamilyMorphism f{j_apply(x), j_apply(y), {p.morphism, q.morphism}};
  const ShapedMorphism lifted = j_full_lift(x, y, f, {5, 14});
  CHECK(equal_upto(reindex(p.morphism, lifted.components[0].alpha(), 5), lifted.components[0], 5));
  CHECK(graded::equal_upto(lifted.components[0].alpha(), lifted.components[1].alpha(), 5));
  CHECK(leq(p.morphism, lifted.components[0], 5));
  CHECK(leq(q.morphism, lifted.components[1], 5));
}

TEST_CASE("j_apply of j_full_lift reproduces random families") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = trial % 3;
    auto x = random_linear_shaped(rng, n, 2);
    auto jx = j_apply(x);
    FamilyMorphism f{jx, jx, {}};
    for (std::size_t d = 0; d <= n; ++d)
      f.components.push_back(reindex(OneMorphism::identity(x->component(d)), shift(rng.below(3)), 6));
    const ShapedMorphism lifted = j_full_lift(x, x, f, {4, 14});
    const FamilyMorphism back = j_apply(lifted, jx, jx);
    for (std::size_t d = 0; d <= n; ++d)
      CHECK(dominate_pair(back.components[d], f.components[d], {4, 14}).verdict == Verdict::kEqual);
  }
}

TEST_CASE("levelwise limits") {
  const auto pair = FiniteCategory::discrete(2);
  auto product = std::make_shared<const ShapedObject>(
      pair, std::vector{ProBarObject::constant(chain(), 2), ProBarObject::constant(chain(), 3)},
      [](std::size_t, ElementId) -> FinSetMap { fail(ErrorKind::kInvariantFailure, "no arrows"); });
  auto lim = levelwise_limit(product);
  for (ElementId a = 0; a < 4; ++a) CHECK(lim->value(a) == 6);
  CHECK(lim->arrow(3, 1).is_identity());

  auto none = std::make_shared<const ShapedObject>(FiniteCategory::empty(), std::vector<ProBarObjectHandle>{},
                                                   [](std::size_t, ElementId) -> FinSetMap { fail(ErrorKind::kInvariantFailure, "no arrows"); });
  auto terminal = levelwise_limit(none);
  CHECK(terminal->value(0) == 1);
  CHECK(terminal->value(9) == 1);

  // Cospan x -> z <- y: pullback per level against a brute-force count.
  Rng rng(4);
  const auto shape = cospan();
  for (int trial = 0; trial < 10; ++trial) {
    auto z = procli::random_chain_object(rng, 2, 3);
    auto fx = procli::random_chain_pair(rng, 2, 3);
    auto xo = procli::random_chain_object(rng, 2, 3), yo = procli::random_chain_object(rng, 2, 3);
    auto f = procli::random_natural(rng, xo, z, IncreasingMap::identity(chain()));
    auto g = procli::random_natural(rng, yo, z, IncreasingMap::identity(chain()));
    if (!f || !g) continue;
    const auto fm = *shape.find_morphism("f");
    auto cs = std::make_shared<const ShapedObject>(shape, std::vector{xo, yo, z}, [f, g, fm](std::size_t m, ElementId a) {
      return m == fm ? f->phi(a) : g->phi(a);
    });
    REQUIRE(check_shaped(*cs, 4).empty());
    auto pb = levelwise_limit(cs);
    CHECK(check_functorial(*pb, 4).empty());
    for (ElementId a = 0; a < 5; ++a) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < xo->value(a); ++i)
        for (std::size_t j = 0; j < yo->value(a); ++j)
          if (f->phi(a)(i) == g->phi(a)(j)) pairs.emplace_back(i, j);
      CHECK(pb->value(a) == pairs.size());
      if (a == 0) continue;
      const FinSetMap down = pb->arrow(a, a - 1);
      std::vector<std::pair<std::size_t, std::size_t>> lower;
      for (std::size_t i = 0; i < xo->value(a - 1); ++i)
        for (std::size_t j = 0; j < yo->value(a - 1); ++j)
          if (f->phi(a - 1)(i) == g->phi(a - 1)(j)) lower.emplace_back(i, j);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::pair<std::size_t, std::size_t> image{xo->arrow(a, a - 1)(pairs[k].first), yo->arrow(a, a - 1)(pairs[k].second)};
        CHECK(lower[down(k)] == image);
      }
    }
  }
}

TEST_CASE("tilde_a on the arrow shape with identity index maps") {
  auto x0 = ProBarObject::constant(chain(), 2);
  auto x1 = ProBarObject::constant(chain(), 2);
  const auto shape = FiniteCategory::linear(1);
  const ProBarFamily f = ProBarFamily::make(shape, {x0, x1}, [&](std::size_t) {
    return OneMorphism::natural(x0, x1, [](ElementId) { return FinSetMap(2, 2, {1, 0}); });
  });
  const Rectification r = tilde_a(f);
  // Object 1 is the only sink, so it comes first and the constraint reads a_0 >= a_1.
  CHECK(r.order == std::vector<std::size_t>{1, 0});
  std::set<std::vector<std::size_t>> seen, expected;
  for (ElementId e = 0; e < r.index->count_upto(6); ++e) seen.insert(r.index->tuple(e));
  for (std::size_t a = 0; a <= 6; ++a)
    for (std::size_t b = 0; a + b <= 6; ++b)
      if (b >= a) expected.insert({a, b});
  CHECK(seen == expected);
  CHECK(check_shaped(*r.object, 5).empty());
}

TEST_CASE("tilde_a on a discrete shape is the full product") {
  auto x0 = ProBarObject::constant(chain(), 1);
  const ProBarFamily f = ProBarFamily::make(FiniteCategory::discrete(2), {x0, x0}, [](std::size_t) -> OneMorphism {
    fail(ErrorKind::kInvariantFailure, "no arrows");
  });
  const Rectification r = tilde_a(f);
  for (std::size_t level = 0; level < 6; ++level) CHECK(r.index->level_size(level) == level + 1);
}

TEST_CASE("tilde_a rejects loops") {
  for (const auto& named : fincat::monoids(2)) {
    auto x = ProBarObject::constant(chain(), 1);
    const ProBarFamily f = ProBarFamily::make(named.category, {x}, [&](std::size_t) { return OneMorphism::identity(x); });
    CHECK(throws_kind(ErrorKind::kShapeNotStronglyLoopless, [&] { tilde_a(f); }));
  }
  CHECK(throws_kind(ErrorKind::kShapeNotStronglyLoopless, [&] { loopless_order(fincat::split_idempotent()); }));
}

TEST_CASE("rectification of random arrow families") {
  Rng rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    auto family = procli::random_arrow_family(rng, 2, 3);
    const Rectification r = tilde_a(*family);
    CHECK(check_shaped(*r.object, 5).empty());
    CHECK(graded::check_cofinite(*r.index, 6).empty());
    for (const auto& proj : r.projections) CHECK(graded::truncated_cofinality(proj, {3, 16}).empty());
    auto jx = j_apply(r.object);
    const FamilyMorphism iso = rectification_iso(family, r, jx, {14, 18});
    const FamilyMorphism inv = rectification_iso_inverse(family, r, jx, {6, 18});
    for (std::size_t d = 0; d < 2; ++d) {
      CHECK(check_natural(iso.components[d], 8).empty());
      CHECK(check_natural(inv.components[d], 5).empty());
    }
    const auto e = *family->shape.find_morphism("0->1");
    const OneMorphism back = compose(inv.components[1], compose(jx->arrows[e], iso.components[0]));
    CHECK(dominate_pair(family->arrows[e], back, {3, 24}).verdict == Verdict::kEqual);
  }
}

TEST_CASE("h_D sends the identity family morphism to an identity") {
  Rng rng(21);
  auto family = procli::random_arrow_family(rng, 2, 2);
  const HFunctor h({16, 48}, {3, 20});
  auto x = h.on_object(family);
  CHECK(x == h.on_object(family));
  FamilyMorphism id{family, family, {}};
  for (const auto& o : family->objects) id.components.push_back(OneMorphism::identity(o));
  const ShapedMorphism lifted = h.on_morphism(id);
  for (std::size_t d = 0; d < 2; ++d)
    CHECK(dominate_pair(lifted.components[d], OneMorphism::identity(x->component(d)), {3, 20}).verdict ==
          Verdict::kEqual);
}
