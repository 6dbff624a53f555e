#include "procat/probar/fullness.hpp"

#include <algorithm>
#include <vector>

#include "procat/error.hpp"

namespace procat::probar {

namespace {

// First c >= every x in xs, scanning levels from the highest birth in xs through `search`, that
// satisfies `accept`. With a constancy level k, the first candidate born >= k decides the search.
template <class Accept>
std::optional<ElementId> refine(const ProBarObject& x, std::span<const ElementId> xs, std::size_t search,
                                Accept accept, bool* refuted) {
  const auto& p = *x.index();
  std::size_t start = 0;
  for (ElementId e : xs) start = std::max(start, p.birth(e));
  const auto k = x.constant_above();
  for (std::size_t level = start; level <= search; ++level) {
    if (p.last_level() && level > *p.last_level()) break;
    for (ElementId c = p.level_begin(level); c < p.level_end(level); ++c) {
      if (!std::all_of(xs.begin(), xs.end(), [&](ElementId e) { return p.leq(e, c); })) continue;
      if (accept(c)) return c;
      if (k && level >= *k) {
        *refuted = true;
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

// First element >= weak and > every element of strict, in canonical order.
std::optional<ElementId> next_above(const graded::GradedPoset& p, ElementId weak, std::span<const ElementId> strict,
                                    std::size_t search) {
  std::size_t start = p.birth(weak);
  for (ElementId e : strict) start = std::max(start, p.birth(e) + 1);
  for (std::size_t level = start; level <= search; ++level) {
    if (p.last_level() && level > *p.last_level()) break;
    for (ElementId c = p.level_begin(level); c < p.level_end(level); ++c)
      if (p.leq(weak, c) && std::all_of(strict.begin(), strict.end(), [&](ElementId e) { return p.less(e, c); }))
        return c;
  }
  return std::nullopt;
}

void require_poset_indexed(const ClassicMorphism& d) {
  require(d.source()->poset_indexed() && d.target()->poset_indexed(), ErrorKind::kInvalidArgument,
          "lift: both ends must be pro-bar objects");
}

}  // namespace

OneMorphism lift_pro_to_bar(const ClassicMorphism& d, Truncation t) {
  require_poset_indexed(d);
  const ProBarObjectHandle f_obj = d.source()->probar();
  const ProBarObjectHandle g_obj = d.target()->probar();
  const auto& a_index = *f_obj->index();
  const auto& b_index = *g_obj->index();
  const std::size_t count = b_index.count_upto(t.depth);
  std::vector<ElementId> alpha(count);
  std::vector<FinSetMap> phi(count);
  for (ElementId b = 0; b < count; ++b) {
    const Germ rep = d.representative(b);
    ElementId a = rep.node;
    FinSetMap h = rep.map;
    for (ElementId lower : b_index.below(b)) {
      const FinSetMap down = g_obj->arrow(b, lower);
      const ElementId xs[] = {a, alpha[lower]};
      bool refuted = false;
      auto c = refine(*f_obj, xs, t.search, [&](ElementId c) {
        return fincat::compose(phi[lower], f_obj->arrow(c, alpha[lower])) ==
               fincat::compose(down, fincat::compose(h, f_obj->arrow(c, a)));
      }, &refuted);
      const std::string where = b_index.element(b).key + " > " + b_index.element(lower).key;
      require(!refuted, ErrorKind::kPreconditionViolated, "lift: representatives are incompatible at " + where);
      require(c.has_value(), ErrorKind::kBudgetExhausted, "lift: no refinement in budget at " + where);
      h = fincat::compose(h, f_obj->arrow(*c, a));
      a = *c;
    }
    const ElementId xs[] = {a};
    auto next = graded::first_upper_bound(a_index, xs, t.search, true);
    require(next.has_value(), ErrorKind::kBudgetExhausted,
            "lift: no strict successor in budget at " + b_index.element(b).key);
    alpha[b] = *next;
    phi[b] = fincat::compose(h, f_obj->arrow(*next, a));
  }
  return OneMorphism::from_tables(f_obj, g_obj, std::move(alpha), std::move(phi));
}

EqualityVerdict dominate_pair(const OneMorphism& f, const OneMorphism& g, Truncation t) {
  require(f.source() == g.source() && f.target() == g.target(), ErrorKind::kInvalidArgument,
          "dominate_pair: 1-morphisms have different endpoints");
  const auto& x = *f.source();
  const auto& a_index = *x.index();
  const auto& b_index = *f.target()->index();
  const std::size_t count = b_index.count_upto(t.depth);
  std::vector<ElementId> alpha(count);
  for (ElementId b = 0; b < count; ++b) {
    const ElementId af = f.alpha()(b), ag = g.alpha()(b);
    const FinSetMap pf = f.phi(b), pg = g.phi(b);
    const ElementId xs[] = {af, ag};
    bool refuted = false;
    auto c = refine(x, xs, t.search, [&](ElementId c) {
      return fincat::compose(pf, x.arrow(c, af)) == fincat::compose(pg, x.arrow(c, ag));
    }, &refuted);
    const std::string& key = b_index.element(b).key;
    if (!c) return {Verdict::kUnknown, std::nullopt, (refuted ? "components never agree at " : "no equalizer in budget at ") + key};
    std::vector<ElementId> strict;
    for (ElementId lower : b_index.below(b)) strict.push_back(alpha[lower]);
    auto next = next_above(a_index, *c, strict, t.search);
    if (!next) return {Verdict::kUnknown, std::nullopt, "no upper bound in budget at " + key};
    alpha[b] = *next;
  }
  std::vector<FinSetMap> phi(count);
  for (ElementId b = 0; b < count; ++b) phi[b] = fincat::compose(f.phi(b), x.arrow(alpha[b], f.alpha()(b)));
  OneMorphism w = OneMorphism::from_tables(f.source(), f.target(), std::move(alpha), std::move(phi));
  require(leq(f, w, t.depth) && leq(g, w, t.depth), ErrorKind::kInvariantFailure, "dominate_pair: witness check failed");
  return {Verdict::kEqual, w, "dominated through level " + std::to_string(t.depth)};
}

}  // namespace procat::probar
