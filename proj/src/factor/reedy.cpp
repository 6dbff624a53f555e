#include "procat/factor/reedy.hpp"

#include <map>

#include "procat/error.hpp"

namespace procat::factor {

ReedyFactorization reedy_factorize(const OneMorphism& f, const FunctorialFactorization& ff, Truncation t) {
  NaturalView::of(f);
  const ProBarObjectHandle c = f.source();
  const ProBarObjectHandle d = f.target();
  const auto& index = c->index();
  const std::size_t n = index->count_upto(t.depth);

  std::vector<std::size_t> h_values;
  std::map<std::pair<ElementId, ElementId>, FinSetMap> h_arrows;
  std::vector<FinSetMap> g;
  std::vector<FinSetMap> h;
  const NaturalView partial{
      [&](ElementId s) { return h_values.at(s); },
      [d](ElementId s) { return d->value(s); },
      [&](ElementId u, ElementId v) { return h_arrows.at({u, v}); },
      [d](ElementId u, ElementId v) { return d->arrow(u, v); },
      [&](ElementId s) { return h.at(s); },
  };

  std::vector<ReedyStep> steps;
  steps.reserve(n);
  for (ElementId e = 0; e < n; ++e) {
    MatchingObject m(*index, e, partial);
    FinSetMap cmp = m.comparison(c->value(e), f.phi(e), [&](ElementId s) { return fincat::compose(g[s], c->arrow(e, s)); });
    FactorizationTriple tr = ff.factor(cmp);
    require(tr.q.cod() == tr.mid && tr.p.dom() == tr.mid && fincat::compose(tr.p, tr.q) == cmp,
            ErrorKind::kInvariantFailure, "functorial factorization does not compose back");
    h_values.push_back(tr.mid);
    g.push_back(tr.q);
    h.push_back(fincat::compose(m.project_target(), tr.p));
    for (ElementId s : m.down()) h_arrows.emplace(std::make_pair(e, s), fincat::compose(m.project_source(s), tr.p));
    steps.push_back({e, std::move(m), std::move(cmp), std::move(tr)});
  }

  ProBarObjectHandle middle = probar::ProBarObject::tabulated(index, std::move(h_values), std::move(h_arrows));
  OneMorphism lw = natural_from_table(c, middle, std::move(g));
  OneMorphism sp = natural_from_table(middle, d, std::move(h));
  return {f, middle, lw, sp, t.depth, std::move(steps)};
}

std::vector<std::string> check_reedy(const ReedyFactorization& r, const MorphismPredicate& levelwise,
                                     const MorphismPredicate& special) {
  std::vector<std::string> failures;
  const auto& index = *r.input.source()->index();
  for (ElementId e = 0; e < index.count_upto(r.depth); ++e)
    if (fincat::compose(r.sp_part.phi(e), r.lw_part.phi(e)) != r.input.phi(e))
      failures.push_back("composite differs from the input at " + index.element(e).key);
  for (const auto& s : probar::check_functorial(*r.middle, r.depth)) failures.push_back("middle: " + s);
  for (const auto& s : probar::check_natural(r.lw_part, r.depth)) failures.push_back("lw_part: " + s);
  for (const auto& s : probar::check_natural(r.sp_part, r.depth)) failures.push_back("sp_part: " + s);
  if (!is_levelwise(r.lw_part, levelwise, r.depth)) failures.push_back("lw_part is not levelwise " + levelwise.name);
  if (!is_special(r.sp_part, special, r.depth)) failures.push_back("sp_part is not special " + special.name);
  return failures;
}

}  // namespace procat::factor
