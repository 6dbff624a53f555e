#include "procat/factor/pro_factorize.hpp"

#include <algorithm>
#include <memory>

#include "procat/error.hpp"
#include "procat/fincat/finite_category.hpp"

namespace procat::factor {

ProFactorization pro_factorize(const OneMorphism& g, const FunctorialFactorization& ff, Truncation t,
                               const MorphismPredicate& levelwise, const MorphismPredicate& special) {
  if (g.alpha().is_identity() && g.source()->index() == g.target()->index()) {
    ReedyFactorization r = reedy_factorize(g, ff, t);
    OneMorphism composite = probar::compose(r.sp_part, r.lw_part);
    probar::EqualityVerdict cert;
    if (probar::equal_upto(composite, g, t.depth)) cert = {probar::Verdict::kEqual, g, "parts compose to g exactly"};
    else cert = {probar::Verdict::kUnknown, std::nullopt, "parts do not compose to g"};
    const bool lw = is_levelwise(r.lw_part, levelwise, t.depth);
    const bool sp = is_special(r.sp_part, special, t.depth);
    return {g, std::nullopt, std::move(r), composite, std::move(cert), lw, sp};
  }

  const fincat::FiniteCategory shape = fincat::FiniteCategory::linear(1);
  auto family = std::make_shared<const probar::ProBarFamily>(
      probar::ProBarFamily::make(shape, {g.source(), g.target()}, [&](std::size_t) { return g; }));
  probar::Rectification rect = probar::tilde_a(*family);
  const std::size_t arrow = shape.hom(0, 1).front();
  const probar::ShapedObjectHandle x = rect.object;
  const OneMorphism rectified = OneMorphism::natural(x->component(0), x->component(1),
                                                     [x, arrow](ElementId a) { return x->transition(arrow, a); });

  const OneMorphism back = probar::lift_pro_to_bar(probar::rectification_nu_inverse(*family, rect, 1, t.search), t);
  std::size_t reach = 0;
  for (ElementId b = 0; b < g.target()->index()->count_upto(t.depth); ++b)
    reach = std::max(reach, rect.index->birth(back.alpha()(b)));
  const Truncation over_rect{reach, std::max(t.search, reach)};
  const OneMorphism forth = probar::lift_pro_to_bar(probar::rectification_nu(*family, rect, 0), over_rect);

  ReedyFactorization r = reedy_factorize(rectified, ff, over_rect);
  OneMorphism composite = probar::compose(back, probar::compose(r.sp_part, probar::compose(r.lw_part, forth)));
  probar::EqualityVerdict cert = probar::dominate_pair(composite, g, t);
  const bool lw = is_levelwise(r.lw_part, levelwise, reach);
  const bool sp = is_special(r.sp_part, special, reach);
  return {g, std::move(rect), std::move(r), composite, std::move(cert), lw, sp};
}

}  // namespace procat::factor
