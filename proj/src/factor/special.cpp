#include "procat/factor/special.hpp"

#include <algorithm>
#include <memory>

#include "procat/error.hpp"

namespace procat::factor {

NaturalView NaturalView::of(const OneMorphism& f) {
  require(f.source()->index() == f.target()->index() && f.alpha().is_identity(), ErrorKind::kInvalidArgument,
          "expected a natural map over a single index");
  auto x = f.source();
  auto y = f.target();
  return {[x](ElementId a) { return x->value(a); },
          [y](ElementId a) { return y->value(a); },
          [x](ElementId u, ElementId v) { return x->arrow(u, v); },
          [y](ElementId u, ElementId v) { return y->arrow(u, v); },
          [f](ElementId a) { return f.phi(a); }};
}

std::vector<ElementId> covers(const GradedPoset& index, ElementId t) {
  const auto& below = index.below(t);
  std::vector<ElementId> out;
  for (ElementId s : below) {
    bool covered = true;
    for (ElementId u : below)
      if (u != s && index.less(s, u)) {
        covered = false;
        break;
      }
    if (covered) out.push_back(s);
  }
  return out;
}

MatchingObject::MatchingObject(const GradedPoset& index, ElementId t, const NaturalView& view) : element_(t) {
  const auto& below = index.below(t);
  down_.assign(below.rbegin(), below.rend());
  const std::size_t n = down_.size();
  std::vector<std::size_t> sizes(1 + 2 * n);
  sizes[0] = view.target_value(t);
  std::vector<fincat::LimitConstraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId s = down_[i];
    sizes[1 + i] = view.source_value(s);
    sizes[1 + n + i] = view.target_value(s);
    target_legs_.push_back(view.target_arrow(t, s));
    constraints.push_back({0, 1 + n + i, target_legs_.back()});
    constraints.push_back({1 + i, 1 + n + i, view.component(s)});
    for (ElementId c : covers(index, s)) constraints.push_back({1 + i, source_slot(c), view.source_arrow(s, c)});
  }
  limit_ = fincat::limit_of(sizes, constraints);
}

std::size_t MatchingObject::source_slot(ElementId s) const {
  auto it = std::find(down_.begin(), down_.end(), s);
  require(it != down_.end(), ErrorKind::kInvalidArgument, "matching object: element is not below");
  return 1 + static_cast<std::size_t>(it - down_.begin());
}

std::size_t MatchingObject::target_slot(ElementId s) const { return source_slot(s) + down_.size(); }

FinSetMap MatchingObject::comparison(std::size_t apex, const FinSetMap& to_target,
                                     const std::function<FinSetMap(ElementId s)>& to_source) const {
  std::vector<FinSetMap> legs;
  legs.reserve(1 + 2 * down_.size());
  legs.push_back(to_target);
  for (ElementId s : down_) legs.push_back(to_source(s));
  for (const FinSetMap& d : target_legs_) legs.push_back(fincat::compose(d, to_target));
  return fincat::induced_map(limit_, apex, legs);
}

OneMorphism natural_from_table(probar::ProBarObjectHandle source, probar::ProBarObjectHandle target,
                               std::vector<FinSetMap> components) {
  auto table = std::make_shared<const std::vector<FinSetMap>>(std::move(components));
  return OneMorphism::natural(std::move(source), std::move(target), [table](ElementId a) {
    require(a < table->size(), ErrorKind::kBudgetExhausted, "component table does not reach this element");
    return (*table)[a];
  });
}

FinSetMap matching_map(const OneMorphism& f, ElementId t) {
  const NaturalView view = NaturalView::of(f);
  const MatchingObject m(*f.source()->index(), t, view);
  auto x = f.source();
  return m.comparison(x->value(t), f.phi(t), [&](ElementId s) { return x->arrow(t, s); });
}

bool is_levelwise(const OneMorphism& f, const MorphismPredicate& p, std::size_t depth) {
  NaturalView::of(f);
  for (ElementId t = 0; t < f.target()->index()->count_upto(depth); ++t)
    if (!p(f.phi(t))) return false;
  return true;
}

bool is_special(const OneMorphism& f, const MorphismPredicate& p, std::size_t depth) {
  for (ElementId t = 0; t < f.target()->index()->count_upto(depth); ++t)
    if (!p(matching_map(f, t))) return false;
  return true;
}

}  // namespace procat::factor
