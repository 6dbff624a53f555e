#include "procat/probar/shaped.hpp"

#include <map>
#include <mutex>

#include "procat/error.hpp"
#include "procat/fincat/limit.hpp"
#include "procat/graded/posets.hpp"

namespace procat::probar {

ShapedObject::ShapedObject(FiniteCategory shape, std::vector<ProBarObjectHandle> components, Transition transition)
    : shape_(std::move(shape)), components_(std::move(components)), transition_(std::move(transition)) {
  require(components_.size() == shape_.object_count(), ErrorKind::kInvalidArgument,
          "shaped object: one component per object of the shape");
  for (const auto& c : components_) {
    require(c != nullptr, ErrorKind::kInvalidArgument, "shaped object: missing component");
    if (!index_) index_ = c->index();
    require(c->index() == index_, ErrorKind::kInvalidArgument, "shaped object: components need a common index");
  }
}

FinSetMap ShapedObject::transition(std::size_t morphism, ElementId a) const {
  const auto& m = shape_.morphism(morphism);
  if (shape_.is_identity(morphism)) return FinSetMap::identity(components_[m.dom]->value(a));
  FinSetMap t = transition_(morphism, a);
  require(t.dom() == components_[m.dom]->value(a) && t.cod() == components_[m.cod]->value(a),
          ErrorKind::kInvariantFailure, "shaped object: transition has the wrong endpoints");
  return t;
}

std::vector<std::string> check_shaped(const ShapedObject& x, std::size_t depth) {
  std::vector<std::string> out;
  const auto& d = x.shape();
  if (!x.index()) return out;
  const auto& p = *x.index();
  for (ElementId a = 0; a < p.count_upto(depth); ++a) {
    const std::string& key = p.element(a).key;
    for (std::size_t m = 0; m < d.morphism_count(); ++m)
      for (std::size_t n = 0; n < d.morphism_count(); ++n) {
        if (d.morphism(n).dom != d.morphism(m).cod) continue;
        const auto mn = d.compose(n, m);
        if (!mn) continue;
        if (fincat::compose(x.transition(n, a), x.transition(m, a)) != x.transition(*mn, a))
          out.push_back("not functorial in the shape at " + key);
      }
    for (ElementId lower : p.below(a))
      for (std::size_t m = 0; m < d.morphism_count(); ++m) {
        const auto& mm = d.morphism(m);
        if (fincat::compose(x.transition(m, lower), x.component(mm.dom)->arrow(a, lower)) !=
            fincat::compose(x.component(mm.cod)->arrow(a, lower), x.transition(m, a)))
          out.push_back("not natural in the index at " + key + " > " + p.element(lower).key);
      }
  }
  return out;
}

ProBarFamily ProBarFamily::make(FiniteCategory shape, std::vector<ProBarObjectHandle> objects,
                                const std::function<OneMorphism(std::size_t)>& arrow) {
  require(objects.size() == shape.object_count(), ErrorKind::kInvalidArgument, "family: one object per shape object");
  std::vector<OneMorphism> arrows;
  arrows.reserve(shape.morphism_count());
  for (std::size_t m = 0; m < shape.morphism_count(); ++m) {
    const auto& mm = shape.morphism(m);
    OneMorphism f = shape.is_identity(m) ? OneMorphism::identity(objects[mm.dom]) : arrow(m);
    require(f.source() == objects[mm.dom] && f.target() == objects[mm.cod], ErrorKind::kInvalidArgument,
            "family: arrow " + mm.name + " has the wrong endpoints");
    arrows.push_back(std::move(f));
  }
  return ProBarFamily{std::move(shape), std::move(objects), std::move(arrows)};
}

FamilyMorphism compose(const FamilyMorphism& second, const FamilyMorphism& first) {
  require(second.source == first.target, ErrorKind::kInvalidArgument, "compose: family morphisms are not composable");
  FamilyMorphism out{first.source, second.target, {}};
  for (std::size_t d = 0; d < first.components.size(); ++d)
    out.components.push_back(compose(second.components[d], first.components[d]));
  return out;
}

ProBarFamilyHandle j_apply(const ShapedObjectHandle& x) {
  auto arrow = [x](std::size_t m) {
    const auto& mm = x->shape().morphism(m);
    return OneMorphism::natural(x->component(mm.dom), x->component(mm.cod),
                                [x, m](ElementId a) { return x->transition(m, a); });
  };
  return std::make_shared<const ProBarFamily>(ProBarFamily::make(x->shape(), x->components(), arrow));
}

FamilyMorphism j_apply(const ShapedMorphism& f, const ProBarFamilyHandle& source, const ProBarFamilyHandle& target) {
  require(source->objects == f.source->components() && target->objects == f.target->components(),
          ErrorKind::kInvalidArgument, "j_apply: families do not match the shaped ends");
  return FamilyMorphism{source, target, f.components};
}

ShapedMorphism j_full_lift(const ShapedObjectHandle& x, const ShapedObjectHandle& y, const FamilyMorphism& f,
                           Truncation t) {
  const auto& d = x->shape();
  require(f.source->objects == x->components() && f.target->objects == y->components() &&
              f.components.size() == d.object_count(),
          ErrorKind::kInvalidArgument, "j_full_lift: family does not run between the given objects");
  std::vector<IncreasingMap> alphas;
  for (const auto& c : f.components) alphas.push_back(c.alpha());
  for (std::size_t m = 0; m < d.morphism_count(); ++m) {
    if (d.is_identity(m)) continue;
    const auto& mm = d.morphism(m);
    const OneMorphism lower = compose(f.target->arrows[m], f.components[mm.dom]);
    const OneMorphism upper = compose(f.components[mm.cod], f.source->arrows[m]);
    EqualityVerdict v = dominate_pair(lower, upper, t);
    require(v.verdict == Verdict::kEqual, ErrorKind::kBudgetExhausted,
            "j_full_lift: square " + mm.name + " not dominated: " + v.reason);
    alphas.push_back(v.witness->alpha());
  }
  const IncreasingMap common = graded::dominate_increasing(alphas, t);
  ShapedMorphism out{x, y, {}};
  for (const auto& c : f.components) out.components.push_back(reindex(c, common, t.depth));
  const auto& b_index = *y->index();
  for (std::size_t m = 0; m < d.morphism_count(); ++m) {
    const auto& mm = d.morphism(m);
    for (ElementId b = 0; b < b_index.count_upto(t.depth); ++b) {
      const ElementId a = common(b);
      require(fincat::compose(y->transition(m, b), out.components[mm.dom].phi(b)) ==
                  fincat::compose(out.components[mm.cod].phi(b), x->transition(m, a)),
              ErrorKind::kInvariantFailure, "j_full_lift: lifted components are not natural in the shape");
    }
  }
  return out;
}

ProBarObjectHandle levelwise_limit(const ShapedObjectHandle& x) {
  struct Cache {
    std::mutex mutex;
    std::map<ElementId, fincat::FiniteLimit> limits;
  };
  auto cache = std::make_shared<Cache>();
  auto limit_at = [x, cache](ElementId a) {
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->limits.find(a);
      if (it != cache->limits.end()) return it->second;
    }
    const auto& d = x->shape();
    std::vector<std::size_t> values;
    for (const auto& c : x->components()) values.push_back(c->value(a));
    std::vector<FinSetMap> arrows;
    for (std::size_t m = 0; m < d.morphism_count(); ++m) arrows.push_back(x->transition(m, a));
    fincat::FiniteLimit lim = fincat::finset_limit(fincat::Diagram(d, values, arrows));
    std::lock_guard lock(cache->mutex);
    return cache->limits.emplace(a, std::move(lim)).first->second;
  };
  GradedPosetHandle index = x->index() ? x->index() : graded::GradedPosetHandle(graded::standard_chain());
  auto value = [limit_at](ElementId a) { return limit_at(a).size(); };
  auto arrow = [x, limit_at](ElementId u, ElementId v) {
    const fincat::FiniteLimit top = limit_at(u);
    std::vector<FinSetMap> legs;
    for (std::size_t i = 0; i < x->components().size(); ++i)
      legs.push_back(fincat::compose(x->component(i)->arrow(u, v), top.projection(i)));
    return fincat::induced_map(limit_at(v), top.size(), legs);
  };
  std::optional<std::size_t> constant = x->shape().object_count() == 0 ? std::optional<std::size_t>(0) : std::nullopt;
  return std::make_shared<const ProBarObject>(index, value, arrow, constant);
}

}  // namespace procat::probar
