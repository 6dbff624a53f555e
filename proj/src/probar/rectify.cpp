#include "procat/probar/rectify.hpp"

#include "procat/error.hpp"

namespace procat::probar {

std::vector<std::size_t> loopless_order(const FiniteCategory& d) {
  const std::size_t n = d.object_count();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (std::size_t m = 0; m < d.morphism_count(); ++m) {
    if (d.is_identity(m)) continue;
    const auto& mm = d.morphism(m);
    require(mm.dom != mm.cod, ErrorKind::kShapeNotStronglyLoopless, "shape has a non-identity endomorphism " + mm.name);
    edge[mm.dom][mm.cod] = true;
  }
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::optional<std::size_t> next;
    for (std::size_t v = 0; v < n && !next; ++v) {
      if (placed[v]) continue;
      bool sink = true;
      for (std::size_t w = 0; w < n; ++w) sink = sink && (placed[w] || !edge[v][w]);
      if (sink) next = v;
    }
    require(next.has_value(), ErrorKind::kShapeNotStronglyLoopless, "shape has a cycle of morphisms");
    placed[*next] = true;
    order.push_back(*next);
  }
  return order;
}

Rectification tilde_a(const ProBarFamily& f) {
  const FiniteCategory& d = f.shape;
  Rectification r;
  r.order = loopless_order(d);
  const std::size_t n = d.object_count();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[r.order[i]] = i;
  std::vector<GradedPosetHandle> components;
  for (std::size_t i = 0; i < n; ++i) components.push_back(f.objects[r.order[i]]->index());

  struct Edge {
    std::size_t dom, cod;
    OneMorphism arrow;
  };
  auto edges = std::make_shared<std::vector<Edge>>();
  for (std::size_t m = 0; m < d.morphism_count(); ++m)
    if (!d.is_identity(m))
      edges->push_back({position[d.morphism(m).dom], position[d.morphism(m).cod], f.arrows[m]});
  auto constraint = [edges, components](std::span<const ElementId> t) {
    for (const Edge& e : *edges)
      if (!components[e.dom]->leq(e.arrow.alpha()(t[e.cod]), t[e.dom])) return false;
    return true;
  };
  r.index = std::make_shared<const graded::ProductPoset>(components, constraint);

  auto index = r.index;
  std::vector<ProBarObjectHandle> objects(n);
  r.projections.reserve(n);
  for (std::size_t obj = 0; obj < n; ++obj) {
    const std::size_t i = position[obj];
    IncreasingMap proj(index, components[i], [index, i](ElementId a) { return index->tuple(a)[i]; });
    r.projections.push_back(proj);
    objects[obj] = ProBarObject::pullback(f.objects[obj], proj);
  }
  auto arrows = std::make_shared<const std::vector<OneMorphism>>(f.arrows);
  auto family_objects = std::make_shared<const std::vector<ProBarObjectHandle>>(f.objects);
  auto transition = [d, arrows, family_objects, index, position](std::size_t m, ElementId a) {
    const auto& mm = d.morphism(m);
    const auto& t = index->tuple(a);
    const OneMorphism& e = (*arrows)[m];
    const ElementId a_cod = t[position[mm.cod]];
    const ElementId a_dom = t[position[mm.dom]];
    return fincat::compose(e.phi(a_cod), (*family_objects)[mm.dom]->arrow(a_dom, e.alpha()(a_cod)));
  };
  r.object = std::make_shared<const ShapedObject>(d, objects, transition);
  return r;
}

ClassicMorphism rectification_nu(const ProBarFamily& f, const Rectification& r, std::size_t object) {
  const ProBarObjectHandle x = f.objects.at(object);
  const IncreasingMap proj = r.projections.at(object);
  auto rep = [x, proj](std::size_t a) {
    const ElementId ad = proj(a);
    return Germ{ad, FinSetMap::identity(x->value(ad))};
  };
  return ClassicMorphism(ClassicObject::of(x), ClassicObject::of(r.object->component(object)), rep);
}

ClassicMorphism rectification_nu_inverse(const ProBarFamily& f, const Rectification& r, std::size_t object,
                                         std::size_t search) {
  const ProBarObjectHandle x = f.objects.at(object);
  const IncreasingMap proj = r.projections.at(object);
  auto index = r.index;
  auto rep = [x, proj, index, search](std::size_t a) {
    const auto& comp = *x->index();
    for (std::size_t level = 0; level <= search; ++level)
      for (ElementId t = index->level_begin(level); t < index->level_end(level); ++t)
        if (comp.leq(a, proj(t))) return Germ{t, x->arrow(proj(t), a)};
    fail(ErrorKind::kBudgetExhausted, "rectification: no tuple above " + comp.element(a).key + " in budget");
  };
  return ClassicMorphism(ClassicObject::of(r.object->component(object)), ClassicObject::of(x), rep);
}

FamilyMorphism rectification_iso(const ProBarFamilyHandle& f, const Rectification& r, const ProBarFamilyHandle& jx,
                                 Truncation t) {
  FamilyMorphism out{f, jx, {}};
  for (std::size_t d = 0; d < f->objects.size(); ++d) out.components.push_back(lift_pro_to_bar(rectification_nu(*f, r, d), t));
  return out;
}

FamilyMorphism rectification_iso_inverse(const ProBarFamilyHandle& f, const Rectification& r,
                                         const ProBarFamilyHandle& jx, Truncation t) {
  FamilyMorphism out{jx, f, {}};
  for (std::size_t d = 0; d < f->objects.size(); ++d)
    out.components.push_back(lift_pro_to_bar(rectification_nu_inverse(*f, r, d, t.search), t));
  return out;
}

HFunctor::HFunctor(Truncation iso, Truncation lift)
    : iso_(iso),
      lift_(lift),
      g_({
          [this](const ProBarFamilyHandle& f) { return on_object(f); },
          [this](const ProBarFamilyHandle& f) { return this->iso(f); },
          [this](const ProBarFamilyHandle& f) { return iso_inverse(f); },
          [](const FamilyMorphism& second, const FamilyMorphism& first) { return compose(second, first); },
          [](const FamilyMorphism& f) { return f.source; },
          [](const FamilyMorphism& f) { return f.target; },
          [this](const FamilyMorphism& f, const ShapedObjectHandle& x, const ShapedObjectHandle& y)
              -> std::optional<ShapedMorphism> {
            try {
              return j_full_lift(x, y, f, lift_);
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::kBudgetExhausted) return std::nullopt;
              throw;
            }
          },
      }) {}

HFunctor::Entry& HFunctor::entry(const ProBarFamilyHandle& f) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(f.get());
  if (it == cache_.end()) {
    Rectification r = tilde_a(*f);
    ProBarFamilyHandle jx = j_apply(r.object);
    it = cache_.emplace(f.get(), Entry{std::move(r), std::move(jx), std::nullopt, std::nullopt}).first;
  }
  return it->second;
}

ShapedObjectHandle HFunctor::on_object(const ProBarFamilyHandle& f) const { return entry(f).rect.object; }
ProBarFamilyHandle HFunctor::j_of(const ProBarFamilyHandle& f) const { return entry(f).jx; }
const Rectification& HFunctor::rectification(const ProBarFamilyHandle& f) const { return entry(f).rect; }

FamilyMorphism HFunctor::iso(const ProBarFamilyHandle& f) const {
  std::lock_guard lock(mutex_);
  Entry& e = entry(f);
  if (!e.iso) e.iso = rectification_iso(f, e.rect, e.jx, iso_);
  return *e.iso;
}

FamilyMorphism HFunctor::iso_inverse(const ProBarFamilyHandle& f) const {
  std::lock_guard lock(mutex_);
  Entry& e = entry(f);
  if (!e.iso_inverse) e.iso_inverse = rectification_iso_inverse(f, e.rect, e.jx, iso_);
  return *e.iso_inverse;
}

ShapedMorphism HFunctor::on_morphism(const FamilyMorphism& f) const { return g_.apply_morphism(f); }

}  // namespace procat::probar
