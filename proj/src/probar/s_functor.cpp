#include "procat/probar/s_functor.hpp"

#include "procat/error.hpp"

namespace procat::probar {

SFunctor::SFunctor(Truncation t)
    : t_(t),
      g_({
          [this](const ClassicObjectHandle& x) { return on_object(x); },
          [this](const ClassicObjectHandle& x) { return nu(x); },
          [this](const ClassicObjectHandle& x) { return nu_inverse(x); },
          [](const ClassicMorphism& second, const ClassicMorphism& first) { return compose(second, first); },
          [](const ClassicMorphism& f) { return f.source(); },
          [](const ClassicMorphism& f) { return f.target(); },
          [this](const ClassicMorphism& f, const ProBarObjectHandle&, const ProBarObjectHandle&)
              -> std::optional<OneMorphism> {
            try {
              return lift_pro_to_bar(f, t_);
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::kBudgetExhausted) return std::nullopt;
              throw;
            }
          },
      }) {}

const SFunctor::Image& SFunctor::image(const ClassicObjectHandle& x) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(x->identity());
  if (it != cache_.end()) return it->second;
  Image img;
  if (x->poset_indexed()) {
    img.object = x->probar();
  } else {
    const fincat::Diagram& dia = x->diagram();
    auto a = std::make_shared<const graded::AIndexPoset>(dia.shape());
    auto value = [x, a](ElementId e) { return x->diagram().value(a->object_of(e)); };
    auto arrow = [x, a](ElementId u, ElementId v) { return x->diagram().arrow(a->arrow_of(u, v)); };
    img.index = a;
    img.object = std::make_shared<const ProBarObject>(a, value, arrow);
  }
  return cache_.emplace(x->identity(), std::move(img)).first->second;
}

ProBarObjectHandle SFunctor::on_object(const ClassicObjectHandle& x) const { return image(x).object; }

std::shared_ptr<const graded::AIndexPoset> SFunctor::a_index(const ClassicObjectHandle& x) const {
  require(!x->poset_indexed(), ErrorKind::kInvalidArgument, "pro-bar objects have no A_I index");
  return image(x).index;
}

ClassicMorphism SFunctor::nu(const ClassicObjectHandle& x) const {
  const Image& img = image(x);
  auto target = ClassicObject::of(img.object);
  if (x->poset_indexed()) return ClassicMorphism::identity(target);
  auto a = img.index;
  return ClassicMorphism(x, target, [x, a](std::size_t e) {
    const std::size_t i = a->object_of(e);
    return Germ{i, FinSetMap::identity(x->value(i))};
  });
}

ClassicMorphism SFunctor::nu_inverse(const ClassicObjectHandle& x) const {
  const Image& img = image(x);
  auto source = ClassicObject::of(img.object);
  if (x->poset_indexed()) return ClassicMorphism::identity(source);
  auto a = img.index;
  return ClassicMorphism(source, x, [x, a](std::size_t i) {
    return Germ{a->base_element(i), FinSetMap::identity(x->value(i))};
  });
}

OneMorphism SFunctor::on_morphism(const ClassicMorphism& d) const { return g_.apply_morphism(d); }

}  // namespace procat::probar
