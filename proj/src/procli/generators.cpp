#include "procat/procli/generators.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "procat/error.hpp"

#include "procat/graded/posets.hpp"

namespace procat::procli {

using graded::ElementId;
using probar::OneMorphism;
using probar::ProBarObject;
using probar::ProBarObjectHandle;

FinSetMap random_map(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> images(dom);
  for (auto& v : images) v = rng.below(cod);
  return FinSetMap(dom, cod, images);
}

FinSetMap random_injection(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> pool(cod);
  for (std::size_t i = 0; i < cod; ++i) pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  pool.resize(dom);
  return FinSetMap(dom, cod, pool);
}

FinSetMap random_surjection(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> images(dom);
  for (std::size_t i = 0; i < dom; ++i) images[i] = i < cod ? i : rng.below(cod);
  std::shuffle(images.begin(), images.end(), rng.engine());
  return FinSetMap(dom, cod, images);
}

ProBarObjectHandle random_chain_object(Rng& rng, std::size_t stable, std::size_t max_size) {
  std::vector<std::size_t> values(stable + 1);
  for (auto& v : values) v = rng.between(1, max_size);
  std::vector<FinSetMap> steps;
  for (std::size_t n = 0; n < stable; ++n) steps.push_back(random_map(rng, values[n + 1], values[n]));
  return ProBarObject::chain(std::move(values), std::move(steps));
}

graded::IncreasingMap random_chain_reindexing(Rng& rng, std::size_t until, std::size_t max_gap) {
  std::vector<ElementId> table{rng.below(max_gap)};
  for (std::size_t n = 1; n <= until; ++n) table.push_back(table.back() + rng.between(1, max_gap));
  const auto& chain = graded::standard_chain();
  return graded::IncreasingMap(chain, chain, [table](ElementId n) {
    return n < table.size() ? table[n] : table.back() + (n - (table.size() - 1));
  });
}

std::optional<OneMorphism> random_natural(Rng& rng, ProBarObjectHandle source, ProBarObjectHandle target,
                                          graded::IncreasingMap alpha, std::size_t tries) {
  const std::size_t kf = source->constant_above().value_or(0);
  std::size_t last = target->constant_above().value_or(0);
  for (std::size_t n = 0;; ++n)
    if (alpha(n) >= kf) {
      last = std::max(last, n);
      break;
    }
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    std::vector<FinSetMap> phi{random_map(rng, source->value(alpha(0)), target->value(0))};
    bool dead = false;
    for (std::size_t n = 1; n <= last && !dead; ++n) {
      const FinSetMap down_f = source->arrow(alpha(n), alpha(n - 1));
      const FinSetMap down_g = target->arrow(n, n - 1);
      std::vector<std::size_t> images(source->value(alpha(n)));
      for (std::size_t x = 0; x < images.size() && !dead; ++x) {
        const std::size_t want = phi[n - 1](down_f(x));
        std::vector<std::size_t> choices;
        for (std::size_t z = 0; z < down_g.dom(); ++z)
          if (down_g(z) == want) choices.push_back(z);
        if (choices.empty()) dead = true;
        else images[x] = choices[rng.below(choices.size())];
      }
      if (!dead) phi.emplace_back(images.size(), target->value(n), images);
    }
    if (dead) continue;
    auto table = std::make_shared<const std::vector<FinSetMap>>(std::move(phi));
    return OneMorphism(source, target, alpha, [table, source, alpha, last](ElementId n) {
      if (n <= last) return (*table)[n];
      return fincat::compose((*table)[last], source->arrow(alpha(n), alpha(last)));
    });
  }
  return std::nullopt;
}

probar::ClassicMorphism rerepresent(Rng& rng, const OneMorphism& f, std::size_t max_lift) {
  std::vector<std::size_t> lifts(64);
  for (auto& l : lifts) l = rng.between(0, max_lift);
  auto rep = [f, lifts](std::size_t b) {
    const ElementId a = f.alpha()(b);
    const ElementId c = a + lifts[b % lifts.size()];
    return probar::Germ{c, fincat::compose(f.phi(b), f.source()->arrow(c, a))};
  };
  return probar::ClassicMorphism(probar::ClassicObject::of(f.source()), probar::ClassicObject::of(f.target()), rep);
}

ChainPair random_chain_pair(Rng& rng, std::size_t stable, std::size_t max_size) {
  for (;;) {
    auto source = random_chain_object(rng, stable, max_size);
    auto target = random_chain_object(rng, stable, max_size);
    auto alpha = random_chain_reindexing(rng, stable + 1, 2);
    if (auto f = random_natural(rng, source, target, alpha)) return {source, target, *f};
  }
}

probar::ProBarFamilyHandle random_arrow_family(Rng& rng, std::size_t stable, std::size_t max_size) {
  ChainPair p = random_chain_pair(rng, stable, max_size);
  const auto shape = fincat::FiniteCategory::linear(1);
  return std::make_shared<const probar::ProBarFamily>(
      probar::ProBarFamily::make(shape, {p.source, p.target}, [&](std::size_t) { return p.morphism; }));
}

fincat::FinitePoset random_poset(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(edge_probability)) pairs.emplace_back(i, j);
  return fincat::FinitePoset(n, pairs);
}

}  // namespace procat::procli

namespace procat::procli {

namespace {

// lim_{s<t} X as the matching object of X -> 1.
factor::MatchingObject limit_below(const graded::GradedPoset& index, ElementId t,
                                   const std::function<std::size_t(ElementId)>& value,
                                   const std::function<FinSetMap(ElementId, ElementId)>& arrow) {
  const factor::NaturalView view{value, [](ElementId) { return std::size_t{1}; }, arrow,
                                 [](ElementId, ElementId) { return FinSetMap::identity(1); },
                                 [value](ElementId s) { return FinSetMap::constant(value(s), 1, 0); }};
  return factor::MatchingObject(index, t, view);
}

// The tabulated pointed object with the given matching maps m_t : X(t) -> lim_{s<t} X.
struct PointedBuilder {
  graded::GradedPosetHandle index;
  std::vector<std::size_t> values;
  std::map<std::pair<ElementId, ElementId>, FinSetMap> arrows;

  factor::MatchingObject below(ElementId t) const {
    return limit_below(*index, t, [this](ElementId s) { return values.at(s); },
                       [this](ElementId u, ElementId v) { return arrows.at({u, v}); });
  }
  // Appends X(t) with images[i] the index of a point of `lim`.
  void add(ElementId t, const factor::MatchingObject& lim, const std::vector<std::size_t>& images) {
    const FinSetMap m(images.size(), lim.size(), images);
    values.push_back(images.size());
    for (ElementId s : lim.down()) arrows.emplace(std::make_pair(t, s), fincat::compose(lim.project_source(s), m));
  }
  std::size_t base_point(const factor::MatchingObject& lim) const {
    std::vector<std::size_t> zero(lim.limit().arity(), 0);
    auto at = lim.limit().find(zero);
    require(at.has_value(), ErrorKind::kInvariantFailure, "pointed object lost its base point");
    return *at;
  }
  ProBarObjectHandle build() { return ProBarObject::tabulated(index, std::move(values), std::move(arrows)); }
};

}  // namespace

ProBarObjectHandle random_pointed_object(Rng& rng, graded::GradedPosetHandle index, std::size_t depth,
                                         std::size_t max_size) {
  PointedBuilder b{index, {}, {}};
  for (ElementId t = 0; t < index->count_upto(depth); ++t) {
    const factor::MatchingObject lim = b.below(t);
    std::vector<std::size_t> images(rng.between(1, max_size));
    images[0] = b.base_point(lim);
    for (std::size_t i = 1; i < images.size(); ++i) images[i] = rng.below(lim.size());
    b.add(t, lim, images);
  }
  return b.build();
}

PointedExtension random_pointed_extension(Rng& rng, const ProBarObjectHandle& x, std::size_t depth,
                                          std::size_t max_extra) {
  const auto& index = x->index();
  PointedBuilder b{index, {}, {}};
  std::vector<FinSetMap> inclusions;
  for (ElementId t = 0; t < index->count_upto(depth); ++t) {
    const factor::MatchingObject lim = b.below(t);
    std::vector<std::size_t> images;
    std::vector<std::size_t> tuple(lim.limit().arity(), 0);
    for (std::size_t p = 0; p < x->value(t); ++p) {
      for (ElementId s : lim.down()) tuple[lim.source_slot(s)] = x->arrow(t, s)(p);
      images.push_back(*lim.limit().find(tuple));
    }
    const std::size_t extra = rng.below(max_extra + 1);
    for (std::size_t i = 0; i < extra; ++i) images.push_back(rng.below(lim.size()));
    inclusions.push_back(FinSetMap(x->value(t), images.size(), [&] {
      std::vector<std::size_t> v(x->value(t));
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
      return v;
    }()));
    b.add(t, lim, images);
  }
  ProBarObjectHandle y = b.build();
  return {y, factor::natural_from_table(x, y, std::move(inclusions))};
}

std::optional<OneMorphism> random_pointed_map(Rng& rng, const ProBarObjectHandle& source,
                                              const ProBarObjectHandle& target, std::size_t depth,
                                              const ForcedValue& forced, std::size_t tries) {
  const auto& index = *source->index();
  const std::size_t n = index.count_upto(depth);
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    std::vector<FinSetMap> phi;
    bool dead = false;
    for (ElementId t = 0; t < n && !dead; ++t) {
      const std::vector<ElementId> covers = factor::covers(index, t);
      std::vector<std::size_t> images(source->value(t));
      for (std::size_t x = 0; x < images.size() && !dead; ++x) {
        auto fits = [&](std::size_t z) {
          for (ElementId s : covers)
            if (target->arrow(t, s)(z) != phi[s](source->arrow(t, s)(x))) return false;
          return true;
        };
        std::optional<std::size_t> pinned = forced ? forced(t, x) : std::nullopt;
        std::vector<std::size_t> choices;
        if (pinned) {
          if (fits(*pinned)) choices.push_back(*pinned);
        } else {
          for (std::size_t z = 0; z < target->value(t); ++z)
            if (fits(z)) choices.push_back(z);
        }
        if (choices.empty()) dead = true;
        else images[x] = choices[rng.below(choices.size())];
      }
      if (!dead) phi.emplace_back(images.size(), target->value(t), images);
    }
    if (!dead) return factor::natural_from_table(source, target, std::move(phi));
  }
  if (forced) return std::nullopt;
  std::vector<FinSetMap> base;
  for (ElementId t = 0; t < n; ++t) base.push_back(FinSetMap::constant(source->value(t), target->value(t), 0));
  return factor::natural_from_table(source, target, std::move(base));
}

PosetArrow random_poset_arrow(Rng& rng, std::size_t elements, std::size_t max_size) {
  auto index = std::make_shared<const graded::FinitePosetIndex>(random_poset(rng, elements, 0.4));
  const std::size_t depth = index->last_level().value_or(0);
  auto c = random_pointed_object(rng, index, depth, max_size);
  auto d = random_pointed_object(rng, index, depth, max_size);
  return {index, *random_pointed_map(rng, c, d, depth), depth};
}

OneMorphism random_chain_arrow(Rng& rng, std::size_t stable, std::size_t max_size) {
  const auto identity = graded::IncreasingMap::identity(graded::standard_chain());
  for (;;) {
    auto x = random_chain_object(rng, stable, max_size);
    auto y = random_chain_object(rng, stable, max_size);
    if (auto f = random_natural(rng, x, y, identity)) return *f;
  }
}

namespace {

// S ⊔_X Y for x -> s and x -> y, classes labelled in order of their least member in S + Y.
struct Pushout {
  std::size_t size = 0;
  FinSetMap from_left;
  FinSetMap from_right;
};

Pushout pushout(const FinSetMap& to_left, const FinSetMap& to_right) {
  const std::size_t ns = to_left.cod(), ny = to_right.cod();
  std::vector<std::size_t> parent(ns + ny);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t x = 0; x < to_left.dom(); ++x) {
    const std::size_t a = find(to_left(x)), b = find(ns + to_right(x));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(parent.size(), 0);
  std::map<std::size_t, std::size_t> class_label;
  for (std::size_t i = 0; i < parent.size(); ++i)
    label[i] = class_label.emplace(find(i), class_label.size()).first->second;
  const std::size_t size = class_label.size();
  return {size, FinSetMap(ns, size, std::vector<std::size_t>(label.begin(), label.begin() + ns)),
          FinSetMap(ny, size, std::vector<std::size_t>(label.begin() + ns, label.end()))};
}

}  // namespace

ArrowExtension random_arrow_extension(Rng& rng, const OneMorphism& f, std::size_t stable, std::size_t max_size,
                                      std::size_t max_gap) {
  const auto alpha = random_chain_reindexing(rng, stable, max_gap);
  std::optional<OneMorphism> phi;
  ProBarObjectHandle s;
  for (std::size_t attempt = 0; attempt < 32 && !phi; ++attempt) {
    s = random_chain_object(rng, stable, max_size);
    phi = random_natural(rng, f.source(), s, alpha);
  }
  if (!phi) {
    s = ProBarObject::constant(graded::standard_chain(), 1);
    phi = random_natural(rng, f.source(), s, alpha);
  }
  struct Cache {
    std::mutex mutex;
    std::map<ElementId, Pushout> at;
  };
  auto cache = std::make_shared<Cache>();
  const OneMorphism g = *phi;
  auto square = [cache, f, g](ElementId b) {
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->at.find(b);
      if (it != cache->at.end()) return it->second;
    }
    Pushout p = pushout(g.phi(b), f.phi(g.alpha()(b)));
    std::lock_guard lock(cache->mutex);
    return cache->at.emplace(b, std::move(p)).first->second;
  };
  auto y = f.target();
  auto t_value = [square](ElementId b) { return square(b).size; };
  auto t_arrow = [square, s, y, g](ElementId upper, ElementId lower) {
    const Pushout up = square(upper), low = square(lower);
    std::vector<std::size_t> images(up.size, 0);
    const FinSetMap s_down = fincat::compose(low.from_left, s->arrow(upper, lower));
    const FinSetMap y_down = fincat::compose(low.from_right, y->arrow(g.alpha()(upper), g.alpha()(lower)));
    for (std::size_t i = 0; i < up.from_left.dom(); ++i) images[up.from_left(i)] = s_down(i);
    for (std::size_t i = 0; i < up.from_right.dom(); ++i) images[up.from_right(i)] = y_down(i);
    return FinSetMap(up.size, low.size, images);
  };
  auto t_obj = std::make_shared<const ProBarObject>(graded::standard_chain(), t_value, t_arrow);
  OneMorphism arrow = OneMorphism::natural(s, t_obj, [square](ElementId b) { return square(b).from_left; });
  OneMorphism psi(y, t_obj, g.alpha(), [square](ElementId b) { return square(b).from_right; });
  return {arrow, {g, psi}};
}

}  // namespace procat::procli
