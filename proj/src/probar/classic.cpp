#include "procat/probar/classic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "procat/error.hpp"
#include "procat/fincat/directed.hpp"

namespace procat::probar {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kEqual: return "equal";
    case Verdict::kUnequal: return "unequal";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

ClassicObject::ClassicObject(ProBarObjectHandle x) : probar_(std::move(x)) {
  require(probar_ != nullptr, ErrorKind::kInvalidArgument, "classic object needs a pro-bar object");
}

ClassicObject::ClassicObject(fincat::Diagram x) {
  require(fincat::is_directed(x.shape()).directed(), ErrorKind::kNotDirected, "classic object: index is not directed");
  require(fincat::check_functorial(x).empty(), ErrorKind::kInvalidArgument, "classic object: diagram is not a functor");
  diagram_ = std::make_shared<const fincat::Diagram>(std::move(x));
}

const ProBarObjectHandle& ClassicObject::probar() const {
  require(poset_indexed(), ErrorKind::kInvalidArgument, "classic object is category-indexed");
  return probar_;
}

const fincat::Diagram& ClassicObject::diagram() const {
  require(!poset_indexed(), ErrorKind::kInvalidArgument, "classic object is poset-indexed");
  return *diagram_;
}

const void* ClassicObject::identity() const noexcept {
  return probar_ ? static_cast<const void*>(probar_.get()) : static_cast<const void*>(diagram_.get());
}

bool same_object(const ClassicObject& x, const ClassicObject& y) { return x.identity() == y.identity(); }

std::size_t ClassicObject::value(std::size_t node) const {
  return probar_ ? probar_->value(node) : diagram_->value(node);
}

std::size_t ClassicObject::node_count(std::size_t depth) const {
  return probar_ ? probar_->index()->count_upto(depth) : diagram_->shape().object_count();
}

std::vector<std::pair<std::size_t, FinSetMap>> ClassicObject::arrows_from(std::size_t node) const {
  std::vector<std::pair<std::size_t, FinSetMap>> out;
  if (probar_) {
    for (ElementId lower : probar_->index()->below(node)) out.emplace_back(lower, probar_->arrow(node, lower));
    return out;
  }
  const auto& c = diagram_->shape();
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (c.morphism(m).dom == node && !c.is_identity(m)) out.emplace_back(c.morphism(m).cod, diagram_->arrow(m));
  return out;
}

GermComparison ClassicObject::compare(const Germ& g, const Germ& h, std::size_t search) const {
  require(g.map.cod() == h.map.cod() && g.map.dom() == value(g.node) && h.map.dom() == value(h.node),
          ErrorKind::kInvalidArgument, "germs do not share a codomain");
  if (g.node == h.node && g.map == h.map) return {Verdict::kEqual, g.node};
  if (!probar_) {
    const auto& c = diagram_->shape();
    for (std::size_t k = 0; k < c.object_count(); ++k)
      for (std::size_t u : c.hom(k, g.node))
        for (std::size_t v : c.hom(k, h.node))
          if (fincat::compose(g.map, diagram_->arrow(u)) == fincat::compose(h.map, diagram_->arrow(v)))
            return {Verdict::kEqual, k};
    return {Verdict::kUnequal, std::nullopt};
  }
  const auto& p = *probar_->index();
  const auto k = probar_->constant_above();
  std::size_t start = std::max(p.birth(g.node), p.birth(h.node));
  if (k) start = std::max(start, *k);
  for (std::size_t level = start; level <= search; ++level) {
    if (p.last_level() && level > *p.last_level()) break;
    for (ElementId c = p.level_begin(level); c < p.level_end(level); ++c) {
      if (!p.leq(g.node, c) || !p.leq(h.node, c)) continue;
      const bool agree = fincat::compose(g.map, probar_->arrow(c, g.node)) ==
                         fincat::compose(h.map, probar_->arrow(c, h.node));
      if (agree) return {Verdict::kEqual, c};
      // Above the constancy level every common upper bound gives the same comparison.
      if (k) return {Verdict::kUnequal, std::nullopt};
    }
  }
  return {Verdict::kUnknown, std::nullopt};
}

struct ClassicMorphism::Memo {
  std::mutex mutex;
  std::map<std::size_t, Germ> reps;
};

ClassicMorphism::ClassicMorphism(ClassicObjectHandle source, ClassicObjectHandle target, Representatives rep)
    : source_(std::move(source)), target_(std::move(target)), rep_(std::move(rep)), memo_(std::make_shared<Memo>()) {
  require(source_ && target_, ErrorKind::kInvalidArgument, "classic morphism needs both endpoints");
}

ClassicMorphism ClassicMorphism::identity(ClassicObjectHandle x) {
  auto rep = [x](std::size_t node) { return Germ{node, FinSetMap::identity(x->value(node))}; };
  return ClassicMorphism(x, x, rep);
}

Germ ClassicMorphism::representative(std::size_t node) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->reps.find(node);
    if (it != memo_->reps.end()) return it->second;
  }
  Germ g = rep_(node);
  require(g.map.dom() == source_->value(g.node) && g.map.cod() == target_->value(node), ErrorKind::kInvariantFailure,
          "representative has the wrong endpoints");
  std::lock_guard lock(memo_->mutex);
  memo_->reps.emplace(node, g);
  return g;
}

ClassicMorphism to_pro(const OneMorphism& f) {
  auto rep = [f](std::size_t b) { return Germ{f.alpha()(b), f.phi(b)}; };
  return ClassicMorphism(ClassicObject::of(f.source()), ClassicObject::of(f.target()), rep);
}

ClassicMorphism compose(const ClassicMorphism& second, const ClassicMorphism& first) {
  require(same_object(*second.source(), *first.target()), ErrorKind::kInvalidArgument,
          "compose: classic morphisms are not composable");
  auto rep = [second, first](std::size_t node) {
    const Germ outer = second.representative(node);
    const Germ inner = first.representative(outer.node);
    return Germ{inner.node, fincat::compose(outer.map, inner.map)};
  };
  return ClassicMorphism(first.source(), second.target(), rep);
}

namespace {

Verdict compare_nodes(const ClassicMorphism& d, const ClassicMorphism& e, std::size_t nodes, std::size_t search) {
  require(same_object(*d.source(), *e.source()) && same_object(*d.target(), *e.target()), ErrorKind::kInvalidArgument,
          "classic morphisms have different endpoints");
  bool unknown = false;
  for (std::size_t b = 0; b < nodes; ++b) {
    const Verdict v = d.source()->compare(d.representative(b), e.representative(b), search).verdict;
    if (v == Verdict::kUnequal) return Verdict::kUnequal;
    unknown = unknown || v == Verdict::kUnknown;
  }
  return unknown ? Verdict::kUnknown : Verdict::kEqual;
}

}  // namespace

Verdict classic_equal(const ClassicMorphism& d, const ClassicMorphism& e, std::size_t depth, std::size_t search) {
  return compare_nodes(d, e, d.target()->node_count(depth), search);
}

Verdict stabilized_equal(const ClassicMorphism& d, const ClassicMorphism& e, std::size_t search) {
  const auto& y = *d.target();
  if (!y.poset_indexed()) return compare_nodes(d, e, y.node_count(0), search);
  const auto k = y.probar()->constant_above();
  require(k.has_value(), ErrorKind::kPreconditionViolated, "stabilized equality needs an eventually constant target");
  return compare_nodes(d, e, y.node_count(*k), std::max(search, *k));
}

CompatibilityReport check_compatible(const ClassicMorphism& d, std::size_t depth, std::size_t search) {
  CompatibilityReport out;
  const auto& x = *d.source();
  const auto& y = *d.target();
  for (std::size_t upper = 0; upper < y.node_count(depth); ++upper) {
    const Germ top = d.representative(upper);
    for (const auto& [lower, arrow] : y.arrows_from(upper)) {
      const Germ pushed{top.node, fincat::compose(arrow, top.map)};
      const GermComparison c = x.compare(pushed, d.representative(lower), search);
      const std::string pair = std::to_string(upper) + " -> " + std::to_string(lower);
      if (c.verdict == Verdict::kEqual)
        out.certificates.push_back({upper, lower, *c.refinement});
      else if (c.verdict == Verdict::kUnequal)
        out.failures.push_back("incompatible at " + pair);
      else
        out.unknown.push_back("no refinement in budget at " + pair);
    }
  }
  return out;
}

}  // namespace procat::probar

namespace procat::probar {

Verdict are_inverse(const ClassicMorphism& f, const ClassicMorphism& g, std::size_t depth, std::size_t search) {
  const Verdict there = classic_equal(compose(g, f), ClassicMorphism::identity(f.source()), depth, search);
  if (there == Verdict::kUnequal) return there;
  const Verdict back = classic_equal(compose(f, g), ClassicMorphism::identity(g.source()), depth, search);
  if (back == Verdict::kUnequal) return back;
  return there == Verdict::kEqual && back == Verdict::kEqual ? Verdict::kEqual : Verdict::kUnknown;
}

}  // namespace procat::probar
