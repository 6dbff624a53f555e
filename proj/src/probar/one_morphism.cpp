#include "procat/probar/one_morphism.hpp"

#include <map>
#include <mutex>

#include "procat/error.hpp"

namespace procat::probar {

struct OneMorphism::Memo {
  std::mutex mutex;
  std::map<ElementId, FinSetMap> phi;
};

OneMorphism::OneMorphism(ProBarObjectHandle source, ProBarObjectHandle target, IncreasingMap alpha, Components phi)
    : source_(std::move(source)),
      target_(std::move(target)),
      alpha_(std::move(alpha)),
      phi_(std::move(phi)),
      memo_(std::make_shared<Memo>()) {
  require(source_ && target_, ErrorKind::kInvalidArgument, "1-morphism needs both endpoints");
  require(alpha_.source() == target_->index() && alpha_.target() == source_->index(), ErrorKind::kInvalidArgument,
          "1-morphism: index map must run from the target index to the source index");
}

OneMorphism OneMorphism::identity(ProBarObjectHandle x) {
  auto phi = [x](ElementId b) { return FinSetMap::identity(x->value(b)); };
  return OneMorphism(x, x, IncreasingMap::identity(x->index()), phi);
}

OneMorphism OneMorphism::natural(ProBarObjectHandle source, ProBarObjectHandle target, Components phi) {
  require(source->index() == target->index(), ErrorKind::kInvalidArgument, "natural map needs a common index");
  return OneMorphism(source, target, IncreasingMap::identity(source->index()), std::move(phi));
}

OneMorphism OneMorphism::from_tables(ProBarObjectHandle source, ProBarObjectHandle target,
                                     std::vector<ElementId> alpha, std::vector<FinSetMap> phi) {
  require(alpha.size() == phi.size(), ErrorKind::kInvalidArgument, "1-morphism tables differ in length");
  auto table = std::make_shared<const std::vector<FinSetMap>>(std::move(phi));
  auto a = IncreasingMap::from_table(target->index(), source->index(), std::move(alpha));
  return OneMorphism(source, target, a, [table](ElementId b) {
    require(b < table->size(), ErrorKind::kBudgetExhausted, "1-morphism table does not reach this element");
    return (*table)[b];
  });
}

FinSetMap OneMorphism::phi(ElementId b) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->phi.find(b);
    if (it != memo_->phi.end()) return it->second;
  }
  FinSetMap m = phi_(b);
  std::lock_guard lock(memo_->mutex);
  memo_->phi.emplace(b, m);
  return m;
}

OneMorphism compose(const OneMorphism& second, const OneMorphism& first) {
  require(second.source() == first.target(), ErrorKind::kInvalidArgument, "compose: 1-morphisms are not composable");
  const IncreasingMap beta = second.alpha();
  auto phi = [second, first, beta](ElementId c) { return fincat::compose(second.phi(c), first.phi(beta(c))); };
  return OneMorphism(first.source(), second.target(), graded::compose(first.alpha(), beta), phi);
}

bool leq(const OneMorphism& lo, const OneMorphism& hi, std::size_t depth) {
  require(lo.source() == hi.source() && lo.target() == hi.target(), ErrorKind::kInvalidArgument,
          "leq: 1-morphisms have different endpoints");
  const auto& b_index = *lo.target()->index();
  const auto& a_index = *lo.source()->index();
  for (ElementId b = 0; b < b_index.count_upto(depth); ++b) {
    const ElementId a_hi = hi.alpha()(b), a_lo = lo.alpha()(b);
    if (!a_index.leq(a_lo, a_hi)) return false;
    if (hi.phi(b) != fincat::compose(lo.phi(b), lo.source()->arrow(a_hi, a_lo))) return false;
  }
  return true;
}

OneMorphism reindex(const OneMorphism& f, IncreasingMap alpha, std::size_t depth) {
  const auto& a_index = f.source()->index();
  auto dominated = [f, alpha, a_index](ElementId b) {
    require(a_index->leq(f.alpha()(b), alpha(b)), ErrorKind::kNotDominating,
            "reindex: new index map is not above the old one at " + f.target()->index()->element(b).key);
  };
  for (ElementId b = 0; b < f.target()->index()->count_upto(depth); ++b) dominated(b);
  auto phi = [f, alpha, dominated](ElementId b) {
    dominated(b);
    return fincat::compose(f.phi(b), f.source()->arrow(alpha(b), f.alpha()(b)));
  };
  return OneMorphism(f.source(), f.target(), alpha, phi);
}

bool equal_upto(const OneMorphism& f, const OneMorphism& g, std::size_t depth) {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  for (ElementId b = 0; b < f.target()->index()->count_upto(depth); ++b)
    if (f.alpha()(b) != g.alpha()(b) || f.phi(b) != g.phi(b)) return false;
  return true;
}

std::vector<std::string> check_natural(const OneMorphism& f, std::size_t depth) {
  std::vector<std::string> out;
  const auto& b_index = *f.target()->index();
  const auto& a_index = *f.source()->index();
  for (ElementId b = 0; b < b_index.count_upto(depth); ++b) {
    const std::string& key = b_index.element(b).key;
    const ElementId a = f.alpha()(b);
    const FinSetMap p = f.phi(b);
    if (p.dom() != f.source()->value(a) || p.cod() != f.target()->value(b)) {
      out.push_back("component at " + key + " has the wrong endpoints");
      continue;
    }
    for (ElementId lower : b_index.below(b)) {
      const ElementId a_lower = f.alpha()(lower);
      if (!a_index.less(a_lower, a)) {
        out.push_back("index map is not strictly increasing at " + key);
        continue;
      }
      if (fincat::compose(f.phi(lower), f.source()->arrow(a, a_lower)) !=
          fincat::compose(f.target()->arrow(b, lower), p))
        out.push_back("naturality fails at " + key + " > " + b_index.element(lower).key);
    }
  }
  return out;
}

}  // namespace procat::probar
