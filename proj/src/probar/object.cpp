#include "procat/probar/object.hpp"

#include "procat/error.hpp"
#include "procat/graded/posets.hpp"

namespace procat::probar {

ProBarObject::ProBarObject(GradedPosetHandle index, ValueFn value, ArrowFn arrow, std::optional<std::size_t> constant_above)
    : index_(std::move(index)),
      value_(std::move(value)),
      arrow_(std::move(arrow)),
      constant_above_(constant_above),
      memo_(std::make_unique<Memo>()) {
  require(index_ != nullptr, ErrorKind::kInvalidArgument, "pro-bar object needs an index");
}

std::size_t ProBarObject::value(ElementId a) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->values.find(a);
    if (it != memo_->values.end()) return it->second;
  }
  index_->element(a);
  std::size_t v = value_(a);
  std::lock_guard lock(memo_->mutex);
  memo_->values.emplace(a, v);
  return v;
}

FinSetMap ProBarObject::arrow(ElementId upper, ElementId lower) const {
  if (upper == lower) return FinSetMap::identity(value(upper));
  require(index_->less(lower, upper), ErrorKind::kInvalidArgument, "arrow: elements are not related");
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->arrows.find({upper, lower});
    if (it != memo_->arrows.end()) return it->second;
  }
  FinSetMap m = arrow_(upper, lower);
  require(m.dom() == value(upper) && m.cod() == value(lower), ErrorKind::kInvariantFailure,
          "arrow has the wrong endpoints");
  std::lock_guard lock(memo_->mutex);
  memo_->arrows.emplace(std::make_pair(upper, lower), m);
  return m;
}

ProBarObjectHandle ProBarObject::constant(GradedPosetHandle index, std::size_t size) {
  return std::make_shared<ProBarObject>(
      std::move(index), [size](ElementId) { return size; },
      [size](ElementId, ElementId) { return FinSetMap::identity(size); }, 0);
}

ProBarObjectHandle ProBarObject::tabulated(GradedPosetHandle index, std::vector<std::size_t> values,
                                           std::map<std::pair<ElementId, ElementId>, FinSetMap> arrows) {
  auto vals = std::make_shared<const std::vector<std::size_t>>(std::move(values));
  auto arr = std::make_shared<const std::map<std::pair<ElementId, ElementId>, FinSetMap>>(std::move(arrows));
  auto value = [vals](ElementId a) {
    require(a < vals->size(), ErrorKind::kBudgetExhausted, "tabulated object does not reach this element");
    return (*vals)[a];
  };
  auto arrow = [arr](ElementId upper, ElementId lower) {
    auto it = arr->find({upper, lower});
    require(it != arr->end(), ErrorKind::kBudgetExhausted, "tabulated object has no such arrow");
    return it->second;
  };
  return std::make_shared<ProBarObject>(std::move(index), value, arrow);
}

ProBarObjectHandle ProBarObject::chain(std::vector<std::size_t> values, std::vector<FinSetMap> steps) {
  require(!values.empty() && steps.size() + 1 == values.size(), ErrorKind::kInvalidArgument,
          "chain object: one step between consecutive values");
  for (std::size_t n = 0; n < steps.size(); ++n)
    require(steps[n].dom() == values[n + 1] && steps[n].cod() == values[n], ErrorKind::kInvalidArgument,
            "chain object: step has the wrong endpoints");
  auto vals = std::make_shared<const std::vector<std::size_t>>(std::move(values));
  auto st = std::make_shared<const std::vector<FinSetMap>>(std::move(steps));
  const std::size_t last = vals->size() - 1;
  auto value = [vals, last](ElementId n) { return (*vals)[std::min<std::size_t>(n, last)]; };
  auto arrow = [vals, st, last](ElementId upper, ElementId lower) {
    const std::size_t top = std::min<std::size_t>(upper, last);
    FinSetMap m = FinSetMap::identity((*vals)[top]);
    for (std::size_t n = top; n > lower; --n) m = compose((*st)[n - 1], m);
    return m;
  };
  return std::make_shared<ProBarObject>(graded::standard_chain(), value, arrow, last);
}

ProBarObjectHandle ProBarObject::pullback(ProBarObjectHandle x, graded::IncreasingMap along,
                                          std::optional<std::size_t> constant_above) {
  require(along.target() == x->index(), ErrorKind::kInvalidArgument, "pullback: map does not land in the index");
  auto value = [x, along](ElementId b) { return x->value(along(b)); };
  auto arrow = [x, along](ElementId upper, ElementId lower) { return x->arrow(along(upper), along(lower)); };
  return std::make_shared<ProBarObject>(along.source(), value, arrow, constant_above);
}

std::vector<std::string> check_functorial(const ProBarObject& x, std::size_t depth) {
  std::vector<std::string> out;
  const auto& p = *x.index();
  const std::size_t n = p.count_upto(depth);
  for (ElementId c = 0; c < n; ++c)
    for (ElementId b : p.below(c)) {
      const FinSetMap cb = x.arrow(c, b);
      for (ElementId a : p.below(b))
        if (compose(x.arrow(b, a), cb) != x.arrow(c, a))
          out.push_back("composite fails at " + p.element(c).key + " > " + p.element(b).key + " > " + p.element(a).key);
    }
  return out;
}

std::vector<std::string> check_constant_above(const ProBarObject& x, std::size_t depth) {
  std::vector<std::string> out;
  auto k = x.constant_above();
  if (!k) return out;
  const auto& p = *x.index();
  for (ElementId c = 0; c < p.count_upto(depth); ++c)
    for (ElementId b : p.below(c))
      if (p.birth(b) >= *k && !x.arrow(c, b).is_identity())
        out.push_back("arrow " + p.element(c).key + " -> " + p.element(b).key + " is not an identity");
  return out;
}

}  // namespace procat::probar
