#include "procat/fincat/limit.hpp"

#include <algorithm>

#include "procat/error.hpp"

namespace procat::fincat {

FiniteLimit::FiniteLimit(std::vector<std::size_t> sizes, std::vector<std::vector<std::size_t>> tuples)
    : sizes_(std::move(sizes)), tuples_(std::move(tuples)) {}

FinSetMap FiniteLimit::projection(std::size_t component) const {
  require(component < sizes_.size(), ErrorKind::kInvalidArgument, "projection index out of range");
  std::vector<std::size_t> images;
  images.reserve(tuples_.size());
  for (const auto& t : tuples_) images.push_back(t[component]);
  return FinSetMap(tuples_.size(), sizes_[component], std::move(images));
}

std::optional<std::size_t> FiniteLimit::find(const std::vector<std::size_t>& tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
  if (it == tuples_.end() || *it != tuple) return std::nullopt;
  return static_cast<std::size_t>(it - tuples_.begin());
}

FiniteLimit limit_of(std::span<const std::size_t> sizes, std::span<const LimitConstraint> constraints) {
  const std::size_t k = sizes.size();
  std::vector<std::vector<const LimitConstraint*>> closing(k);
  std::vector<const LimitConstraint*> forcing(k, nullptr);
  for (const LimitConstraint& c : constraints) {
    require(c.from < k && c.to < k, ErrorKind::kInvalidArgument, "limit constraint index out of range");
    require(c.map.dom() == sizes[c.from] && c.map.cod() == sizes[c.to], ErrorKind::kInvalidArgument,
            "limit constraint map has wrong endpoints");
    std::size_t last = std::max(c.from, c.to);
    closing[last].push_back(&c);
    // A constraint from an earlier slot pins the later one to a single candidate.
    if (c.from < c.to && !forcing[c.to]) forcing[c.to] = &c;
  }
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current(k, 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      tuples.push_back(current);
      return;
    }
    auto try_value = [&](std::size_t v) {
      current[j] = v;
      for (const LimitConstraint* c : closing[j])
        if (c->map.images()[current[c->from]] != current[c->to]) return;
      self(self, j + 1);
    };
    if (forcing[j]) {
      try_value(forcing[j]->map.images()[current[forcing[j]->from]]);
    } else {
      for (std::size_t v = 0; v < sizes[j]; ++v) try_value(v);
    }
  };
  rec(rec, 0);
  return FiniteLimit(std::vector<std::size_t>(sizes.begin(), sizes.end()), std::move(tuples));
}

FiniteLimit finset_limit(const Diagram& d) {
  std::vector<LimitConstraint> constraints;
  const FiniteCategory& c = d.shape();
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const Morphism& mor = c.morphism(m);
    constraints.push_back({mor.dom, mor.cod, d.arrow(m)});
  }
  return limit_of(d.values(), constraints);
}

FinSetMap induced_map(const FiniteLimit& limit, std::size_t apex, std::span<const FinSetMap> legs) {
  require(legs.size() == limit.arity(), ErrorKind::kInvalidArgument, "induced_map: one leg per component");
  std::vector<std::size_t> images(apex);
  std::vector<std::size_t> tuple(legs.size());
  for (std::size_t x = 0; x < apex; ++x) {
    for (std::size_t j = 0; j < legs.size(); ++j) tuple[j] = legs[j](x);
    auto index = limit.find(tuple);
    require(index.has_value(), ErrorKind::kInvalidArgument, "induced_map: legs do not form a cone");
    images[x] = *index;
  }
  return FinSetMap(apex, limit.size(), std::move(images));
}

}  // namespace procat::fincat
