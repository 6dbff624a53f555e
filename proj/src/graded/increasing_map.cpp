#include "procat/graded/increasing_map.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "procat/error.hpp"

namespace procat::graded {

struct IncreasingMap::Memo {
  Rule rule;
  std::mutex mutex;
  std::vector<long> values;
};

IncreasingMap::IncreasingMap(GradedPosetHandle source, GradedPosetHandle target, Rule rule)
    : source_(std::move(source)), target_(std::move(target)), memo_(std::make_shared<Memo>()) {
  require(source_ && target_, ErrorKind::kInvalidArgument, "increasing map needs source and target");
  memo_->rule = std::move(rule);
}

IncreasingMap IncreasingMap::identity(GradedPosetHandle p) {
  IncreasingMap m(p, p, [](ElementId b) { return b; });
  m.identity_ = true;
  return m;
}

IncreasingMap IncreasingMap::from_table(GradedPosetHandle source, GradedPosetHandle target,
                                        std::vector<ElementId> table) {
  auto shared = std::make_shared<const std::vector<ElementId>>(std::move(table));
  return IncreasingMap(std::move(source), std::move(target), [shared](ElementId b) {
    require(b < shared->size(), ErrorKind::kBudgetExhausted,
            "increasing map evaluated beyond its tabulated depth at element " + std::to_string(b));
    return (*shared)[b];
  });
}

ElementId IncreasingMap::operator()(ElementId b) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (b < memo_->values.size() && memo_->values[b] >= 0) return static_cast<ElementId>(memo_->values[b]);
  }
  ElementId v = memo_->rule(b);
  std::lock_guard lock(memo_->mutex);
  if (memo_->values.size() <= b) memo_->values.resize(b + 1, -1);
  memo_->values[b] = static_cast<long>(v);
  return v;
}

IncreasingMap compose(const IncreasingMap& outer, const IncreasingMap& inner) {
  require(inner.target() == outer.source(), ErrorKind::kInvalidArgument, "compose: index posets do not match");
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;
  return IncreasingMap(inner.source(), outer.target(), [outer, inner](ElementId b) { return outer(inner(b)); });
}

std::vector<ElementId> tabulate(const IncreasingMap& f, std::size_t depth) {
  std::vector<ElementId> out;
  for (ElementId b = 0; b < f.source()->count_upto(depth); ++b) out.push_back(f(b));
  return out;
}

bool equal_upto(const IncreasingMap& f, const IncreasingMap& g, std::size_t depth) {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  for (ElementId b = 0; b < f.source()->count_upto(depth); ++b)
    if (f(b) != g(b)) return false;
  return true;
}

bool is_strictly_increasing(const IncreasingMap& f, std::size_t depth) {
  const GradedPoset& s = *f.source();
  const GradedPoset& t = *f.target();
  for (ElementId b = 0; b < s.count_upto(depth); ++b)
    for (ElementId lower : s.below(b))
      if (!t.less(f(lower), f(b))) return false;
  return true;
}

bool dominates(const IncreasingMap& hi, const IncreasingMap& lo, std::size_t depth) {
  if (hi.source() != lo.source() || hi.target() != lo.target()) return false;
  for (ElementId b = 0; b < hi.source()->count_upto(depth); ++b)
    if (!hi.target()->leq(lo(b), hi(b))) return false;
  return true;
}

IncreasingMap dominate_increasing(const std::vector<IncreasingMap>& maps, Truncation t) {
  require(!maps.empty(), ErrorKind::kInvalidArgument, "dominate_increasing needs at least one map");
  const GradedPosetHandle& source = maps.front().source();
  const GradedPosetHandle& target = maps.front().target();
  for (const IncreasingMap& m : maps)
    require(m.source() == source && m.target() == target, ErrorKind::kInvalidArgument,
            "dominate_increasing: maps must share source and target");
  const std::size_t n = source->count_upto(t.depth);
  std::vector<ElementId> gamma(n);
  std::vector<ElementId> bounds;
  for (ElementId b = 0; b < n; ++b) {
    bounds.clear();
    for (const IncreasingMap& m : maps) bounds.push_back(m(b));
    for (ElementId lower : source->below(b)) bounds.push_back(gamma[lower]);
    auto found = first_upper_bound(*target, bounds, t.search, true);
    require(found.has_value(), ErrorKind::kBudgetExhausted,
            "dominate_increasing: no strict upper bound within search depth for " + source->element(b).key);
    gamma[b] = *found;
  }
  return IncreasingMap::from_table(source, target, std::move(gamma));
}

IncreasingMap dominate_increasing(const IncreasingMap& alpha, const IncreasingMap& beta, Truncation t) {
  return dominate_increasing(std::vector<IncreasingMap>{alpha, beta}, t);
}

std::vector<std::string> truncated_cofinality(const IncreasingMap& f, Truncation t) {
  std::vector<std::string> out;
  const GradedPoset& source = *f.source();
  const GradedPoset& target = *f.target();
  const std::size_t n = source.count_upto(t.search);
  std::vector<ElementId> image(n);
  for (ElementId p = 0; p < n; ++p) image[p] = f(p);
  for (ElementId q = 0; q < target.count_upto(t.depth); ++q) {
    std::vector<ElementId> over;
    for (ElementId p = 0; p < n; ++p)
      if (target.leq(q, image[p])) over.push_back(p);
    if (over.empty()) {
      out.push_back("over-category at " + target.element(q).key + " is empty");
      continue;
    }
    // Union-find over comparabilities; down-sets suffice since they are complete.
    std::vector<std::size_t> parent(over.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t j = 0; j < over.size(); ++j)
      for (ElementId lower : source.below(over[j])) {
        auto it = std::lower_bound(over.begin(), over.end(), lower);
        if (it != over.end() && *it == lower) parent[root(j)] = root(static_cast<std::size_t>(it - over.begin()));
      }
    std::size_t components = 0;
    for (std::size_t j = 0; j < over.size(); ++j) components += root(j) == j;
    if (components != 1)
      out.push_back("over-category at " + target.element(q).key + " has " + std::to_string(components) + " components");
  }
  return out;
}

}  // namespace procat::graded
