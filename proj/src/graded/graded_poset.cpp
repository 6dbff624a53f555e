#include "procat/graded/graded_poset.hpp"

#include <algorithm>

#include "procat/error.hpp"

namespace procat::graded {

void GradedPoset::ensure(std::size_t level) const {
  std::lock_guard lock(mutex_);
  while (level_begin_.size() <= level + 1) {
    const std::size_t current = level_begin_.size() - 1;
    std::vector<ElementSpec> specs;
    auto last = last_level();
    if (!last || current <= *last) specs = generate_level(current);
    const ElementId begin = level_begin_.back();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      ElementSpec& s = specs[i];
      require(std::is_sorted(s.below.begin(), s.below.end()), ErrorKind::kInvariantFailure,
              name() + ": generator emitted an unsorted down-set");
      require(s.below.empty() || s.below.back() < begin, ErrorKind::kInvariantFailure,
              name() + ": generator emitted a lower element that is not born earlier");
      auto [it, inserted] = by_key_.emplace(s.key, elements_.size());
      require(inserted, ErrorKind::kInvariantFailure, name() + ": duplicate element key " + s.key);
      elements_.push_back(Element{current, i, std::move(s.key), std::move(s.below), std::move(s.payload)});
      degree_.push_back(-1);
    }
    level_begin_.push_back(elements_.size());
  }
}

ElementId GradedPoset::level_begin(std::size_t level) const {
  ensure(level);
  std::lock_guard lock(mutex_);
  return level_begin_[level];
}

ElementId GradedPoset::level_end(std::size_t level) const {
  ensure(level);
  std::lock_guard lock(mutex_);
  return level_begin_[level + 1];
}

std::size_t GradedPoset::materialized_levels() const {
  std::lock_guard lock(mutex_);
  return level_begin_.size() - 1;
}

const Element& GradedPoset::element(ElementId id) const {
  std::lock_guard lock(mutex_);
  materialize_through(id);
  require(id < elements_.size(), ErrorKind::kInvalidArgument, name() + ": element " + std::to_string(id) + " not materialized");
  return elements_[id];
}

bool GradedPoset::less(ElementId a, ElementId b) const {
  const auto& lower = element(b).below;
  return std::binary_search(lower.begin(), lower.end(), a);
}

void GradedPoset::materialize_through(ElementId id) const {
  // Ids are assigned in level order, so materializing further levels eventually reaches id.
  constexpr std::size_t kMaxEmptyLevels = 64;
  std::size_t empty_run = 0;
  while (id >= elements_.size() && empty_run < kMaxEmptyLevels) {
    const std::size_t next = level_begin_.size() - 1;
    auto last = last_level();
    if (last && next > *last) break;
    const std::size_t before = elements_.size();
    ensure(next);
    empty_run = elements_.size() == before ? empty_run + 1 : 0;
  }
}

std::size_t GradedPoset::degree(ElementId id) const {
  std::lock_guard lock(mutex_);
  materialize_through(id);
  require(id < elements_.size(), ErrorKind::kInvalidArgument, name() + ": degree of unmaterialized element");
  if (degree_[id] >= 0) return static_cast<std::size_t>(degree_[id]);
  std::size_t best = 0;
  bool any = false;
  for (ElementId b : elements_[id].below) {
    best = std::max(best, degree(b));
    any = true;
  }
  std::size_t d = any ? best + 1 : 0;
  degree_[id] = static_cast<long>(d);
  return d;
}

std::optional<ElementId> GradedPoset::find_key(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementSpec> GradedPoset::regenerate(std::size_t level) const {
  std::lock_guard lock(mutex_);
  if (level > 0) ensure(level - 1);
  auto last = last_level();
  if (last && level > *last) return {};
  return generate_level(level);
}

std::vector<ElementId> elements_upto(const GradedPoset& p, std::size_t level) {
  std::vector<ElementId> out(p.count_upto(level));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<ElementId> degree_section(const GradedPoset& p, long n, std::size_t max_level) {
  std::vector<ElementId> out;
  if (n < 0) return out;
  for (ElementId e = 0; e < p.count_upto(max_level); ++e)
    if (static_cast<long>(p.degree(e)) <= n) out.push_back(e);
  return out;
}

std::vector<std::vector<ElementId>> sections(const GradedPoset& p, std::size_t level, std::size_t limit) {
  const std::size_t n = p.count_upto(level);
  std::vector<std::vector<ElementId>> out;
  std::vector<bool> in(n, false);
  std::vector<ElementId> current;
  // Ids are a linear extension of the order, so deciding in id order keeps the set down-closed.
  auto rec = [&](auto&& self, ElementId e) -> void {
    if (e == n) {
      require(out.size() < limit, ErrorKind::kBudgetExhausted, "sections: more than the allowed number of sections");
      out.push_back(current);
      return;
    }
    self(self, e + 1);
    bool allowed = true;
    for (ElementId b : p.below(e))
      if (!in[b]) {
        allowed = false;
        break;
      }
    if (allowed) {
      in[e] = true;
      current.push_back(e);
      self(self, e + 1);
      current.pop_back();
      in[e] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_section(const GradedPoset& p, std::span<const ElementId> subset) {
  std::vector<ElementId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (ElementId e : sorted)
    for (ElementId b : p.below(e))
      if (!std::binary_search(sorted.begin(), sorted.end(), b)) return false;
  return true;
}

std::optional<ElementId> first_upper_bound(const GradedPoset& p, std::span<const ElementId> xs,
                                           std::size_t max_level, bool strict) {
  std::size_t start_level = 0;
  for (ElementId x : xs) start_level = std::max(start_level, p.birth(x) + (strict ? 1 : 0));
  auto last = p.last_level();
  for (std::size_t level = start_level; level <= max_level; ++level) {
    if (last && level > *last) break;
    for (ElementId c = p.level_begin(level); c < p.level_end(level); ++c) {
      bool ok = true;
      for (ElementId x : xs)
        if (!(strict ? p.less(x, c) : p.leq(x, c))) {
          ok = false;
          break;
        }
      if (ok) return c;
    }
  }
  return std::nullopt;
}

std::vector<std::string> check_cofinite(const GradedPoset& p, std::size_t level) {
  std::vector<std::string> out;
  const std::size_t n = p.count_upto(level);
  for (ElementId e = 0; e < n; ++e) {
    const Element& el = p.element(e);
    for (ElementId b : el.below) {
      if (p.birth(b) >= el.level) out.push_back(el.key + ": lower element " + p.element(b).key + " not born earlier");
      for (ElementId c : p.below(b))
        if (!p.less(c, e)) out.push_back(el.key + ": down-set not closed at " + p.element(c).key);
    }
    if (p.degree(e) > el.level) out.push_back(el.key + ": degree exceeds birth level");
  }
  return out;
}

std::optional<std::vector<ElementId>> unbounded_truncated_section(const GradedPoset& p, std::size_t level,
                                                                  std::size_t limit) {
  for (const auto& s : sections(p, level, limit))
    if (!first_upper_bound(p, s, level + 1, false)) return s;
  return std::nullopt;
}

}  // namespace procat::graded
