#include "procat/graded/product.hpp"

#include <algorithm>

#include "procat/error.hpp"

namespace procat::graded {

ProductPoset::ProductPoset(std::vector<GradedPosetHandle> components, Constraint constraint)
    : components_(std::move(components)), constraint_(std::move(constraint)) {
  for (const auto& c : components_) require(c != nullptr, ErrorKind::kInvalidArgument, "product: null component");
}

bool ProductPoset::declared_infinite_height() const {
  if (components_.empty()) return false;
  return std::all_of(components_.begin(), components_.end(),
                     [](const GradedPosetHandle& c) { return c->declared_infinite_height(); });
}

std::optional<std::size_t> ProductPoset::last_level() const {
  std::size_t total = 0;
  for (const auto& c : components_) {
    auto last = c->last_level();
    if (!last) return std::nullopt;
    total += *last;
  }
  return total;
}

std::string ProductPoset::key_of(std::span<const ElementId> t) {
  std::string key = "(";
  for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
  return key + ")";
}

std::size_t ProductPoset::birth_of(std::span<const ElementId> t) const {
  require(t.size() == components_.size(), ErrorKind::kInvalidArgument, "product: tuple has the wrong arity");
  std::size_t level = 0;
  for (std::size_t i = 0; i < t.size(); ++i) level += components_[i]->birth(t[i]);
  return level;
}

std::optional<ElementId> ProductPoset::find(std::span<const ElementId> t) const {
  const std::size_t level = birth_of(t);
  auto last = last_level();
  if (last && level > *last) return std::nullopt;
  level_end(level);
  return find_key(key_of(t));
}

std::vector<ElementSpec> ProductPoset::generate_level(std::size_t level) const {
  const std::size_t n = components_.size();
  std::vector<std::vector<ElementId>> tuples;
  if (n == 0) {
    if (level == 0) tuples.emplace_back();
  } else {
    std::vector<ElementId> current(n);
    auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
      const GradedPoset& c = *components_[i];
      auto last = c.last_level();
      const std::size_t lo = i + 1 == n ? remaining : 0;
      for (std::size_t b = lo; b <= remaining; ++b) {
        if (last && b > *last) break;
        for (ElementId e = c.level_begin(b); e < c.level_end(b); ++e) {
          current[i] = e;
          if (i + 1 == n) tuples.push_back(current);
          else self(self, i + 1, remaining - b);
        }
      }
    };
    rec(rec, 0, level);
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<ElementSpec> out;
  for (const auto& t : tuples) {
    if (!admits(t)) continue;
    // Every componentwise-smaller admissible tuple, each born earlier and already keyed.
    std::vector<std::vector<ElementId>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
      choices[i] = components_[i]->below(t[i]);
      choices[i].push_back(t[i]);
    }
    std::vector<ElementId> below;
    std::vector<ElementId> lower(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        if (lower == t || !admits(lower)) return;
        auto id = find_key(key_of(lower));
        require(id.has_value(), ErrorKind::kInvariantFailure, "product: lower tuple missing");
        below.push_back(*id);
        return;
      }
      for (ElementId e : choices[i]) {
        lower[i] = e;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::sort(below.begin(), below.end());
    out.push_back({key_of(t), std::move(below), t});
  }
  return out;
}

}  // namespace procat::graded
