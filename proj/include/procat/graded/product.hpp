#pragma once

#include <functional>
#include <span>
#include <vector>

#include "procat/graded/graded_poset.hpp"

namespace procat::graded {

// A subposet of the product of graded posets, cut out by a pure predicate on tuples.
// A tuple is born at the sum of its component birth levels, so a strictly smaller tuple is
// always born strictly earlier.
class ProductPoset final : public GradedPoset {
 public:
  using Constraint = std::function<bool(std::span<const ElementId>)>;

  explicit ProductPoset(std::vector<GradedPosetHandle> components, Constraint constraint = {});

  std::string name() const override { return "product"; }
  bool declared_infinite_height() const override;
  std::optional<std::size_t> last_level() const override;

  std::size_t arity() const noexcept { return components_.size(); }
  const GradedPosetHandle& component(std::size_t i) const { return components_.at(i); }
  const std::vector<std::size_t>& tuple(ElementId e) const { return element(e).payload; }
  bool admits(std::span<const ElementId> t) const { return !constraint_ || constraint_(t); }
  // Looks up an admissible tuple, materializing the level it is born at.
  std::optional<ElementId> find(std::span<const ElementId> t) const;
  std::size_t birth_of(std::span<const ElementId> t) const;

 protected:
  std::vector<ElementSpec> generate_level(std::size_t level) const override;

 private:
  static std::string key_of(std::span<const ElementId> t);

  std::vector<GradedPosetHandle> components_;
  Constraint constraint_;
};

}  // namespace procat::graded
