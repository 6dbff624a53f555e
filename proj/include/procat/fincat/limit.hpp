#pragma once

#include <optional>
#include <span>
#include <vector>

#include "procat/fincat/diagram.hpp"

namespace procat::fincat {

// Requires x[to] == map(x[from]) for a tuple x.
struct LimitConstraint {
  std::size_t from = 0;
  std::size_t to = 0;
  FinSetMap map;
};

// The compatible tuples of a finite diagram, in lexicographic order; the tuple index is the element.
class FiniteLimit {
 public:
  FiniteLimit() = default;
  FiniteLimit(std::vector<std::size_t> sizes, std::vector<std::vector<std::size_t>> tuples);

  std::size_t size() const noexcept { return tuples_.size(); }
  std::size_t arity() const noexcept { return sizes_.size(); }
  const std::vector<std::size_t>& tuple(std::size_t i) const { return tuples_.at(i); }
  const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
  FinSetMap projection(std::size_t component) const;
  std::optional<std::size_t> find(const std::vector<std::size_t>& tuple) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::size_t>> tuples_;
};

FiniteLimit limit_of(std::span<const std::size_t> sizes, std::span<const LimitConstraint> constraints);
FiniteLimit finset_limit(const Diagram& d);

// The unique map from the apex of a cone into the limit; throws InvalidArgument if the legs are not a cone.
FinSetMap induced_map(const FiniteLimit& limit, std::size_t apex, std::span<const FinSetMap> legs);

}  // namespace procat::fincat
