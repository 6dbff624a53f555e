#pragma once

#include <functional>
#include <string>
#include <vector>

#include "procat/fincat/fin_set_map.hpp"
#include "procat/fincat/finite_category.hpp"

namespace procat::fincat {

// A functor from a finite shape into finite sets.
class Diagram {
 public:
  Diagram() = default;
  Diagram(FiniteCategory shape, std::vector<std::size_t> values, std::vector<FinSetMap> arrows);

  // Poset shapes: arrow(u, v) is required for every u >= v and must send value(u) to value(v).
  static Diagram over_poset(const FinitePoset& p, std::vector<std::size_t> values,
                            const std::function<FinSetMap(std::size_t, std::size_t)>& arrow);

  const FiniteCategory& shape() const noexcept { return shape_; }
  std::size_t value(std::size_t object) const { return values_.at(object); }
  const FinSetMap& arrow(std::size_t morphism) const { return arrows_.at(morphism); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  const std::vector<FinSetMap>& arrows() const noexcept { return arrows_; }

 private:
  FiniteCategory shape_;
  std::vector<std::size_t> values_;
  std::vector<FinSetMap> arrows_;
};

// Lists every failure of functoriality; empty when the diagram is a functor.
std::vector<std::string> check_functorial(const Diagram& d);

}  // namespace procat::fincat
