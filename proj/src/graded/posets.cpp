#include "procat/graded/posets.hpp"

#include <algorithm>

namespace procat::graded {

std::vector<ElementSpec> ChainPoset::generate_level(std::size_t level) const {
  std::vector<ElementId> below(level);
  for (std::size_t i = 0; i < level; ++i) below[i] = i;
  return {ElementSpec{std::to_string(level), std::move(below), {}}};
}

const std::shared_ptr<const ChainPoset>& standard_chain() {
  static const std::shared_ptr<const ChainPoset> chain = std::make_shared<ChainPoset>();
  return chain;
}

FinitePosetIndex::FinitePosetIndex(fincat::FinitePoset poset) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  degree_.resize(n);
  for (std::size_t v = 0; v < n; ++v) degree_[v] = poset_.degree(v);
  element_of_ = poset_.degree_order();
  id_of_.resize(n);
  for (std::size_t id = 0; id < n; ++id) id_of_[element_of_[id]] = id;
  if (n > 0) last_ = *std::max_element(degree_.begin(), degree_.end());
  else last_ = 0;
}

std::vector<ElementSpec> FinitePosetIndex::generate_level(std::size_t level) const {
  std::vector<ElementSpec> out;
  for (std::size_t id = 0; id < element_of_.size(); ++id) {
    std::size_t v = element_of_[id];
    if (degree_[v] != level) continue;
    std::vector<ElementId> below;
    for (std::size_t u : poset_.strictly_below(v)) below.push_back(id_of_[u]);
    std::sort(below.begin(), below.end());
    out.push_back({std::to_string(v), std::move(below), {v}});
  }
  return out;
}

}  // namespace procat::graded
