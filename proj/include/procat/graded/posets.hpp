#pragma once

#include "procat/fincat/finite_poset.hpp"
#include "procat/graded/graded_poset.hpp"

namespace procat::graded {

// 0 < 1 < 2 < ... with element n born at level n.
class ChainPoset final : public GradedPoset {
 public:
  std::string name() const override { return "chain"; }
  bool declared_infinite_height() const override { return true; }

 protected:
  std::vector<ElementSpec> generate_level(std::size_t level) const override;
};

// The shared standard chain; all chain-indexed objects in the library use this handle.
const std::shared_ptr<const ChainPoset>& standard_chain();

// A finite poset graded by degree. Ids follow (degree, index) order.
class FinitePosetIndex final : public GradedPoset {
 public:
  explicit FinitePosetIndex(fincat::FinitePoset poset);
  std::string name() const override { return "finite-poset"; }
  bool declared_infinite_height() const override { return false; }
  std::optional<std::size_t> last_level() const override { return last_; }

  const fincat::FinitePoset& poset() const noexcept { return poset_; }
  ElementId id_of(std::size_t poset_element) const { return id_of_.at(poset_element); }
  std::size_t poset_element(ElementId id) const { return element_of_.at(id); }

 protected:
  std::vector<ElementSpec> generate_level(std::size_t level) const override;

 private:
  fincat::FinitePoset poset_;
  std::vector<std::size_t> degree_;
  std::vector<ElementId> id_of_;
  std::vector<std::size_t> element_of_;
  std::optional<std::size_t> last_;
};

}  // namespace procat::graded
