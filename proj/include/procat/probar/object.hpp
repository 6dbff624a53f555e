#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "procat/fincat/fin_set_map.hpp"
#include "procat/graded/graded_poset.hpp"
#include "procat/graded/increasing_map.hpp"

namespace procat::probar {

using fincat::FinSetMap;
using graded::ElementId;
using graded::GradedPosetHandle;

class ProBarObject;
using ProBarObjectHandle = std::shared_ptr<const ProBarObject>;

// A diagram X : A -> FinSet over a graded index poset, with X(u -> v) for u >= v.
// With constant_above = k, every arrow u -> v with birth(v) >= k is an identity, which makes
// germ comparisons into X decidable.
class ProBarObject {
 public:
  using ValueFn = std::function<std::size_t(ElementId)>;
  using ArrowFn = std::function<FinSetMap(ElementId upper, ElementId lower)>;

  ProBarObject(GradedPosetHandle index, ValueFn value, ArrowFn arrow, std::optional<std::size_t> constant_above = {});

  static ProBarObjectHandle constant(GradedPosetHandle index, std::size_t size);
  // Over the standard chain: values[n] at n, steps[n] : values[n+1] -> values[n]; constant from
  // the last listed value on.
  static ProBarObjectHandle chain(std::vector<std::size_t> values, std::vector<FinSetMap> steps);
  // Elements 0..values.size()-1 with arrows[{upper, lower}] for every strict pair among them;
  // BudgetExhausted outside the table.
  static ProBarObjectHandle tabulated(GradedPosetHandle index, std::vector<std::size_t> values,
                                      std::map<std::pair<ElementId, ElementId>, FinSetMap> arrows);
  // along^* x for a monotone map along : B -> A.
  static ProBarObjectHandle pullback(ProBarObjectHandle x, graded::IncreasingMap along,
                                     std::optional<std::size_t> constant_above = {});

  const GradedPosetHandle& index() const noexcept { return index_; }
  std::size_t value(ElementId a) const;
  // Identity when upper == lower; InvalidArgument unless lower <= upper.
  FinSetMap arrow(ElementId upper, ElementId lower) const;
  std::optional<std::size_t> constant_above() const noexcept { return constant_above_; }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<ElementId, std::size_t> values;
    std::map<std::pair<ElementId, ElementId>, FinSetMap> arrows;
  };
  GradedPosetHandle index_;
  ValueFn value_;
  ArrowFn arrow_;
  std::optional<std::size_t> constant_above_;
  std::unique_ptr<Memo> memo_;
};

// Functoriality and endpoint checks over elements born at levels <= depth.
std::vector<std::string> check_functorial(const ProBarObject& x, std::size_t depth);
// The eventual-constancy promise over elements born at levels <= depth.
std::vector<std::string> check_constant_above(const ProBarObject& x, std::size_t depth);

}  // namespace procat::probar
