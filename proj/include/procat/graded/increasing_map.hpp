#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "procat/graded/graded_poset.hpp"

namespace procat::graded {

// A map of index posets, meant to be strictly increasing. Evaluation is memoized; a table-backed
// map raises BudgetExhausted outside its table.
class IncreasingMap {
 public:
  using Rule = std::function<ElementId(ElementId)>;

  IncreasingMap(GradedPosetHandle source, GradedPosetHandle target, Rule rule);
  static IncreasingMap identity(GradedPosetHandle p);
  static IncreasingMap from_table(GradedPosetHandle source, GradedPosetHandle target, std::vector<ElementId> table);

  ElementId operator()(ElementId b) const;
  const GradedPosetHandle& source() const noexcept { return source_; }
  const GradedPosetHandle& target() const noexcept { return target_; }
  bool is_identity() const noexcept { return identity_; }

 private:
  struct Memo;
  GradedPosetHandle source_;
  GradedPosetHandle target_;
  std::shared_ptr<Memo> memo_;
  bool identity_ = false;
};

// outer ∘ inner
IncreasingMap compose(const IncreasingMap& outer, const IncreasingMap& inner);

// Values on the source elements born at levels <= depth.
std::vector<ElementId> tabulate(const IncreasingMap& f, std::size_t depth);

bool equal_upto(const IncreasingMap& f, const IncreasingMap& g, std::size_t depth);
bool is_strictly_increasing(const IncreasingMap& f, std::size_t depth);
// hi(b) >= lo(b) for every source element born at level <= depth.
bool dominates(const IncreasingMap& hi, const IncreasingMap& lo, std::size_t depth);

// γ with γ(b) > every input at b and γ(b) > γ(b') for b' < b; each value is the first such element
// in canonical order. Defined on source levels <= t.depth, searching target levels <= t.search.
IncreasingMap dominate_increasing(const std::vector<IncreasingMap>& maps, Truncation t);
IncreasingMap dominate_increasing(const IncreasingMap& alpha, const IncreasingMap& beta, Truncation t);

// Truncated cofinality of a monotone map f : P -> Q of posets: for every q born at level <= t.depth,
// the elements p born at level <= t.search with f(p) >= q form a nonempty set connected by
// comparabilities. Returns one line per failure.
std::vector<std::string> truncated_cofinality(const IncreasingMap& f, Truncation t);

}  // namespace procat::graded
