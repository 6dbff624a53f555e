#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace procat::fincat {

// Finite partial order on {0..n-1}. Stored as a dense reflexive-transitive relation.
class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::size_t n);  // antichain

  // Each pair (u, v) asserts u < v. The transitive closure is taken; a cycle throws InvalidArgument.
  FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n) { return FinitePoset(n); }

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t u, std::size_t v) const { return leq_[u * n_ + v]; }
  bool less(std::size_t u, std::size_t v) const { return u != v && leq(u, v); }

  std::vector<std::size_t> strictly_below(std::size_t v) const;
  std::vector<std::size_t> strictly_above(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;  // (lower, upper)

  std::size_t degree(std::size_t v) const;
  // The section A^n = {a : degree(a) <= n}; n = -1 gives the empty set.
  std::vector<std::size_t> degree_section(long n) const;
  // Elements sorted by (degree, index): a linear extension used by every recursion.
  std::vector<std::size_t> degree_order() const;

  bool is_section(const std::vector<std::size_t>& subset) const;
  // All down-closed subsets, each sorted, listed lexicographically.
  std::vector<std::vector<std::size_t>> sections() const;

  // Adjoins a fresh element at index size() that lies above every element.
  FinitePoset cone_extend() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> leq_;
};

}  // namespace procat::fincat
