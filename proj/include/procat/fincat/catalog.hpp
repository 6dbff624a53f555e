#pragma once

#include <string>
#include <vector>

#include "procat/fincat/finite_category.hpp"

namespace procat::fincat {

struct NamedCategory {
  std::string name;
  FiniteCategory category;
};

// Monoids of the given order as one-object categories, one per isomorphism class, in canonical order.
std::vector<NamedCategory> monoids(std::size_t order);

// Objects a, b with an idempotent e on a and arrows f, g : a -> b equalized by e (f∘e = g∘e = f).
FiniteCategory equalized_parallel_pair();
// Objects a, b with r : a -> b and a section s : b -> a (r∘s = id_b, s∘r = e).
FiniteCategory split_idempotent();

// Directed categories with at most three objects used by the A_I suites: the directed posets
// with at most three elements, the directed monoids of order at most three, and two
// two-object categories with non-trivial parallel pairs.
std::vector<NamedCategory> small_directed_catalog();

}  // namespace procat::fincat
