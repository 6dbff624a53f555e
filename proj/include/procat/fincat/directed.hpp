#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "procat/fincat/finite_category.hpp"

namespace procat::fincat {

// The three axioms of a directed category, reported separately.
struct DirectednessVerdict {
  bool nonempty = false;
  bool pairs_have_cones = false;        // every s, t admit u -> s, u -> t
  bool parallel_pairs_equalized = false;  // every f, g : s -> t admit h with f∘h = g∘h
  std::optional<std::pair<std::size_t, std::size_t>> unbounded_pair;      // objects
  std::optional<std::pair<std::size_t, std::size_t>> unequalized_pair;    // morphisms
  bool directed() const { return nonempty && pairs_have_cones && parallel_pairs_equalized; }
};

DirectednessVerdict is_directed(const FiniteCategory& c);

// Poset version; the pair axiom is decided by the finite-section criterion (every section has an upper bound).
DirectednessVerdict is_directed(const FinitePoset& p);
std::optional<std::vector<std::size_t>> unbounded_section(const FinitePoset& p);

// A vertex and compatible legs over the whole of c: m ∘ leg[dom m] = leg[cod m] for every morphism m.
struct UniversalCone {
  std::size_t vertex = 0;
  std::vector<std::size_t> legs;
};

// First universal cone in canonical order (vertex index, then legs lexicographically), if any.
std::optional<UniversalCone> find_universal_cone(const FiniteCategory& c);

}  // namespace procat::fincat
