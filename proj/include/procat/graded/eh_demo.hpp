#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "procat/fincat/directed.hpp"
#include "procat/fincat/finite_category.hpp"

namespace procat::graded {

// A finite thin diagram into I: objects are labels drawn from {0..n-1}, `greater` lists the
// relations u > v (arrows u -> v), `top` is the strongly initial object.
struct ThinDiagram {
  std::vector<std::size_t> labels;                          // sorted
  std::vector<std::pair<std::size_t, std::size_t>> greater;  // (u, v) with u > v, sorted, transitively closed
  std::size_t top = 0;
  std::vector<std::size_t> objects;                          // F on labels, aligned with `labels`
  std::vector<std::size_t> arrows;                           // F on relations, aligned with `greater`
};

std::string describe(const ThinDiagram& d, const fincat::FiniteCategory& i);

// d <= e: objects and relations of d are among those of e, and e restricts to d there.
bool is_subdiagram(const ThinDiagram& d, const ThinDiagram& e);

struct EhReport {
  fincat::DirectednessVerdict category;  // verdict for I itself
  std::size_t max_size = 0;
  std::size_t diagrams = 0;
  bool truncation_nonempty = false;
  bool truncation_directed = false;  // every pair has an upper bound inside the truncation
  std::size_t unbounded_pairs = 0;
  // Unbounded pairs whose label sets meet: the disjoint-union bound of the original argument is unavailable.
  std::size_t overlapping_unbounded_pairs = 0;
  std::optional<std::pair<std::string, std::string>> first_unbounded;
  // I has bounds for pairs but not equalizers: the configuration the original argument misses.
  bool counterexample_condition() const { return category.nonempty && category.pairs_have_cones && !category.parallel_pairs_equalized; }
};

// All thin diagrams with a strongly initial object and at most n labelled objects, ordered by
// sub-diagram inclusion, with the upper-bound search run exhaustively inside the truncation.
EhReport eh_m_construction(const fincat::FiniteCategory& i, std::size_t n);
std::vector<ThinDiagram> thin_diagrams(const fincat::FiniteCategory& i, std::size_t n);

std::string to_text(const EhReport& r);

}  // namespace procat::graded
