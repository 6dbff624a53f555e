#pragma once

#include <optional>
#include <string>
#include <vector>

#include "procat/fincat/finite_category.hpp"
#include "procat/graded/graded_poset.hpp"

namespace procat::graded {

// A prospective element of A_I: a section R, the image o of the cone point and one leg
// o -> p(r) per r in R (aligned with the sorted section).
struct ConeElement {
  std::size_t level = 0;
  std::vector<ElementId> section;
  std::size_t vertex = 0;
  std::vector<std::size_t> legs;
};

// The cofinite directed poset A_I of infinite height with its projection p_I : A_I -> I.
// Level 0 is Ob(I); level n+1 holds every (R, extension of p_I|R to the cone on R) with R a
// section of levels <= n, so equal pairs born at different levels are distinct elements.
// Extensions are ordered by vertex index, then legs lexicographically by morphism index.
class AIndexPoset final : public GradedPoset {
 public:
  // Throws NotDirected unless `category` satisfies all three axioms.
  explicit AIndexPoset(fincat::FiniteCategory category);

  std::string name() const override { return "A_I"; }
  bool declared_infinite_height() const override { return true; }

  const fincat::FiniteCategory& category() const noexcept { return category_; }
  // p_I on objects.
  std::size_t object_of(ElementId e) const;
  // p_I on the arrow upper -> lower (identity when equal); requires lower <= upper.
  std::size_t arrow_of(ElementId upper, ElementId lower) const;
  // Legs of the cone at e, aligned with below(e).
  std::vector<std::size_t> legs(ElementId e) const;
  ElementId base_element(std::size_t object) const { return object; }

  // Empty iff `c` is a valid element born at c.level: R a section born below c.level, legs in
  // the right hom-sets, and the cone condition arrow_of(r, r') ∘ leg_r = leg_r' for r' < r in R.
  std::vector<std::string> check_candidate(const ConeElement& c) const;
  std::string key_of(const ConeElement& c) const;
  // Looks the candidate up, materializing its level.
  std::optional<ElementId> find(const ConeElement& c) const;

 protected:
  std::vector<ElementSpec> generate_level(std::size_t level) const override;

 private:
  // All extensions of p_I|R, canonically ordered.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> extensions(const std::vector<ElementId>& section) const;

  fincat::FiniteCategory category_;
};

// Truncated forms of "A_I is cofinite, directed, of infinite height" and "p_I is cofinal" at a
// given depth. Upper bounds for sections of levels <= depth-1 are checked exhaustively when the
// section count is within `exhaustive_limit` (materializing level `depth`); otherwise a universal
// cone (u, l) over I certifies that (R, u, l∘p) is a valid level-`depth` element for every section
// R, and the certificate is instantiated on the principal sections and on the whole truncation.
// Sections of levels <= depth-2 are always checked exhaustively against level depth-1.
struct AIndexReport {
  std::size_t depth = 0;
  std::vector<std::size_t> level_sizes;
  std::vector<std::string> cofinite_violations;
  bool upper_bounds_exhaustive = false;
  std::size_t sections_checked = 0;
  std::size_t certificate_instances = 0;
  std::size_t over_category_objects = 0;
  std::size_t cofinality_witnesses = 0;
  std::size_t max_witness_level = 0;
  std::vector<std::string> failures;
  bool ok() const { return cofinite_violations.empty() && failures.empty(); }
};

AIndexReport check_a_index(const AIndexPoset& a, std::size_t depth, std::size_t exhaustive_limit = 4096);

}  // namespace procat::graded
