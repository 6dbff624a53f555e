#pragma once

#include <string>
#include <vector>

#include "procat/factor/special.hpp"
#include "procat/fincat/factorization.hpp"

namespace procat::factor {

using fincat::FactorizationTriple;
using fincat::FunctorialFactorization;
using graded::Truncation;
using probar::ProBarObjectHandle;

// The factorization of the comparison C(c) -> P(c) at one element; P(c) is the matching object of
// h over the part of H built below c.
struct ReedyStep {
  ElementId element = 0;
  MatchingObject matching;
  FinSetMap comparison;
  FactorizationTriple triple;
};

// f = sp_part ∘ lw_part through `middle`, all table-backed on elements born at levels <= depth.
struct ReedyFactorization {
  OneMorphism input;
  ProBarObjectHandle middle;
  OneMorphism lw_part;
  OneMorphism sp_part;
  std::size_t depth = 0;
  std::vector<ReedyStep> steps;  // indexed by element id
};

// Recursion in id order, which refines degree order: H(c) = L of ff applied to
// C(c) -> D(c) ×_{lim_{s<c} D} lim_{s<c} H, with H(c -> s) the projection after p.
// Deterministic given ff. Components beyond the truncation raise BudgetExhausted.
ReedyFactorization reedy_factorize(const OneMorphism& f, const FunctorialFactorization& ff, Truncation t);

// Composite, naturality, functoriality of the middle, lw_part levelwise in `levelwise` and sp_part
// special in `special`, over the factorization's depth.
std::vector<std::string> check_reedy(const ReedyFactorization& r, const MorphismPredicate& levelwise,
                                     const MorphismPredicate& special);

}  // namespace procat::factor
