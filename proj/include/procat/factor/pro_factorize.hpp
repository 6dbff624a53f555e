#pragma once

#include <optional>

#include "procat/factor/reedy.hpp"
#include "procat/probar/rectify.hpp"

namespace procat::factor {

// A factorization of a 1-morphism g : F -> G. When g is not natural over one index, the 0 -> 1
// family of g is rectified first and the Reedy construction runs over the rectified index.
struct ProFactorization {
  OneMorphism input;
  std::optional<probar::Rectification> rectification;  // empty when g was already natural
  ReedyFactorization reedy;
  // sp ∘ lw carried back to F -> G by the rectification isomorphisms (g's own parts if natural).
  OneMorphism composite;
  probar::EqualityVerdict certificate;  // composite against g
  bool lw_levelwise = false;
  bool sp_special = false;
};

// t.depth bounds G's index for the certificate and t.search every existence search. The Reedy
// construction over the rectified index runs as deep as the inverse isomorphism reaches from there.
// BudgetExhausted when a search runs out.
ProFactorization pro_factorize(const OneMorphism& g, const FunctorialFactorization& ff, Truncation t,
                               const MorphismPredicate& levelwise = MorphismPredicate::injective(),
                               const MorphismPredicate& special = MorphismPredicate::surjective());

}  // namespace procat::factor
