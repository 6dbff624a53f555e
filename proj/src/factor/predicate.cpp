#include "procat/factor/predicate.hpp"

namespace procat::factor {

MorphismPredicate MorphismPredicate::injective() {
  return {"injective", [](const FinSetMap& f) { return f.is_injective(); }};
}

MorphismPredicate MorphismPredicate::surjective() {
  return {"surjective", [](const FinSetMap& f) { return f.is_surjective(); }};
}

MorphismPredicate MorphismPredicate::isomorphism() {
  return {"isomorphism", [](const FinSetMap& f) { return f.is_bijective(); }};
}

}  // namespace procat::factor
