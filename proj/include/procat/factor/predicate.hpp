#pragma once

#include <functional>
#include <string>

#include "procat/fincat/fin_set_map.hpp"

namespace procat::factor {

using fincat::FinSetMap;

// A decidable class of base morphisms. decide must be pure.
struct MorphismPredicate {
  std::string name;
  std::function<bool(const FinSetMap&)> decide;

  bool operator()(const FinSetMap& f) const { return decide(f); }

  static MorphismPredicate injective();
  static MorphismPredicate surjective();
  static MorphismPredicate isomorphism();
};

}  // namespace procat::factor
