#pragma once

#include <optional>
#include <string>

#include "procat/probar/classic.hpp"

namespace procat::probar {

using graded::Truncation;

// A 1-morphism representing d. Target elements are handled in id order through levels <= t.depth;
// at b the representative (a_0, h_0) is refined along every b' < b until it equalizes against the
// already chosen (alpha(b'), phi_b'), and alpha(b) is then the first element strictly above the
// last refinement. Searches visit source levels <= t.search and stop at the first hit.
// BudgetExhausted when a search fails; PreconditionViolated when eventual constancy proves d
// incompatible.
OneMorphism lift_pro_to_bar(const ClassicMorphism& d, Truncation t);

struct EqualityVerdict {
  Verdict verdict = Verdict::kUnknown;  // kEqual or kUnknown
  std::optional<OneMorphism> witness;   // above both inputs, when Equal
  std::string reason;
};

// Searches for a 1-morphism dominating both f and g: at b, the first element equalizing the two
// components, then the first element above it and strictly above the values at every b' < b.
// The index map is defined on target levels <= t.depth and the witness is verified with leq over
// the same range.
EqualityVerdict dominate_pair(const OneMorphism& f, const OneMorphism& g, Truncation t);

inline EqualityVerdict pro_equal(const ProMorphism& f, const ProMorphism& g, Truncation t) {
  return dominate_pair(f.representative, g.representative, t);
}

}  // namespace procat::probar
