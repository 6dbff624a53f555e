#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "procat/probar/object.hpp"

namespace procat::probar {

using graded::IncreasingMap;

// A pair (alpha, phi) : F -> G with alpha : B -> A strictly increasing and
// phi_b : F(alpha(b)) -> G(b) natural in b. Component maps are memoized.
class OneMorphism {
 public:
  using Components = std::function<FinSetMap(ElementId b)>;

  OneMorphism(ProBarObjectHandle source, ProBarObjectHandle target, IncreasingMap alpha, Components phi);

  static OneMorphism identity(ProBarObjectHandle x);
  // Same index on both sides, alpha the identity.
  static OneMorphism natural(ProBarObjectHandle source, ProBarObjectHandle target, Components phi);
  // Table-backed on target elements 0..size-1; BudgetExhausted outside the table.
  static OneMorphism from_tables(ProBarObjectHandle source, ProBarObjectHandle target,
                                 std::vector<ElementId> alpha, std::vector<FinSetMap> phi);

  const ProBarObjectHandle& source() const noexcept { return source_; }
  const ProBarObjectHandle& target() const noexcept { return target_; }
  const IncreasingMap& alpha() const noexcept { return alpha_; }
  FinSetMap phi(ElementId b) const;

 private:
  struct Memo;
  ProBarObjectHandle source_;
  ProBarObjectHandle target_;
  IncreasingMap alpha_;
  Components phi_;
  std::shared_ptr<Memo> memo_;
};

// (beta, psi) ∘ (alpha, phi) = (alpha ∘ beta, psi ∘ phi_beta).
OneMorphism compose(const OneMorphism& second, const OneMorphism& first);

// lo <= hi: alpha_hi >= alpha_lo and phi_hi(b) = phi_lo(b) ∘ F(alpha_hi(b) -> alpha_lo(b)),
// over target elements born at levels <= depth.
bool leq(const OneMorphism& lo, const OneMorphism& hi, std::size_t depth);

// f ∘ alpha': the unique 1-morphism above f with index map alpha'. Domination is checked
// eagerly through `depth` and lazily beyond; NotDominating on failure.
OneMorphism reindex(const OneMorphism& f, IncreasingMap alpha, std::size_t depth);

// Same alpha and same components over target elements born at levels <= depth.
bool equal_upto(const OneMorphism& f, const OneMorphism& g, std::size_t depth);

// Endpoint, strictness and naturality failures over target elements born at levels <= depth.
std::vector<std::string> check_natural(const OneMorphism& f, std::size_t depth);

// The connected component of a 1-morphism in its hom-poset. Equality needs a domination
// witness and is decided by dominate_pair.
struct ProMorphism {
  OneMorphism representative;
};

}  // namespace procat::probar
