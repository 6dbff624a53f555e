#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "procat/graded/product.hpp"
#include "procat/probar/inverse_equivalence.hpp"
#include "procat/probar/shaped.hpp"

namespace procat::probar {

// Shape objects listed so that every non-identity morphism runs from a later to an earlier
// position; sinks are taken first, smallest index first. ShapeNotStronglyLoopless on a
// non-identity endomorphism or a cycle.
std::vector<std::size_t> loopless_order(const FiniteCategory& d);

// The rectification of a family F: the subposet of the product of the indices with
// a_dom >= alpha_e(a_cod) for every non-identity e, and X_F(a, d) = F(d)(a_d) with transitions
// phi_e(a_cod) ∘ F(dom)(a_dom -> alpha_e(a_cod)). X_F is functorial in D only when the family
// composes strictly on representatives.
struct Rectification {
  std::vector<std::size_t> order;
  std::shared_ptr<const graded::ProductPoset> index;
  std::vector<IncreasingMap> projections;  // per shape object
  ShapedObjectHandle object;
};

Rectification tilde_a(const ProBarFamily& f);

// The classic isomorphism F(d) -> X_F(-, d) with germ (a_d, id) at a, and its inverse with germ
// (t, F(d)(t_d -> a)) at a, where t is the first tuple with t_d >= a born at levels <= search.
ClassicMorphism rectification_nu(const ProBarFamily& f, const Rectification& r, std::size_t object);
ClassicMorphism rectification_nu_inverse(const ProBarFamily& f, const Rectification& r, std::size_t object,
                                         std::size_t search);

// Their lifts to 1-morphisms, componentwise: F -> j(X_F) and back.
FamilyMorphism rectification_iso(const ProBarFamilyHandle& f, const Rectification& r,
                                 const ProBarFamilyHandle& jx, Truncation t);
FamilyMorphism rectification_iso_inverse(const ProBarFamilyHandle& f, const Rectification& r,
                                         const ProBarFamilyHandle& jx, Truncation t);

// h_D: the inverse equivalence of j_D built from tilde_a and the rectification isomorphisms.
// `iso` truncates the isomorphism lifts and should reach past the index values that `lift`
// visits; `lift` truncates j_full_lift.
class HFunctor {
 public:
  HFunctor(Truncation iso, Truncation lift);

  ShapedObjectHandle on_object(const ProBarFamilyHandle& f) const;
  ProBarFamilyHandle j_of(const ProBarFamilyHandle& f) const;
  const Rectification& rectification(const ProBarFamilyHandle& f) const;
  FamilyMorphism iso(const ProBarFamilyHandle& f) const;
  FamilyMorphism iso_inverse(const ProBarFamilyHandle& f) const;
  // PreimageNotFound when j_full_lift runs out of budget.
  ShapedMorphism on_morphism(const FamilyMorphism& f) const;

 private:
  struct Entry {
    Rectification rect;
    ProBarFamilyHandle jx;
    std::optional<FamilyMorphism> iso;
    std::optional<FamilyMorphism> iso_inverse;
  };
  Entry& entry(const ProBarFamilyHandle& f) const;

  Truncation iso_;
  Truncation lift_;
  InverseEquivalence<ProBarFamilyHandle, FamilyMorphism, ShapedObjectHandle, ShapedMorphism> g_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<const ProBarFamily*, Entry> cache_;
};

}  // namespace procat::probar
