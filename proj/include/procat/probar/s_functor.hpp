#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "procat/graded/a_index.hpp"
#include "procat/probar/fullness.hpp"
#include "procat/probar/inverse_equivalence.hpp"

namespace procat::probar {

// The inverse equivalence of i: a category-indexed X goes to X ∘ p_I over A_I, a pro-bar object
// to itself; morphisms are lifted through lift_pro_to_bar at the given truncation.
class SFunctor {
 public:
  explicit SFunctor(Truncation t);

  // Images are cached, so repeated calls return the same handle.
  ProBarObjectHandle on_object(const ClassicObjectHandle& x) const;
  // nu : X -> i(s(X)) with germ (p_I(e), id) at e, and its inverse with germ (i, id) at i.
  ClassicMorphism nu(const ClassicObjectHandle& x) const;
  ClassicMorphism nu_inverse(const ClassicObjectHandle& x) const;
  // PreimageNotFound when the lift runs out of budget.
  OneMorphism on_morphism(const ClassicMorphism& d) const;

  // The A_I index of a category-indexed object; InvalidArgument for pro-bar objects.
  std::shared_ptr<const graded::AIndexPoset> a_index(const ClassicObjectHandle& x) const;

 private:
  struct Image {
    std::shared_ptr<const graded::AIndexPoset> index;
    ProBarObjectHandle object;
  };
  const Image& image(const ClassicObjectHandle& x) const;

  Truncation t_;
  InverseEquivalence<ClassicObjectHandle, ClassicMorphism, ProBarObjectHandle, OneMorphism> g_;
  mutable std::mutex mutex_;
  mutable std::map<const void*, Image> cache_;
};

}  // namespace procat::probar
