#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "procat/fincat/finite_category.hpp"
#include "procat/probar/fullness.hpp"

namespace procat::probar {

using fincat::FiniteCategory;

// A pro-bar object over C^D: one index A, components x(-, d) over A, and transitions
// x(a, e) : x(a, dom e) -> x(a, cod e) natural in a and functorial in e.
class ShapedObject {
 public:
  using Transition = std::function<FinSetMap(std::size_t morphism, ElementId a)>;

  ShapedObject(FiniteCategory shape, std::vector<ProBarObjectHandle> components, Transition transition);

  const FiniteCategory& shape() const noexcept { return shape_; }
  const GradedPosetHandle& index() const noexcept { return index_; }
  const ProBarObjectHandle& component(std::size_t object) const { return components_.at(object); }
  const std::vector<ProBarObjectHandle>& components() const noexcept { return components_; }
  // Identity morphisms give identity maps.
  FinSetMap transition(std::size_t morphism, ElementId a) const;

 private:
  FiniteCategory shape_;
  GradedPosetHandle index_;
  std::vector<ProBarObjectHandle> components_;
  Transition transition_;
};

using ShapedObjectHandle = std::shared_ptr<const ShapedObject>;

// Functoriality in the shape at each index element and naturality in the index, through depth.
std::vector<std::string> check_shaped(const ShapedObject& x, std::size_t depth);

// A D-shaped diagram in Pro-bar(C): objects and one 1-morphism per morphism of D.
struct ProBarFamily {
  FiniteCategory shape;
  std::vector<ProBarObjectHandle> objects;
  std::vector<OneMorphism> arrows;

  // Identity morphisms of the shape receive identity 1-morphisms.
  static ProBarFamily make(FiniteCategory shape, std::vector<ProBarObjectHandle> objects,
                           const std::function<OneMorphism(std::size_t morphism)>& arrow);
};

using ProBarFamilyHandle = std::shared_ptr<const ProBarFamily>;

// One 1-morphism per object of D, natural up to ProMorphism equality.
struct FamilyMorphism {
  ProBarFamilyHandle source;
  ProBarFamilyHandle target;
  std::vector<OneMorphism> components;
};

FamilyMorphism compose(const FamilyMorphism& second, const FamilyMorphism& first);

// A 1-morphism of Pro-bar(C^D): one index map and components natural in both variables.
struct ShapedMorphism {
  ShapedObjectHandle source;
  ShapedObjectHandle target;
  std::vector<OneMorphism> components;  // all sharing one index map
};

// Restriction to each object and each morphism of D.
ProBarFamilyHandle j_apply(const ShapedObjectHandle& x);
FamilyMorphism j_apply(const ShapedMorphism& f, const ProBarFamilyHandle& source, const ProBarFamilyHandle& target);

// The fullness step for j_D: squares of the family are dominated pairwise, a common strictly
// increasing index map dominates every component and square witness, and each component is
// reindexed along it. The family's ends must be j_apply of x and y. BudgetExhausted when a
// square has no domination witness in budget; InvariantFailure if naturality fails afterwards.
ShapedMorphism j_full_lift(const ShapedObjectHandle& x, const ShapedObjectHandle& y, const FamilyMorphism& f,
                           Truncation t);

// Pointwise limit over D, with arrows induced by the universal property.
ProBarObjectHandle levelwise_limit(const ShapedObjectHandle& x);

}  // namespace procat::probar
