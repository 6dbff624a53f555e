#pragma once

#include <functional>
#include <vector>

#include "procat/factor/predicate.hpp"
#include "procat/fincat/limit.hpp"
#include "procat/probar/one_morphism.hpp"

namespace procat::factor {

using graded::ElementId;
using graded::GradedPoset;
using probar::OneMorphism;

// The data of a natural map h : H -> D that a matching object reads below an element.
struct NaturalView {
  std::function<std::size_t(ElementId)> source_value;
  std::function<std::size_t(ElementId)> target_value;
  std::function<FinSetMap(ElementId upper, ElementId lower)> source_arrow;
  std::function<FinSetMap(ElementId upper, ElementId lower)> target_arrow;
  std::function<FinSetMap(ElementId)> component;

  // InvalidArgument unless f is natural over a single index.
  static NaturalView of(const OneMorphism& f);
};

// D(t) ×_{lim_{s<t} D} lim_{s<t} H. Slots: D(t) first, then H(s) for the strict down-set in
// decreasing id order, then D(s) in the same order. Only D and h need to be known at t; H only
// below t.
class MatchingObject {
 public:
  MatchingObject(const GradedPoset& index, ElementId t, const NaturalView& view);

  ElementId element() const noexcept { return element_; }
  // The strict down-set in decreasing id order.
  const std::vector<ElementId>& down() const noexcept { return down_; }
  const fincat::FiniteLimit& limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return limit_.size(); }

  std::size_t target_slot() const noexcept { return 0; }
  std::size_t source_slot(ElementId s) const;
  std::size_t target_slot(ElementId s) const;
  FinSetMap project_target() const { return limit_.projection(0); }
  FinSetMap project_source(ElementId s) const { return limit_.projection(source_slot(s)); }

  // The map from an apex with a leg to D(t) and legs to each H(s); the legs to D(s) are derived.
  // InvalidArgument if the legs are not a cone.
  FinSetMap comparison(std::size_t apex, const FinSetMap& to_target,
                       const std::function<FinSetMap(ElementId s)>& to_source) const;

 private:
  ElementId element_;
  std::vector<ElementId> down_;
  std::vector<FinSetMap> target_legs_;  // D(t -> s), aligned with down_
  fincat::FiniteLimit limit_;
};

// A natural map given by its components on elements 0..components.size()-1; BudgetExhausted beyond.
OneMorphism natural_from_table(probar::ProBarObjectHandle source, probar::ProBarObjectHandle target,
                               std::vector<FinSetMap> components);

// X_t -> Y_t ×_{lim Y} lim X for a natural f : X -> Y.
FinSetMap matching_map(const OneMorphism& f, ElementId t);

// P at every component born at levels <= depth.
bool is_levelwise(const OneMorphism& f, const MorphismPredicate& p, std::size_t depth);
// P at every matching map at elements born at levels <= depth.
bool is_special(const OneMorphism& f, const MorphismPredicate& p, std::size_t depth);

// The elements of the strict down-set of t that t covers.
std::vector<ElementId> covers(const GradedPoset& index, ElementId t);

}  // namespace procat::factor
