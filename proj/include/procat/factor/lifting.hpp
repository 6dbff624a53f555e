#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "procat/factor/special.hpp"
#include "procat/fincat/factorization.hpp"
#include "procat/probar/classic.hpp"

namespace procat::factor {

using fincat::FunctorialFactorization;
using fincat::LiftingSquare;

// A square of natural maps over one index:
//   X --top--> E
//   |          |
// left       right
//   v          v
//   Y --bot--> B
struct NaturalSquare {
  OneMorphism left;
  OneMorphism right;
  OneMorphism top;
  OneMorphism bottom;
};

// Endpoint and commutation failures at elements born at levels <= depth.
std::vector<std::string> square_failures(const NaturalSquare& sq, std::size_t depth);

// The square with constant left leg A -> B over the index of `right`, and the given families
// A -> E(t) and B -> B(t).
NaturalSquare constant_left_square(const FinSetMap& left, const OneMorphism& right,
                                   std::function<FinSetMap(ElementId)> top,
                                   std::function<FinSetMap(ElementId)> bottom);

// Induction in id order: at t, finset_lift of left(t) against the matching map of `right`, with
// bottom y ↦ (bottom(t)(y), lift(s)(Y(t -> s)(y)))_s. The result Y -> E is table-backed through
// depth. PreconditionViolated if the square does not commute, the left leg is not levelwise
// injective or the right leg is not special surjective.
OneMorphism lift_against_special(const NaturalSquare& sq, std::size_t depth);

// Both triangles at every element and naturality of the lift, through depth.
std::vector<std::string> lift_failures(const NaturalSquare& sq, const OneMorphism& lift, std::size_t depth);

// nullopt means the square has no lift the solver can produce.
using LiftSolver = std::function<std::optional<FinSetMap>(const LiftingSquare&)>;

// finset_lift for injective left legs; nullopt when the right leg is not surjective, since then a
// square from the empty set can have no lift.
std::optional<FinSetMap> finset_solver(const LiftingSquare& sq);

// retract : X -> Y as a retract of of : X' -> Y':
//   X --source_in--> X' --source_out--> X
//   |                |                  |
//   v                v                  v
//   Y --target_in--> Y' --target_out--> Y
struct RetractDiagram {
  FinSetMap retract;
  FinSetMap of;
  FinSetMap source_in;
  FinSetMap source_out;
  FinSetMap target_in;
  FinSetMap target_out;
};

// Both rows compose to identities and both squares commute.
std::vector<std::string> retract_failures(const RetractDiagram& r);

// h as a retract of p_h: with (q_h, p_h) = ff(h), the square (q_h, h, id, p_h) is lifted to k,
// giving rows X -q_h-> L -k-> X over Y = Y = Y. PreconditionViolated if q_h is not injective;
// NoLift if the solver finds no k.
RetractDiagram retract_extract(const FinSetMap& h, const FunctorialFactorization& ff,
                               const LiftSolver& solver = finset_solver);

// A lift of sq, whose right leg is r.retract, obtained by lifting the transported square against
// r.of and composing with source_out. NoLift if the solver fails on the transported square.
FinSetMap transport_lift(const RetractDiagram& r, const LiftingSquare& sq, const LiftSolver& solver = finset_solver);

// A retract diagram of natural maps over one index.
struct NaturalRetract {
  OneMorphism retract;
  OneMorphism of;
  OneMorphism source_in;
  OneMorphism source_out;
  OneMorphism target_in;
  OneMorphism target_out;
};

// retract_failures at each element plus naturality of the structure maps, through depth.
std::vector<std::string> retract_failures(const NaturalRetract& r, std::size_t depth);

// A square in the pro-category whose left leg is a natural map X -> Y over T and whose right leg
// is a base map p : E -> F; top and bottom are germs X(node) -> E and Y(node) -> F.
struct GermSquare {
  OneMorphism left;
  FinSetMap right;
  probar::Germ top;
  probar::Germ bottom;
};

// A germ Y(level) -> E.
struct LevelLift {
  ElementId level = 0;
  FinSetMap lift;
};

// The square restricted to level t: left(t), and the germs moved to t along X and Y.
LiftingSquare square_at(const GermSquare& sq, ElementId t);

// Scans elements above both germ nodes, born at levels <= search, in id order for the first level
// where the square commutes, then lifts there with finset_lift. With `level` given only that level
// is tried. NoFactoringLevel if none commutes; PreconditionViolated if the level's left component
// is not injective or right is not surjective.
LevelLift lift_lw_vs_sp(const GermSquare& sq, std::size_t search, std::optional<ElementId> level = {});

// The two triangles at the lift's level.
bool solves(const GermSquare& sq, const LevelLift& lift);

}  // namespace procat::factor
