#pragma once

#include <string>

#include "procat/fincat/fin_set_map.hpp"

namespace procat::fincat {

// f = p ∘ q through a middle set of size mid.
struct FactorizationTriple {
  FinSetMap source;
  FinSetMap q;
  std::size_t mid = 0;
  FinSetMap p;
};

// A section of the composition functor: f ↦ (q_f, L_f, p_f), and squares (l, k) : f -> t
// (meaning t∘l = k∘f) ↦ L_(l,k) : L_f -> L_t.
class FunctorialFactorization {
 public:
  virtual ~FunctorialFactorization() = default;
  virtual FactorizationTriple factor(const FinSetMap& f) const = 0;
  virtual FinSetMap on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                              const FinSetMap& k) const = 0;
  virtual std::string name() const = 0;
};

// L_f = dom f + cod f, q_f the first inclusion, p_f = [f, id]; on squares, l + k.
class GraphFactorization final : public FunctorialFactorization {
 public:
  FactorizationTriple factor(const FinSetMap& f) const override;
  FinSetMap on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                      const FinSetMap& k) const override;
  std::string name() const override { return "graph"; }
};

FactorizationTriple graph_factorization(const FinSetMap& f);

//   A --top--> X
//   |          |
// left       right
//   v          v
//   B --bot--> Y
struct LiftingSquare {
  FinSetMap left;
  FinSetMap right;
  FinSetMap top;
  FinSetMap bottom;
};

bool commutes(const LiftingSquare& sq);
// Both triangles: lift ∘ left = top and right ∘ lift = bottom.
bool solves(const LiftingSquare& sq, const FinSetMap& lift);

// Solver for injective left leg against surjective right leg. On the image of the left leg the
// lift is forced by top; elsewhere it is the least preimage of the bottom value.
FinSetMap finset_lift(const LiftingSquare& sq);

}  // namespace procat::fincat
