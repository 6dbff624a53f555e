#pragma once

#include <memory>
#include <string>
#include <vector>

#include "procat/fincat/factorization.hpp"

namespace procat::factor {

using fincat::FactorizationTriple;
using fincat::FinSetMap;
using fincat::FunctorialFactorization;

// A factorization of f up to isomorphism: p ∘ q ∘ source_iso = target_iso ∘ f, where
// q : X̄ -> L and p : L -> Ȳ, and source_iso : X -> X̄, target_iso : Y -> Ȳ are the i_f data.
struct PseudoFactorization {
  FinSetMap source_iso;
  FinSetMap target_iso;
  FinSetMap q;
  std::size_t mid = 0;
  FinSetMap p;
};

// A section of composition up to the natural isomorphism i. on_square sends a square (l, k) : f -> t
// to the middle map L_f -> L_t.
class PseudoFunctorialFactorization {
 public:
  virtual ~PseudoFunctorialFactorization() = default;
  virtual PseudoFactorization factor(const FinSetMap& f) const = 0;
  virtual FinSetMap on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                              const FinSetMap& k) const = 0;
  virtual std::string name() const = 0;
};

// X -(q ∘ i_0)-> L -(i_1^{-1} ∘ p)-> Y, with the square action of the pseudo factorization.
// factor raises NotInvertible when an i_f component is not a bijection.
class StrictifiedFactorization final : public FunctorialFactorization {
 public:
  explicit StrictifiedFactorization(std::shared_ptr<const PseudoFunctorialFactorization> pseudo);
  FactorizationTriple factor(const FinSetMap& f) const override;
  FinSetMap on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                      const FinSetMap& k) const override;
  std::string name() const override { return "strictified " + pseudo_->name(); }

 private:
  std::shared_ptr<const PseudoFunctorialFactorization> pseudo_;
};

std::unique_ptr<FunctorialFactorization> pseudo_to_functorial(std::shared_ptr<const PseudoFunctorialFactorization> pseudo);

// The defining identity p ∘ q ∘ i_0 = i_1 ∘ f and invertibility of the i_f components.
std::vector<std::string> pseudo_failures(const PseudoFactorization& d, const FinSetMap& f);

// The invariants of a functorial factorization on one square (l, k) : f -> t, so t ∘ l = k ∘ f:
// both factorizations compose back, L ∘ q_f = q_t ∘ l and p_t ∘ L = k ∘ p_f.
std::vector<std::string> square_action_failures(const FunctorialFactorization& ff, const FinSetMap& f,
                                                const FinSetMap& t, const FinSetMap& l, const FinSetMap& k);

// Identity squares go to identities and pasted squares to composites.
std::vector<std::string> identity_action_failures(const FunctorialFactorization& ff, const FinSetMap& f);
std::vector<std::string> composite_action_failures(const FunctorialFactorization& ff, const FinSetMap& f,
                                                   const FinSetMap& t, const FinSetMap& u, const FinSetMap& l1,
                                                   const FinSetMap& k1, const FinSetMap& l2, const FinSetMap& k2);

}  // namespace procat::factor
