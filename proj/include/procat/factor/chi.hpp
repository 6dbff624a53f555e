#pragma once

#include <string>
#include <vector>

#include "procat/factor/reedy.hpp"

namespace procat::factor {

// A morphism from an arrow f : X -> Y over A to an arrow t : S -> T over B: source_map : X -> S and
// target_map : Y -> T share one index map alpha, with t ∘ source_map = target_map ∘ f_alpha.
struct ArrowMorphism {
  OneMorphism source_map;
  OneMorphism target_map;
};

ArrowMorphism identity_arrow_morphism(const OneMorphism& f);
ArrowMorphism compose(const ArrowMorphism& second, const ArrowMorphism& first);

// Shared index map and the commuting square at target elements born at levels <= depth.
std::vector<std::string> arrow_morphism_failures(const OneMorphism& f, const OneMorphism& t, const ArrowMorphism& m,
                                                 std::size_t depth);

// chi : H_f -> H_t over alpha. At b with a = alpha(b), the comparison square
//   C_f(a) --m_f--> P_f(a)
//     |phi_b          |k
//   C_t(b) --m_t--> P_t(b)
// with k induced by psi_b on the D slot and chi_b' on H_t(b') for b' < b, is sent through
// ff.on_square. `from` and `to` must come from the same ff. Components are memoized; those
// through depth are built eagerly, so a non-commuting input raises PreconditionViolated here.
// Components needing a Reedy step beyond either factorization raise BudgetExhausted.
OneMorphism chi_construct(const ReedyFactorization& from, const ReedyFactorization& to, const ArrowMorphism& m,
                          const FunctorialFactorization& ff, std::size_t depth);

// Naturality of chi and both rectangles g_t ∘ phi = chi ∘ g_f and h_t ∘ chi = psi ∘ h_f, through depth.
std::vector<std::string> chi_failures(const ReedyFactorization& from, const ReedyFactorization& to,
                                      const ArrowMorphism& m, const OneMorphism& chi, std::size_t depth);

}  // namespace procat::factor
