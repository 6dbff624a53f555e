#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "procat/factor/chi.hpp"
#include "procat/fincat.hpp"
#include "procat/probar/classic.hpp"
#include "procat/probar/one_morphism.hpp"
#include "procat/probar/shaped.hpp"

namespace procat::procli {

using fincat::FinSetMap;
using probar::ProBarObjectHandle;

// Seeded generator; a seed fully determines every corpus drawn from it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

FinSetMap random_map(Rng& rng, std::size_t dom, std::size_t cod);
FinSetMap random_injection(Rng& rng, std::size_t dom, std::size_t cod);
FinSetMap random_surjection(Rng& rng, std::size_t dom, std::size_t cod);

// A chain object constant from level `stable` on, with values in 1..max_size.
probar::ProBarObjectHandle random_chain_object(Rng& rng, std::size_t stable, std::size_t max_size);

// A strictly increasing map of the standard chain: random gaps in 1..max_gap through `until`,
// then gap 1.
graded::IncreasingMap random_chain_reindexing(Rng& rng, std::size_t until, std::size_t max_gap);

// A natural 1-morphism between chain objects with the given index map, built level by level from
// random preimage choices; nullopt when `tries` attempts all dead-end. Components are eventually
// constant once the target has stabilized and alpha has passed the source's stable level.
std::optional<probar::OneMorphism> random_natural(Rng& rng, probar::ProBarObjectHandle source,
                                                  probar::ProBarObjectHandle target, graded::IncreasingMap alpha,
                                                  std::size_t tries = 16);

// Classic data representing f, re-represented at random refinements alpha(b) + (0..max_lift) so
// that representatives need not be monotone.
probar::ClassicMorphism rerepresent(Rng& rng, const probar::OneMorphism& f, std::size_t max_lift);

struct ChainPair {
  probar::ProBarObjectHandle source;
  probar::ProBarObjectHandle target;
  probar::OneMorphism morphism;
};

// source, target and a random natural 1-morphism between them, retried until one exists.
ChainPair random_chain_pair(Rng& rng, std::size_t stable, std::size_t max_size);

// A family over 0 -> 1 of two chain objects joined by a random natural 1-morphism.
probar::ProBarFamilyHandle random_arrow_family(Rng& rng, std::size_t stable, std::size_t max_size);

// A random cofinite poset on n elements: i < j kept with the given probability, transitively closed,
// respecting the index order.
fincat::FinitePoset random_poset(Rng& rng, std::size_t n, double edge_probability);

// Pointed diagrams: element 0 of every value is a base point and every arrow preserves it, so
// limits are never empty and constant base-point maps are natural.

// X(t) of size 1..max_size with a random map into lim_{s<t} X sending 0 to the base point, over
// elements born at levels <= depth.
ProBarObjectHandle random_pointed_object(Rng& rng, graded::GradedPosetHandle index, std::size_t depth,
                                         std::size_t max_size);

struct PointedExtension {
  ProBarObjectHandle target;
  probar::OneMorphism inclusion;  // levelwise injective, X(t) onto the first elements of Y(t)
};

// Y(t) = X(t) plus 0..max_extra points with random images in lim_{s<t} Y.
PointedExtension random_pointed_extension(Rng& rng, const ProBarObjectHandle& x, std::size_t depth,
                                          std::size_t max_extra);

// A random natural map source -> target through depth, chosen element by element among the
// values compatible with the lower components. `forced` pins values; without it a dead end falls
// back to the constant base-point map after `tries` attempts, with it nullopt is returned.
using ForcedValue = std::function<std::optional<std::size_t>(graded::ElementId t, std::size_t x)>;
std::optional<probar::OneMorphism> random_pointed_map(Rng& rng, const ProBarObjectHandle& source,
                                                      const ProBarObjectHandle& target, std::size_t depth,
                                                      const ForcedValue& forced = {}, std::size_t tries = 16);

// A natural map between pointed diagrams over a random cofinite poset on `elements` elements.
struct PosetArrow {
  graded::GradedPosetHandle index;
  probar::OneMorphism arrow;
  std::size_t depth = 0;  // covers the whole poset
};
PosetArrow random_poset_arrow(Rng& rng, std::size_t elements, std::size_t max_size);

// A natural map X -> Y over the standard chain with alpha the identity, constant from `stable` on.
probar::OneMorphism random_chain_arrow(Rng& rng, std::size_t stable, std::size_t max_size);

// A morphism from f : X -> Y over the chain to the pushout arrow t : S -> S ⊔_X Y over a random
// reindexing, with source_map a random natural X -> S.
struct ArrowExtension {
  probar::OneMorphism arrow;
  factor::ArrowMorphism morphism;
};
ArrowExtension random_arrow_extension(Rng& rng, const probar::OneMorphism& f, std::size_t stable,
                                      std::size_t max_size, std::size_t max_gap);

}  // namespace procat::procli
