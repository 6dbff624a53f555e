#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "procat/fincat/diagram.hpp"
#include "procat/fincat/finite_category.hpp"
#include "procat/probar/one_morphism.hpp"

namespace procat::probar {

enum class Verdict { kEqual, kUnequal, kUnknown };
std::string_view to_string(Verdict v);

// The class in colim_node Hom(X(node), S) of map : X(node) -> S.
struct Germ {
  std::size_t node = 0;
  FinSetMap map;
};

struct GermComparison {
  Verdict verdict = Verdict::kUnknown;
  std::optional<std::size_t> refinement;  // a node where both germs agree, when Equal
};

// A pro-object in the classic sense: either a pro-bar object over a graded poset, or a diagram
// over a finite directed category. Nodes are element ids or object indices respectively.
class ClassicObject;
using ClassicObjectHandle = std::shared_ptr<const ClassicObject>;

class ClassicObject {
 public:
  explicit ClassicObject(ProBarObjectHandle x);
  // NotDirected unless the index is directed; InvalidArgument unless the diagram is a functor.
  explicit ClassicObject(fincat::Diagram x);

  static ClassicObjectHandle of(ProBarObjectHandle x) { return std::make_shared<const ClassicObject>(std::move(x)); }

  bool poset_indexed() const noexcept { return probar_ != nullptr; }
  const ProBarObjectHandle& probar() const;
  const fincat::Diagram& diagram() const;
  // Two handles denote the same object when they share the underlying pro-bar object or diagram.
  const void* identity() const noexcept;

  std::size_t value(std::size_t node) const;
  // Nodes born at levels <= depth; every object for category-indexed objects.
  std::size_t node_count(std::size_t depth) const;
  // Every (lower, X(node -> lower)) with lower strictly below node, or one pair per non-identity
  // morphism out of node.
  std::vector<std::pair<std::size_t, FinSetMap>> arrows_from(std::size_t node) const;

  // Equal is always certified by a refinement node. Unequal is certified when the comparison is
  // decidable: finite category, or eventually constant with a common upper bound found in budget.
  GermComparison compare(const Germ& g, const Germ& h, std::size_t search) const;

 private:
  ProBarObjectHandle probar_;
  std::shared_ptr<const fincat::Diagram> diagram_;
};

bool same_object(const ClassicObject& x, const ClassicObject& y);

// Data representing a morphism of Pro(C): a germ into each target node.
class ClassicMorphism {
 public:
  using Representatives = std::function<Germ(std::size_t node)>;
  ClassicMorphism(ClassicObjectHandle source, ClassicObjectHandle target, Representatives rep);

  static ClassicMorphism identity(ClassicObjectHandle x);

  const ClassicObjectHandle& source() const noexcept { return source_; }
  const ClassicObjectHandle& target() const noexcept { return target_; }
  Germ representative(std::size_t node) const;

 private:
  struct Memo;
  ClassicObjectHandle source_;
  ClassicObjectHandle target_;
  Representatives rep_;
  std::shared_ptr<Memo> memo_;
};

// The functor i on representatives: the germ at b is (alpha(b), phi_b).
ClassicMorphism to_pro(const OneMorphism& f);
ClassicMorphism compose(const ClassicMorphism& second, const ClassicMorphism& first);

// Germ comparison at every target node born at levels <= depth.
Verdict classic_equal(const ClassicMorphism& d, const ClassicMorphism& e, std::size_t depth, std::size_t search);

// Exact equality when the target stabilizes: a category-indexed target, or one constant above k,
// where the germ at any node born beyond k equals the germ at any node born at k. Unknown only if
// a source-side comparison is undecidable within `search`.
Verdict stabilized_equal(const ClassicMorphism& d, const ClassicMorphism& e, std::size_t search);

struct CompatibilityCertificate {
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::size_t refinement = 0;
};

struct CompatibilityReport {
  std::vector<CompatibilityCertificate> certificates;
  std::vector<std::string> failures;  // pairs certified incompatible
  std::vector<std::string> unknown;   // pairs without a certificate in budget
  bool ok() const { return failures.empty() && unknown.empty(); }
};

// For every target arrow upper -> lower with upper born at levels <= depth: the germs
// Y(upper -> lower) ∘ rep(upper) and rep(lower) agree.
CompatibilityReport check_compatible(const ClassicMorphism& d, std::size_t depth, std::size_t search);

}  // namespace procat::probar

namespace procat::probar {

// f and g are mutually inverse at truncation: both composites compare Equal to the identity.
Verdict are_inverse(const ClassicMorphism& f, const ClassicMorphism& g, std::size_t depth, std::size_t search);

}  // namespace procat::probar
