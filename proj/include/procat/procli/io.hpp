#pragma once

#include <string>

#include "json.hpp"
#include "procat/factor.hpp"
#include "procat/fincat.hpp"
#include "procat/graded.hpp"
#include "procat/probar.hpp"

namespace procat::procli {

using nlohmann::json;

// Every reader throws ParseError on schema violations. Lists are order-significant.

// {dom, cod, images}
json to_json(const fincat::FinSetMap& f);
fincat::FinSetMap finset_map_from_json(const json& j);

// {objects: [name], morphisms: [{id, dom, cod}], compose: [[g, f, gf]]}. Identities are implicit
// and named "id_<object>"; dom and cod are object names; compose lists g ∘ f = gf by morphism id
// for every composable pair of non-identity morphisms. A table that is not a category raises
// PreconditionViolated.
json to_json(const fincat::FiniteCategory& c);
fincat::FiniteCategory category_from_json(const json& j);

// {shape: category, values: {object: size}, arrows: {morphism id: map}}; identities implicit.
json to_json(const fincat::Diagram& d);
fincat::Diagram diagram_from_json(const json& j);

// {size, less: [[u, v]]} with u < v; the transitive closure is taken.
json to_json(const fincat::FinitePoset& p);
fincat::FinitePoset poset_from_json(const json& j);

// {levels: [[{key, lower: [key]}]]} through `depth`; `lower` lists the covered elements.
json truncated_poset_json(const graded::GradedPoset& p, std::size_t depth);
// digraph with one node per element labelled "level:index" and one edge upper -> lower per
// covering pair, through `depth`.
std::string truncated_poset_dot(const graded::GradedPoset& p, std::size_t depth);
// Covered elements of e: maximal elements of its strict down-set.
std::vector<graded::ElementId> covers_of(const graded::GradedPoset& p, graded::ElementId e);

// {depth, elements: [{id, level, value, arrows: [{lower, map}]}]} with arrows to covers.
json truncated_object_json(const probar::ProBarObject& x, std::size_t depth);
// {depth, alpha: [..], components: [map]} over target elements born at levels <= depth.
json truncated_morphism_json(const probar::OneMorphism& f, std::size_t depth);
// {verdict: equal|unknown, witness: morphism or null, reason}
json to_json(const probar::EqualityVerdict& v, std::size_t depth);

// A natural map over a finite poset, as read by `factor`:
// {poset, source: {values, arrows: [{upper, lower, map}]}, target: {..}, components: [map]}.
// Arrows are given on covering pairs and composed along chains; values and components are
// indexed by poset element. Non-functorial or non-natural data raises PreconditionViolated.
struct PosetArrowInput {
  graded::GradedPosetHandle index;
  probar::OneMorphism arrow;
  std::size_t depth = 0;
};
PosetArrowInput poset_arrow_from_json(const json& j);
json poset_arrow_json(const probar::OneMorphism& f);

// {depth, input, elements: [{element, level, H, H_arrows: [{lower, map}], g, h}]} by poset
// element; the index must be a finite poset.
json to_json(const factor::ReedyFactorization& r);
// Rebuilds the factorization from its JSON and returns check_reedy's failures.
std::vector<std::string> recheck_reedy(const json& j);

// {left, right, top, bottom}
json to_json(const fincat::LiftingSquare& sq);
fincat::LiftingSquare square_from_json(const json& j);
json to_json(const factor::RetractDiagram& r);
factor::RetractDiagram retract_from_json(const json& j);

// Parses text, mapping syntax errors to ParseError.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace procat::procli
