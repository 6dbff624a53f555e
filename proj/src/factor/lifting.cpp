#include "procat/factor/lifting.hpp"

#include "procat/error.hpp"
#include "procat/probar/object.hpp"

namespace procat::factor {

namespace {

bool natural_over(const OneMorphism& f, const graded::GradedPosetHandle& index) {
  return f.source()->index() == index && f.target()->index() == index && f.alpha().is_identity();
}

}  // namespace

std::vector<std::string> square_failures(const NaturalSquare& sq, std::size_t depth) {
  const auto& index = sq.right.source()->index();
  for (const OneMorphism* f : {&sq.left, &sq.right, &sq.top, &sq.bottom})
    if (!natural_over(*f, index)) return {"square legs are not natural over one index"};
  if (sq.left.source() != sq.top.source() || sq.left.target() != sq.bottom.source() ||
      sq.top.target() != sq.right.source() || sq.right.target() != sq.bottom.target())
    return {"square legs do not share endpoints"};
  std::vector<std::string> out;
  for (ElementId t = 0; t < index->count_upto(depth); ++t)
    if (fincat::compose(sq.right.phi(t), sq.top.phi(t)) != fincat::compose(sq.bottom.phi(t), sq.left.phi(t)))
      out.push_back("square does not commute at " + index->element(t).key);
  return out;
}

NaturalSquare constant_left_square(const FinSetMap& left, const OneMorphism& right,
                                   std::function<FinSetMap(ElementId)> top,
                                   std::function<FinSetMap(ElementId)> bottom) {
  const auto& index = right.source()->index();
  auto a = probar::ProBarObject::constant(index, left.dom());
  auto b = probar::ProBarObject::constant(index, left.cod());
  return {OneMorphism::natural(a, b, [left](ElementId) { return left; }), right,
          OneMorphism::natural(a, right.source(), std::move(top)),
          OneMorphism::natural(b, right.target(), std::move(bottom))};
}

OneMorphism lift_against_special(const NaturalSquare& sq, std::size_t depth) {
  const auto failures = square_failures(sq, depth);
  require(failures.empty(), ErrorKind::kPreconditionViolated,
          "lift_against_special: " + (failures.empty() ? std::string() : failures.front()));
  const auto& index = *sq.right.source()->index();
  const auto y = sq.left.target();
  const auto e = sq.right.source();
  const NaturalView right_view = NaturalView::of(sq.right);
  std::vector<FinSetMap> lifts;
  for (ElementId t = 0; t < index.count_upto(depth); ++t) {
    const std::string& key = index.element(t).key;
    const FinSetMap left = sq.left.phi(t);
    require(left.is_injective(), ErrorKind::kPreconditionViolated, "left leg is not injective at " + key);
    const MatchingObject m(index, t, right_view);
    FinSetMap right = m.comparison(e->value(t), sq.right.phi(t), [&](ElementId s) { return e->arrow(t, s); });
    require(right.is_surjective(), ErrorKind::kPreconditionViolated, "right leg is not special surjective at " + key);
    FinSetMap bottom = m.comparison(y->value(t), sq.bottom.phi(t),
                                    [&](ElementId s) { return fincat::compose(lifts[s], y->arrow(t, s)); });
    lifts.push_back(fincat::finset_lift({left, std::move(right), sq.top.phi(t), std::move(bottom)}));
  }
  return natural_from_table(y, e, std::move(lifts));
}

std::vector<std::string> lift_failures(const NaturalSquare& sq, const OneMorphism& lift, std::size_t depth) {
  const auto& index = *sq.right.source()->index();
  std::vector<std::string> out;
  if (lift.source() != sq.left.target() || lift.target() != sq.right.source()) return {"lift has the wrong endpoints"};
  for (ElementId t = 0; t < index.count_upto(depth); ++t) {
    const std::string& key = index.element(t).key;
    if (fincat::compose(lift.phi(t), sq.left.phi(t)) != sq.top.phi(t)) out.push_back("upper triangle fails at " + key);
    if (fincat::compose(sq.right.phi(t), lift.phi(t)) != sq.bottom.phi(t)) out.push_back("lower triangle fails at " + key);
  }
  for (const auto& s : probar::check_natural(lift, depth)) out.push_back("lift: " + s);
  return out;
}

std::optional<FinSetMap> finset_solver(const LiftingSquare& sq) {
  if (!sq.right.is_surjective()) return std::nullopt;
  return fincat::finset_lift(sq);
}

std::vector<std::string> retract_failures(const RetractDiagram& r) {
  const std::size_t x = r.retract.dom(), y = r.retract.cod(), x1 = r.of.dom(), y1 = r.of.cod();
  if (r.source_in.dom() != x || r.source_in.cod() != x1 || r.source_out.dom() != x1 || r.source_out.cod() != x ||
      r.target_in.dom() != y || r.target_in.cod() != y1 || r.target_out.dom() != y1 || r.target_out.cod() != y)
    return {"retract diagram maps have the wrong endpoints"};
  std::vector<std::string> out;
  if (!fincat::compose(r.source_out, r.source_in).is_identity()) out.push_back("source row is not the identity");
  if (!fincat::compose(r.target_out, r.target_in).is_identity()) out.push_back("target row is not the identity");
  if (fincat::compose(r.of, r.source_in) != fincat::compose(r.target_in, r.retract)) out.push_back("left square fails");
  if (fincat::compose(r.retract, r.source_out) != fincat::compose(r.target_out, r.of)) out.push_back("right square fails");
  return out;
}

RetractDiagram retract_extract(const FinSetMap& h, const FunctorialFactorization& ff, const LiftSolver& solver) {
  const fincat::FactorizationTriple tr = ff.factor(h);
  require(tr.q.is_injective(), ErrorKind::kPreconditionViolated, "retract_extract: q_h is not injective");
  const LiftingSquare sq{tr.q, h, FinSetMap::identity(h.dom()), tr.p};
  const std::optional<FinSetMap> k = solver(sq);
  require(k.has_value(), ErrorKind::kNoLift, "retract_extract: no lift of q_h against h");
  return {h, tr.p, tr.q, *k, FinSetMap::identity(h.cod()), FinSetMap::identity(h.cod())};
}

FinSetMap transport_lift(const RetractDiagram& r, const LiftingSquare& sq, const LiftSolver& solver) {
  require(sq.right == r.retract, ErrorKind::kInvalidArgument, "transport_lift: right leg is not the retract");
  require(fincat::commutes(sq), ErrorKind::kPreconditionViolated, "transport_lift: square does not commute");
  const LiftingSquare moved{sq.left, r.of, fincat::compose(r.source_in, sq.top), fincat::compose(r.target_in, sq.bottom)};
  const std::optional<FinSetMap> lift = solver(moved);
  require(lift.has_value(), ErrorKind::kNoLift, "transport_lift: no lift against the larger map");
  return fincat::compose(r.source_out, *lift);
}

std::vector<std::string> retract_failures(const NaturalRetract& r, std::size_t depth) {
  const auto& index = r.retract.source()->index();
  for (const OneMorphism* f : {&r.retract, &r.of, &r.source_in, &r.source_out, &r.target_in, &r.target_out})
    if (!natural_over(*f, index)) return {"retract maps are not natural over one index"};
  std::vector<std::string> out;
  for (ElementId t = 0; t < index->count_upto(depth); ++t)
    for (const auto& s : retract_failures(RetractDiagram{r.retract.phi(t), r.of.phi(t), r.source_in.phi(t),
                                                         r.source_out.phi(t), r.target_in.phi(t), r.target_out.phi(t)}))
      out.push_back(s + " at " + index->element(t).key);
  for (const OneMorphism* f : {&r.source_in, &r.source_out, &r.target_in, &r.target_out})
    for (const auto& s : probar::check_natural(*f, depth)) out.push_back(s);
  return out;
}

LiftingSquare square_at(const GermSquare& sq, ElementId t) {
  const auto x = sq.left.source();
  const auto y = sq.left.target();
  return {sq.left.phi(t), sq.right, fincat::compose(sq.top.map, x->arrow(t, sq.top.node)),
          fincat::compose(sq.bottom.map, y->arrow(t, sq.bottom.node))};
}

LevelLift lift_lw_vs_sp(const GermSquare& sq, std::size_t search, std::optional<ElementId> level) {
  const auto& index = *sq.left.source()->index();
  require(sq.left.alpha().is_identity() && sq.left.target()->index() == sq.left.source()->index(),
          ErrorKind::kInvalidArgument, "lift_lw_vs_sp: left leg must be natural");
  auto factors = [&](ElementId t) {
    return index.leq(sq.top.node, t) && index.leq(sq.bottom.node, t) && fincat::commutes(square_at(sq, t));
  };
  std::optional<ElementId> found;
  if (level) {
    if (factors(*level)) found = level;
  } else {
    for (ElementId t = 0; t < index.count_upto(search) && !found; ++t)
      if (factors(t)) found = t;
  }
  require(found.has_value(), ErrorKind::kNoFactoringLevel, "lift_lw_vs_sp: no level where the square factors");
  return {*found, fincat::finset_lift(square_at(sq, *found))};
}

bool solves(const GermSquare& sq, const LevelLift& lift) { return fincat::solves(square_at(sq, lift.level), lift.lift); }

}  // namespace procat::factor
