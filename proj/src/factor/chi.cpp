#include "procat/factor/chi.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "procat/error.hpp"

namespace procat::factor {

ArrowMorphism identity_arrow_morphism(const OneMorphism& f) {
  return {OneMorphism::identity(f.source()), OneMorphism::identity(f.target())};
}

ArrowMorphism compose(const ArrowMorphism& second, const ArrowMorphism& first) {
  return {probar::compose(second.source_map, first.source_map), probar::compose(second.target_map, first.target_map)};
}

std::vector<std::string> arrow_morphism_failures(const OneMorphism& f, const OneMorphism& t, const ArrowMorphism& m,
                                                 std::size_t depth) {
  if (m.source_map.source() != f.source() || m.target_map.source() != f.target() ||
      m.source_map.target() != t.source() || m.target_map.target() != t.target())
    return {"arrow morphism has the wrong endpoints"};
  std::vector<std::string> out;
  const auto& index = *t.target()->index();
  for (ElementId b = 0; b < index.count_upto(depth); ++b) {
    const ElementId a = m.source_map.alpha()(b);
    if (m.target_map.alpha()(b) != a) {
      out.push_back("index maps differ at " + index.element(b).key);
      continue;
    }
    if (fincat::compose(t.phi(b), m.source_map.phi(b)) != fincat::compose(m.target_map.phi(b), f.phi(a)))
      out.push_back("square does not commute at " + index.element(b).key);
  }
  return out;
}

namespace {

struct ChiState {
  explicit ChiState(ArrowMorphism input) : m(std::move(input)) {}

  std::vector<ReedyStep> from_steps;
  std::vector<ReedyStep> to_steps;
  ArrowMorphism m;
  const FunctorialFactorization* ff = nullptr;
  graded::GradedPosetHandle b_index;
  std::mutex mutex;
  std::map<ElementId, FinSetMap> memo;

  const ReedyStep& step(const std::vector<ReedyStep>& steps, ElementId e) const {
    require(e < steps.size(), ErrorKind::kBudgetExhausted, "chi: Reedy factorization does not reach this element");
    return steps[e];
  }

  FinSetMap component(ElementId b) {
    {
      std::lock_guard lock(mutex);
      auto it = memo.find(b);
      if (it != memo.end()) return it->second;
    }
    const ElementId a = m.source_map.alpha()(b);
    const ReedyStep& sf = step(from_steps, a);
    const ReedyStep& st = step(to_steps, b);
    const FinSetMap phi = m.source_map.phi(b);
    const FinSetMap to_target = fincat::compose(m.target_map.phi(b), sf.matching.project_target());
    const FinSetMap k = st.matching.comparison(sf.matching.size(), to_target, [&](ElementId lower) {
      return fincat::compose(component(lower), sf.matching.project_source(m.source_map.alpha()(lower)));
    });
    require(fincat::compose(st.comparison, phi) == fincat::compose(k, sf.comparison), ErrorKind::kPreconditionViolated,
            "chi: comparison square does not commute at " + b_index->element(b).key);
    FinSetMap chi = ff->on_square(sf.comparison, st.comparison, phi, k);
    std::lock_guard lock(mutex);
    memo.emplace(b, chi);
    return chi;
  }
};

}  // namespace

OneMorphism chi_construct(const ReedyFactorization& from, const ReedyFactorization& to, const ArrowMorphism& m,
                          const FunctorialFactorization& ff, std::size_t depth) {
  const auto failures = arrow_morphism_failures(from.input, to.input, m, depth);
  require(failures.empty(), ErrorKind::kPreconditionViolated,
          "chi: " + (failures.empty() ? std::string() : failures.front()));
  auto state = std::make_shared<ChiState>(m);
  state->from_steps = from.steps;
  state->to_steps = to.steps;
  state->ff = &ff;
  state->b_index = to.input.source()->index();
  for (ElementId b = 0; b < state->b_index->count_upto(depth); ++b) state->component(b);
  return OneMorphism(from.middle, to.middle, m.source_map.alpha(), [state](ElementId b) { return state->component(b); });
}

std::vector<std::string> chi_failures(const ReedyFactorization& from, const ReedyFactorization& to,
                                      const ArrowMorphism& m, const OneMorphism& chi, std::size_t depth) {
  std::vector<std::string> out = probar::check_natural(chi, depth);
  const auto& index = *chi.target()->index();
  for (ElementId b = 0; b < index.count_upto(depth); ++b) {
    const ElementId a = chi.alpha()(b);
    const std::string& key = index.element(b).key;
    if (a != m.source_map.alpha()(b)) out.push_back("index map differs from the input's at " + key);
    if (fincat::compose(to.lw_part.phi(b), m.source_map.phi(b)) != fincat::compose(chi.phi(b), from.lw_part.phi(a)))
      out.push_back("lw rectangle fails at " + key);
    if (fincat::compose(to.sp_part.phi(b), chi.phi(b)) != fincat::compose(m.target_map.phi(b), from.sp_part.phi(a)))
      out.push_back("sp rectangle fails at " + key);
  }
  return out;
}

}  // namespace procat::factor
