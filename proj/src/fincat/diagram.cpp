#include "procat/fincat/diagram.hpp"

#include "procat/error.hpp"

namespace procat::fincat {

Diagram::Diagram(FiniteCategory shape, std::vector<std::size_t> values, std::vector<FinSetMap> arrows)
    : shape_(std::move(shape)), values_(std::move(values)), arrows_(std::move(arrows)) {
  require(values_.size() == shape_.object_count(), ErrorKind::kInvalidArgument, "diagram: one value per object");
  require(arrows_.size() == shape_.morphism_count(), ErrorKind::kInvalidArgument, "diagram: one arrow per morphism");
}

Diagram Diagram::over_poset(const FinitePoset& p, std::vector<std::size_t> values,
                            const std::function<FinSetMap(std::size_t, std::size_t)>& arrow) {
  FiniteCategory shape = FiniteCategory::from_poset(p);
  std::vector<FinSetMap> arrows;
  for (std::size_t m = 0; m < shape.morphism_count(); ++m) {
    const Morphism& mor = shape.morphism(m);
    arrows.push_back(mor.dom == mor.cod ? FinSetMap::identity(values.at(mor.dom)) : arrow(mor.dom, mor.cod));
  }
  return Diagram(std::move(shape), std::move(values), std::move(arrows));
}

std::vector<std::string> check_functorial(const Diagram& d) {
  std::vector<std::string> out;
  const FiniteCategory& c = d.shape();
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mor = c.morphism(m);
    const FinSetMap& a = d.arrow(m);
    if (a.dom() != d.value(mor.dom) || a.cod() != d.value(mor.cod))
      out.push_back("arrow for " + mor.name + " has wrong endpoints");
  }
  if (!out.empty()) return out;
  for (std::size_t o = 0; o < c.object_count(); ++o)
    if (!d.arrow(c.identity(o)).is_identity()) out.push_back("identity of " + c.object_name(o) + " not preserved");
  for (const CompositionEntry& e : c.table()) {
    if (c.morphism(e.first).cod != c.morphism(e.second).dom) continue;
    if (compose(d.arrow(e.second), d.arrow(e.first)) != d.arrow(e.result))
      out.push_back("composite " + c.morphism(e.second).name + " o " + c.morphism(e.first).name + " not preserved");
  }
  return out;
}

}  // namespace procat::fincat
