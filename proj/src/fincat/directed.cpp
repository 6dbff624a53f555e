#include "procat/fincat/directed.hpp"

namespace procat::fincat {

DirectednessVerdict is_directed(const FiniteCategory& c) {
  DirectednessVerdict v;
  const std::size_t n = c.object_count();
  v.nonempty = n > 0;
  v.pairs_have_cones = true;
  for (std::size_t s = 0; s < n && v.pairs_have_cones; ++s)
    for (std::size_t t = s + 1; t < n && v.pairs_have_cones; ++t) {
      bool found = false;
      for (std::size_t u = 0; u < n && !found; ++u) found = !c.hom(u, s).empty() && !c.hom(u, t).empty();
      if (!found) {
        v.pairs_have_cones = false;
        v.unbounded_pair = std::make_pair(s, t);
      }
    }
  v.parallel_pairs_equalized = true;
  for (std::size_t s = 0; s < n && v.parallel_pairs_equalized; ++s)
    for (std::size_t t = 0; t < n && v.parallel_pairs_equalized; ++t) {
      const auto& arrows = c.hom(s, t);
      for (std::size_t a = 0; a < arrows.size() && v.parallel_pairs_equalized; ++a)
        for (std::size_t b = a + 1; b < arrows.size() && v.parallel_pairs_equalized; ++b) {
          bool found = false;
          for (std::size_t u = 0; u < n && !found; ++u)
            for (std::size_t h : c.hom(u, s))
              if (c.compose(arrows[a], h) == c.compose(arrows[b], h)) {
                found = true;
                break;
              }
          if (!found) {
            v.parallel_pairs_equalized = false;
            v.unequalized_pair = std::make_pair(arrows[a], arrows[b]);
          }
        }
    }
  return v;
}

std::optional<std::vector<std::size_t>> unbounded_section(const FinitePoset& p) {
  for (const auto& section : p.sections()) {
    bool bounded = false;
    for (std::size_t u = 0; u < p.size() && !bounded; ++u) {
      bounded = true;
      for (std::size_t x : section)
        if (!p.leq(x, u)) {
          bounded = false;
          break;
        }
    }
    if (!bounded) return section;
  }
  return std::nullopt;
}

DirectednessVerdict is_directed(const FinitePoset& p) {
  DirectednessVerdict v;
  v.nonempty = p.size() > 0;
  v.parallel_pairs_equalized = true;  // thin: no distinct parallel arrows
  auto witness = unbounded_section(p);
  v.pairs_have_cones = !witness.has_value() || witness->empty() ? true : false;
  if (witness && !witness->empty()) {
    // Report two elements of the offending section that have no common upper bound, if such exist.
    const auto& s = *witness;
    for (std::size_t i = 0; i < s.size() && !v.unbounded_pair; ++i)
      for (std::size_t j = i + 1; j < s.size() && !v.unbounded_pair; ++j) {
        bool common = false;
        for (std::size_t u = 0; u < p.size() && !common; ++u) common = p.leq(s[i], u) && p.leq(s[j], u);
        if (!common) v.unbounded_pair = std::make_pair(s[i], s[j]);
      }
  }
  return v;
}

std::optional<UniversalCone> find_universal_cone(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  if (n == 0) return std::nullopt;
  for (std::size_t vertex = 0; vertex < n; ++vertex) {
    std::vector<std::size_t> legs(n);
    auto compatible_so_far = [&](std::size_t upto) {
      for (std::size_t m = 0; m < c.morphism_count(); ++m) {
        const Morphism& mor = c.morphism(m);
        if (mor.dom > upto || mor.cod > upto) continue;
        if (c.compose(m, legs[mor.dom]) != legs[mor.cod]) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t o) -> bool {
      if (o == n) return true;
      for (std::size_t leg : c.hom(vertex, o)) {
        legs[o] = leg;
        if (compatible_so_far(o) && self(self, o + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) return UniversalCone{vertex, legs};
  }
  return std::nullopt;
}

}  // namespace procat::fincat
