#include "procat/graded/a_index.hpp"

#include <algorithm>

#include "procat/error.hpp"
#include "procat/fincat/directed.hpp"

namespace procat::graded {

AIndexPoset::AIndexPoset(fincat::FiniteCategory category) : category_(std::move(category)) {
  auto verdict = fincat::is_directed(category_);
  require(verdict.directed(), ErrorKind::kNotDirected, "A_I needs a directed category");
}

std::size_t AIndexPoset::object_of(ElementId e) const { return element(e).payload.at(0); }

std::vector<std::size_t> AIndexPoset::legs(ElementId e) const {
  const auto& payload = element(e).payload;
  return {payload.begin() + 1, payload.end()};
}

std::size_t AIndexPoset::arrow_of(ElementId upper, ElementId lower) const {
  if (upper == lower) return category_.identity(object_of(upper));
  const Element& el = element(upper);
  auto it = std::lower_bound(el.below.begin(), el.below.end(), lower);
  require(it != el.below.end() && *it == lower, ErrorKind::kInvalidArgument, "arrow_of: elements are not related");
  return el.payload.at(1 + static_cast<std::size_t>(it - el.below.begin()));
}

std::vector<std::pair<std::size_t, std::vector<std::size_t>>> AIndexPoset::extensions(
    const std::vector<ElementId>& section) const {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
  const std::size_t k = section.size();
  std::vector<std::size_t> targets(k);
  for (std::size_t j = 0; j < k; ++j) targets[j] = object_of(section[j]);
  // Legs are decided from the top of the section down: a leg at r is forced by any decided leg
  // above it, and the remaining freedom sits at the maximal elements of R.
  std::vector<long> leg(k, -1);
  for (std::size_t o = 0; o < category_.object_count(); ++o) {
    std::vector<std::vector<std::size_t>> found;
    auto rec = [&](auto&& self, long pos) -> void {
      if (pos < 0) {
        std::vector<std::size_t> legs_out(k);
        for (std::size_t j = 0; j < k; ++j) legs_out[j] = static_cast<std::size_t>(leg[j]);
        found.push_back(std::move(legs_out));
        return;
      }
      const std::size_t j = static_cast<std::size_t>(pos);
      const ElementId r = section[j];
      std::optional<std::size_t> forced;
      for (std::size_t above = j + 1; above < k; ++above) {
        if (!less(r, section[above])) continue;
        std::size_t via = category_.compose_or_throw(arrow_of(section[above], r), static_cast<std::size_t>(leg[above]));
        if (forced && *forced != via) return;
        forced = via;
      }
      if (forced) {
        leg[j] = static_cast<long>(*forced);
        self(self, pos - 1);
      } else {
        for (std::size_t m : category_.hom(o, targets[j])) {
          leg[j] = static_cast<long>(m);
          self(self, pos - 1);
        }
      }
      leg[j] = -1;
    };
    rec(rec, static_cast<long>(k) - 1);
    std::sort(found.begin(), found.end());
    for (auto& legs_out : found) out.emplace_back(o, std::move(legs_out));
  }
  return out;
}

std::string AIndexPoset::key_of(const ConeElement& c) const {
  std::string key = "L" + std::to_string(c.level) + "{";
  for (std::size_t j = 0; j < c.section.size(); ++j) key += (j ? "," : "") + std::to_string(c.section[j]);
  key += "}" + category_.object_name(c.vertex) + "(";
  for (std::size_t j = 0; j < c.legs.size(); ++j) key += (j ? "," : "") + category_.morphism(c.legs[j]).name;
  return key + ")";
}

std::vector<std::string> AIndexPoset::check_candidate(const ConeElement& c) const {
  std::vector<std::string> out;
  if (c.level == 0) {
    out.push_back("level-0 elements are the objects of I");
    return out;
  }
  if (c.vertex >= category_.object_count()) out.push_back("vertex out of range");
  if (c.legs.size() != c.section.size()) out.push_back("one leg per section element is required");
  if (!out.empty()) return out;
  if (!std::is_sorted(c.section.begin(), c.section.end()) ||
      std::adjacent_find(c.section.begin(), c.section.end()) != c.section.end())
    out.push_back("section must be sorted without repeats");
  const std::size_t limit = count_upto(c.level - 1);
  for (ElementId r : c.section)
    if (r >= limit) out.push_back("section element " + std::to_string(r) + " is not born below the level");
  if (!out.empty()) return out;
  if (!is_section(*this, c.section)) out.push_back("not down-closed");
  for (std::size_t j = 0; j < c.section.size(); ++j) {
    const auto& m = category_.morphism(c.legs[j]);
    if (m.dom != c.vertex || m.cod != object_of(c.section[j]))
      out.push_back("leg at " + element(c.section[j]).key + " has the wrong domain or codomain");
  }
  if (!out.empty()) return out;
  // R is down-closed, so every lower element of r sits in R.
  for (std::size_t j = 0; j < c.section.size(); ++j) {
    const ElementId r = c.section[j];
    const Element& el = element(r);
    for (std::size_t jj = 0; jj < el.below.size(); ++jj) {
      const ElementId lower = el.below[jj];
      const std::size_t at = static_cast<std::size_t>(
          std::lower_bound(c.section.begin(), c.section.end(), lower) - c.section.begin());
      if (category_.compose_or_throw(el.payload[1 + jj], c.legs[j]) != c.legs[at])
        out.push_back("cone condition fails between " + el.key + " and " + element(lower).key);
    }
  }
  return out;
}

std::optional<ElementId> AIndexPoset::find(const ConeElement& c) const {
  if (c.level == 0) return c.vertex < category_.object_count() ? std::optional<ElementId>(c.vertex) : std::nullopt;
  level_end(c.level);
  return find_key(key_of(c));
}

std::vector<ElementSpec> AIndexPoset::generate_level(std::size_t level) const {
  std::vector<ElementSpec> out;
  if (level == 0) {
    for (std::size_t o = 0; o < category_.object_count(); ++o)
      out.push_back({"L0{}" + category_.object_name(o), {}, {o}});
    return out;
  }
  for (const auto& section : sections(*this, level - 1)) {
    for (auto& [vertex, legs_out] : extensions(section)) {
      ConeElement c{level, section, vertex, legs_out};
      std::vector<std::size_t> payload{vertex};
      payload.insert(payload.end(), legs_out.begin(), legs_out.end());
      out.push_back({key_of(c), section, std::move(payload)});
    }
  }
  return out;
}

}  // namespace procat::graded

namespace procat::graded {

namespace {

// The cofinality witness for (a, f : p(a) -> i): a cone on the closure of a and the base element
// of i, whose leg x to a equalizes f with the path to i through a when that path exists.
std::optional<ConeElement> cofinality_witness(const AIndexPoset& a, ElementId e, std::size_t f, std::size_t i) {
  const auto& cat = a.category();
  const ElementId base = a.base_element(i);
  std::vector<ElementId> section = a.below(e);
  section.push_back(e);
  if (!std::binary_search(section.begin(), section.end(), base)) section.push_back(base);
  std::sort(section.begin(), section.end());
  std::size_t level = 0;
  for (ElementId r : section) level = std::max(level, a.birth(r) + 1);
  const bool through_base = a.leq(base, e);
  for (std::size_t u = 0; u < cat.object_count(); ++u)
    for (std::size_t x : cat.hom(u, a.object_of(e))) {
      const std::size_t to_base = cat.compose_or_throw(f, x);
      if (through_base && cat.compose_or_throw(a.arrow_of(e, base), x) != to_base) continue;
      ConeElement c{level, section, u, {}};
      for (ElementId r : section)
        c.legs.push_back(a.leq(r, e) ? cat.compose_or_throw(a.arrow_of(e, r), x) : to_base);
      return c;
    }
  return std::nullopt;
}

}  // namespace

AIndexReport check_a_index(const AIndexPoset& a, std::size_t depth, std::size_t exhaustive_limit) {
  require(depth >= 1, ErrorKind::kInvalidArgument, "check_a_index needs depth >= 1");
  AIndexReport r;
  r.depth = depth;
  const auto& cat = a.category();
  const std::size_t top = depth - 1;  // levels materialized in full besides an exhaustive level `depth`
  for (std::size_t l = 0; l <= top; ++l) r.level_sizes.push_back(a.level_size(l));
  r.cofinite_violations = check_cofinite(a, top);

  // Sections one level lower are bounded inside the materialized truncation.
  if (top >= 1) {
    for (const auto& s : sections(a, top - 1)) {
      ++r.sections_checked;
      if (!first_upper_bound(a, s, top, false)) r.failures.push_back("section without an upper bound at level " + std::to_string(top));
    }
  }

  std::vector<std::vector<ElementId>> top_sections;
  bool exhaustive = true;
  try {
    top_sections = sections(a, top, exhaustive_limit);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kBudgetExhausted) throw;
    exhaustive = false;
  }
  r.upper_bounds_exhaustive = exhaustive;
  if (exhaustive) {
    r.level_sizes.push_back(a.level_size(depth));
    for (const auto& v : check_cofinite(a, depth)) r.cofinite_violations.push_back(v);
    for (const auto& s : top_sections) {
      ++r.sections_checked;
      if (!first_upper_bound(a, s, depth, false)) r.failures.push_back("section without an upper bound at level " + std::to_string(depth));
    }
  } else {
    auto cone = fincat::find_universal_cone(cat);
    if (!cone) {
      r.failures.push_back("no universal cone over I to certify upper bounds");
    } else {
      for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(m);
        if (cat.compose_or_throw(m, cone->legs[mor.dom]) != cone->legs[mor.cod])
          r.failures.push_back("universal cone is not compatible with " + mor.name);
      }
      std::vector<std::vector<ElementId>> samples;
      for (ElementId e = 0; e < a.count_upto(top); ++e) {
        auto s = a.below(e);
        s.push_back(e);
        samples.push_back(std::move(s));
      }
      samples.push_back(elements_upto(a, top));
      for (const auto& s : samples) {
        ConeElement c{depth, s, cone->vertex, {}};
        for (ElementId e : s) c.legs.push_back(cone->legs[a.object_of(e)]);
        auto problems = a.check_candidate(c);
        for (const auto& p : problems) r.failures.push_back("certificate instance: " + p);
        ++r.certificate_instances;
      }
    }
  }

  // Over-categories of p_I restricted to levels <= depth-1: every object joins (i, id) through a witness.
  for (std::size_t i = 0; i < cat.object_count(); ++i) {
    for (ElementId e = 0; e < a.count_upto(top); ++e)
      for (std::size_t f : cat.hom(a.object_of(e), i)) {
        ++r.over_category_objects;
        auto w = cofinality_witness(a, e, f, i);
        if (!w) {
          r.failures.push_back("no cofinality witness for " + a.element(e).key);
          continue;
        }
        for (const auto& p : a.check_candidate(*w)) r.failures.push_back("cofinality witness: " + p);
        if (w->level < a.materialized_levels() && !a.find(*w)) r.failures.push_back("cofinality witness missing from its level");
        // The two over-category arrows out of the witness.
        auto leg_at = [&](ElementId x) {
          auto at = std::lower_bound(w->section.begin(), w->section.end(), x) - w->section.begin();
          return w->legs[static_cast<std::size_t>(at)];
        };
        const std::size_t structure = cat.compose_or_throw(f, leg_at(e));
        if (structure != leg_at(a.base_element(i))) r.failures.push_back("witness does not map to (i, id) over i");
        ++r.cofinality_witnesses;
        r.max_witness_level = std::max(r.max_witness_level, w->level);
      }
  }
  return r;
}

}  // namespace procat::graded
