#include "procat/graded/eh_demo.hpp"

#include <algorithm>
#include <sstream>

#include "procat/fincat/finite_poset.hpp"

namespace procat::graded {

namespace {

long position(const std::vector<std::pair<std::size_t, std::size_t>>& sorted, std::pair<std::size_t, std::size_t> x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return it != sorted.end() && *it == x ? it - sorted.begin() : -1;
}

long position(const std::vector<std::size_t>& sorted, std::size_t x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return it != sorted.end() && *it == x ? it - sorted.begin() : -1;
}

// Every functor from the poset (relations `greater` on `labels`) into i, in canonical order.
void add_functors(const fincat::FiniteCategory& i, const std::vector<std::size_t>& labels,
                  const std::vector<std::pair<std::size_t, std::size_t>>& greater, std::size_t top,
                  std::vector<ThinDiagram>& out) {
  const std::size_t k = labels.size();
  std::vector<std::size_t> objects(k);
  auto on_objects = [&](auto&& self, std::size_t j) -> void {
    if (j < k) {
      for (std::size_t o = 0; o < i.object_count(); ++o) {
        objects[j] = o;
        self(self, j + 1);
      }
      return;
    }
    std::vector<std::size_t> arrows(greater.size());
    auto on_arrows = [&](auto&& rec, std::size_t r) -> void {
      if (r == greater.size()) {
        out.push_back({labels, greater, top, objects, arrows});
        return;
      }
      auto [u, v] = greater[r];
      const std::size_t from = objects[position(labels, u)], to = objects[position(labels, v)];
      for (std::size_t m : i.hom(from, to)) {
        // Recheck every composite triangle whose three relations are decided.
        arrows[r] = m;
        bool ok = true;
        for (std::size_t q = 0; q <= r && ok; ++q) {
          auto [a, b] = greater[q];
          for (std::size_t p = 0; p <= r && ok; ++p) {
            auto [c, d] = greater[p];
            if (c != b) continue;
            long whole = position(greater, {a, d});
            if (whole < 0 || static_cast<std::size_t>(whole) > r) continue;
            if (i.compose_or_throw(arrows[p], arrows[q]) != arrows[static_cast<std::size_t>(whole)]) ok = false;
          }
        }
        if (ok) rec(rec, r + 1);
      }
    };
    on_arrows(on_arrows, 0);
  };
  on_objects(on_objects, 0);
}

}  // namespace

std::vector<ThinDiagram> thin_diagrams(const fincat::FiniteCategory& i, std::size_t n) {
  std::vector<ThinDiagram> out;
  if (i.object_count() == 0) return out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (1u << b)) labels.push_back(b);
    const std::size_t k = labels.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != b) pairs.emplace_back(a, b);
    // Each subset of strict relations that is a partial order with a greatest element.
    for (unsigned long rel = 0; rel < (1ul << pairs.size()); ++rel) {
      std::vector<std::pair<std::size_t, std::size_t>> less;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (rel & (1ul << p)) less.emplace_back(pairs[p].second, pairs[p].first);
      bool valid = true;
      fincat::FinitePoset poset;
      try {
        poset = fincat::FinitePoset(k, less);
      } catch (const std::exception&) {
        valid = false;
      }
      if (!valid) continue;
      std::size_t relation_count = 0;
      for (std::size_t a = 0; a < k; ++a) relation_count += poset.strictly_below(a).size();
      if (relation_count != less.size()) continue;  // not transitively closed
      std::optional<std::size_t> top;
      for (std::size_t a = 0; a < k; ++a)
        if (poset.strictly_below(a).size() + 1 == k) top = a;
      if (!top) continue;
      std::vector<std::pair<std::size_t, std::size_t>> greater;
      for (auto [lo, hi] : less) greater.emplace_back(labels[hi], labels[lo]);
      std::sort(greater.begin(), greater.end());
      add_functors(i, labels, greater, labels[*top], out);
    }
  }
  return out;
}

bool is_subdiagram(const ThinDiagram& d, const ThinDiagram& e) {
  for (std::size_t j = 0; j < d.labels.size(); ++j) {
    long at = position(e.labels, d.labels[j]);
    if (at < 0 || e.objects[static_cast<std::size_t>(at)] != d.objects[j]) return false;
  }
  for (std::size_t r = 0; r < d.greater.size(); ++r) {
    long at = position(e.greater, d.greater[r]);
    if (at < 0 || e.arrows[static_cast<std::size_t>(at)] != d.arrows[r]) return false;
  }
  return true;
}

std::string describe(const ThinDiagram& d, const fincat::FiniteCategory& i) {
  std::ostringstream os;
  os << "{";
  for (std::size_t j = 0; j < d.labels.size(); ++j) os << (j ? "," : "") << d.labels[j] << ":" << i.object_name(d.objects[j]);
  os << " |";
  for (std::size_t r = 0; r < d.greater.size(); ++r)
    os << " " << d.greater[r].first << ">" << d.greater[r].second << ":" << i.morphism(d.arrows[r]).name;
  os << " | top " << d.top << "}";
  return os.str();
}

EhReport eh_m_construction(const fincat::FiniteCategory& i, std::size_t n) {
  EhReport r;
  r.category = fincat::is_directed(i);
  r.max_size = n;
  const auto all = thin_diagrams(i, n);
  r.diagrams = all.size();
  r.truncation_nonempty = !all.empty();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      bool bounded = std::any_of(all.begin(), all.end(), [&](const ThinDiagram& c) {
        return is_subdiagram(all[a], c) && is_subdiagram(all[b], c);
      });
      if (bounded) continue;
      ++r.unbounded_pairs;
      std::vector<std::size_t> common;
      std::set_intersection(all[a].labels.begin(), all[a].labels.end(), all[b].labels.begin(), all[b].labels.end(),
                            std::back_inserter(common));
      if (!common.empty()) ++r.overlapping_unbounded_pairs;
      if (!r.first_unbounded) r.first_unbounded = {describe(all[a], i), describe(all[b], i)};
    }
  r.truncation_directed = r.truncation_nonempty && r.unbounded_pairs == 0;
  return r;
}

std::string to_text(const EhReport& r) {
  std::ostringstream os;
  os << "axiom1: " << (r.category.nonempty ? "true" : "false") << "\n";
  os << "axiom2: " << (r.category.pairs_have_cones ? "true" : "false") << "\n";
  os << "axiom3: " << (r.category.parallel_pairs_equalized ? "true" : "false") << "\n";
  os << "counterexample_condition: " << (r.counterexample_condition() ? "true" : "false") << "\n";
  os << "max_size: " << r.max_size << "\n";
  os << "diagrams: " << r.diagrams << "\n";
  os << "truncation_directed: " << (r.truncation_directed ? "true" : "false") << "\n";
  os << "unbounded_pairs: " << r.unbounded_pairs << "\n";
  os << "overlapping_unbounded_pairs: " << r.overlapping_unbounded_pairs << "\n";
  if (r.first_unbounded) os << "first_unbounded: " << r.first_unbounded->first << " / " << r.first_unbounded->second << "\n";
  return os.str();
}

}  // namespace procat::graded
