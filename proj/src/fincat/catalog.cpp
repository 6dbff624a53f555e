#include "procat/fincat/catalog.hpp"

#include <algorithm>
#include <set>

#include "procat/fincat/directed.hpp"

namespace procat::fincat {

namespace {

using Table = std::vector<std::size_t>;  // t[x * n + y] = x∘y, element 0 is the identity

bool associative(const Table& t, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

Table relabel(const Table& t, std::size_t n, const std::vector<std::size_t>& perm) {
  Table out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
  return out;
}

FiniteCategory monoid_category(const Table& t, std::size_t n) {
  CategoryBuilder b;
  b.add_object("*");
  for (std::size_t x = 1; x < n; ++x) b.add_morphism("m" + std::to_string(x), 0, 0);
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t y = 1; y < n; ++y) b.set_composite(x, y, t[x * n + y]);
  return b.build();
}

}  // namespace

std::vector<NamedCategory> monoids(std::size_t order) {
  std::vector<NamedCategory> out;
  if (order == 0) return out;
  const std::size_t n = order;
  const std::size_t free_cells = (n - 1) * (n - 1);
  std::set<Table> seen;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < free_cells; ++i) combos *= n;
  for (std::size_t code = 0; code < combos; ++code) {
    Table t(n * n);
    for (std::size_t x = 0; x < n; ++x) t[x] = t[x * n] = x;
    std::size_t c = code;
    for (std::size_t x = 1; x < n; ++x)
      for (std::size_t y = 1; y < n; ++y) {
        t[x * n + y] = c % n;
        c /= n;
      }
    if (!associative(t, n)) continue;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Table canonical = t;
    while (std::next_permutation(perm.begin() + 1, perm.end())) canonical = std::min(canonical, relabel(t, n, perm));
    if (!seen.insert(canonical).second) continue;
    std::string name = "monoid" + std::to_string(n) + "[";
    for (std::size_t i = 0; i < canonical.size(); ++i) name += std::to_string(canonical[i]);
    out.push_back({name + "]", monoid_category(canonical, n)});
  }
  return out;
}

FiniteCategory equalized_parallel_pair() {
  CategoryBuilder b;
  std::size_t a = b.add_object("a");
  std::size_t c = b.add_object("b");
  std::size_t e = b.add_morphism("e", a, a);
  std::size_t f = b.add_morphism("f", a, c);
  std::size_t g = b.add_morphism("g", a, c);
  b.set_composite(e, e, e);
  b.set_composite(f, e, f);
  b.set_composite(g, e, f);
  return b.build();
}

FiniteCategory split_idempotent() {
  CategoryBuilder b;
  std::size_t a = b.add_object("a");
  std::size_t c = b.add_object("b");
  std::size_t e = b.add_morphism("e", a, a);
  std::size_t r = b.add_morphism("r", a, c);
  std::size_t s = b.add_morphism("s", c, a);
  b.set_composite(e, e, e);
  b.set_composite(r, e, r);
  b.set_composite(e, s, s);
  b.set_composite(s, r, e);
  b.set_composite(r, s, b.identity(c));
  return b.build();
}

std::vector<NamedCategory> small_directed_catalog() {
  std::vector<NamedCategory> out;
  out.push_back({"terminal", FiniteCategory::terminal()});
  out.push_back({"chain2", FiniteCategory::from_poset(FinitePoset::chain(2))});
  out.push_back({"chain3", FiniteCategory::from_poset(FinitePoset::chain(3))});
  out.push_back({"cherry", FiniteCategory::from_poset(FinitePoset(3, {{0, 2}, {1, 2}}))});
  for (std::size_t order = 2; order <= 3; ++order)
    for (auto& m : monoids(order))
      if (is_directed(m.category).directed()) out.push_back(std::move(m));
  out.push_back({"equalized_parallel_pair", equalized_parallel_pair()});
  out.push_back({"split_idempotent", split_idempotent()});
  return out;
}

}  // namespace procat::fincat
