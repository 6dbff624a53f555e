#include "procat/fincat/finite_category.hpp"

#include <map>
#include <numeric>
#include <tuple>

#include "procat/error.hpp"

namespace procat::fincat {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<std::size_t> identities, std::vector<CompositionEntry> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  const std::size_t m = morphisms_.size();
  const std::size_t n = objects_.size();
  for (const Morphism& mor : morphisms_)
    require(mor.dom < n && mor.cod < n, ErrorKind::kInvalidArgument, "morphism endpoint out of range");
  require(identities_.size() == n, ErrorKind::kInvalidArgument, "one identity per object required");
  for (std::size_t id : identities_) require(id < m, ErrorKind::kInvalidArgument, "identity index out of range");
  dense_.assign(m * m, -1);
  for (const CompositionEntry& e : table_) {
    require(e.second < m && e.first < m && e.result < m, ErrorKind::kInvalidArgument,
            "composition entry index out of range");
    long& slot = dense_[e.second * m + e.first];
    if (slot < 0) slot = static_cast<long>(e.result);  // first entry wins; conflicts are reported by check_category
  }
  hom_.assign(n * n, {});
  for (std::size_t k = 0; k < m; ++k) hom_[morphisms_[k].dom * n + morphisms_[k].cod].push_back(k);
}

FiniteCategory FiniteCategory::terminal() {
  CategoryBuilder b;
  b.add_object("*");
  return b.build();
}

FiniteCategory FiniteCategory::discrete(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  return b.build();
}

FiniteCategory FiniteCategory::linear(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow;
  for (std::size_t i = 0; i <= n; ++i) arrow[{i, i}] = b.identity(i);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      arrow[{i, j}] = b.add_morphism(std::to_string(i) + "->" + std::to_string(j), i, j);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) b.set_composite(arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
  return b.build();
}

FiniteCategory FiniteCategory::parallel_pair() {
  CategoryBuilder b;
  std::size_t a = b.add_object("a");
  std::size_t c = b.add_object("b");
  b.add_morphism("f", a, c);
  b.add_morphism("g", a, c);
  return b.build();
}

FiniteCategory FiniteCategory::from_poset(const FinitePoset& p) {
  CategoryBuilder b;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<long> arrow(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) arrow[i * n + i] = static_cast<long>(b.identity(i));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p.less(v, u))
        arrow[u * n + v] = static_cast<long>(b.add_morphism(std::to_string(u) + ">" + std::to_string(v), u, v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (p.leq(v, u) && p.leq(w, v))
          b.set_composite(static_cast<std::size_t>(arrow[v * n + w]), static_cast<std::size_t>(arrow[u * n + v]),
                          static_cast<std::size_t>(arrow[u * n + w]));
  return b.build();
}

bool FiniteCategory::is_identity(std::size_t m) const {
  const Morphism& mor = morphisms_.at(m);
  return mor.dom == mor.cod && identities_[mor.dom] == m;
}

std::optional<std::size_t> FiniteCategory::compose(std::size_t second, std::size_t first) const {
  const std::size_t m = morphisms_.size();
  if (second >= m || first >= m) return std::nullopt;
  long r = dense_[second * m + first];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::size_t FiniteCategory::compose_or_throw(std::size_t second, std::size_t first) const {
  auto r = compose(second, first);
  require(r.has_value(), ErrorKind::kInvalidArgument,
          "composite undefined for " + morphisms_.at(second).name + " after " + morphisms_.at(first).name);
  return *r;
}

const std::vector<std::size_t>& FiniteCategory::hom(std::size_t from, std::size_t to) const {
  return hom_.at(from * objects_.size() + to);
}

std::optional<std::size_t> FiniteCategory::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FiniteCategory::find_morphism(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return i;
  return std::nullopt;
}

FiniteCategory FiniteCategory::cone_extend() const {
  std::vector<std::string> objects = objects_;
  std::vector<Morphism> morphisms = morphisms_;
  std::vector<std::size_t> identities = identities_;
  std::vector<CompositionEntry> table = table_;
  const std::size_t apex = objects.size();
  objects.push_back("inf");
  // leg[c] : apex -> c; the apex identity is leg[apex].
  std::vector<std::size_t> leg(apex + 1);
  for (std::size_t c = 0; c < apex; ++c) {
    leg[c] = morphisms.size();
    morphisms.push_back({"inf->" + objects_[c], apex, c});
  }
  leg[apex] = morphisms.size();
  morphisms.push_back({"id_inf", apex, apex});
  identities.push_back(leg[apex]);
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    table.push_back({m, leg[morphisms_[m].dom], leg[morphisms_[m].cod]});
  for (std::size_t c = 0; c <= apex; ++c) table.push_back({leg[c], leg[apex], leg[c]});
  return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(table));
}

std::size_t CategoryBuilder::add_object(const std::string& name) {
  std::size_t o = objects_.size();
  objects_.push_back(name);
  identities_.push_back(morphisms_.size());
  morphisms_.push_back({"id_" + name, o, o});
  return o;
}

std::size_t CategoryBuilder::add_morphism(const std::string& name, std::size_t dom, std::size_t cod) {
  require(dom < objects_.size() && cod < objects_.size(), ErrorKind::kInvalidArgument,
          "builder: morphism endpoint out of range");
  morphisms_.push_back({name, dom, cod});
  return morphisms_.size() - 1;
}

void CategoryBuilder::set_composite(std::size_t second, std::size_t first, std::size_t result) {
  table_.push_back({second, first, result});
}

FiniteCategory CategoryBuilder::build() const {
  std::vector<CompositionEntry> table = table_;
  std::map<std::pair<std::size_t, std::size_t>, bool> present;
  for (const CompositionEntry& e : table) present[{e.second, e.first}] = true;
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    std::size_t left = identities_[morphisms_[m].cod];
    std::size_t right = identities_[morphisms_[m].dom];
    if (!present[{left, m}]) {
      table.push_back({left, m, m});
      present[{left, m}] = true;
    }
    if (!present[{m, right}]) {
      table.push_back({m, right, m});
      present[{m, right}] = true;
    }
  }
  return FiniteCategory(objects_, morphisms_, identities_, std::move(table));
}

CategoryReport check_category(const FiniteCategory& c) {
  CategoryReport report;
  const std::size_t m = c.morphism_count();
  auto name = [&](std::size_t k) { return c.morphism(k).name; };
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    const Morphism& id = c.morphism(c.identity(o));
    if (id.dom != o || id.cod != o)
      report.identity_violations.push_back("identity of " + c.object_name(o) + " has wrong endpoints");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (const CompositionEntry& e : c.table()) {
    const Morphism& f = c.morphism(e.first);
    const Morphism& g = c.morphism(e.second);
    const Morphism& r = c.morphism(e.result);
    std::string label = name(e.second) + " o " + name(e.first);
    if (f.cod != g.dom) {
      report.closure_violations.push_back(label + ": entry for a non-composable pair");
      continue;
    }
    if (r.dom != f.dom || r.cod != g.cod)
      report.closure_violations.push_back(label + " = " + name(e.result) + ": wrong domain or codomain");
    auto [it, inserted] = seen.emplace(std::make_pair(e.second, e.first), e.result);
    if (!inserted && it->second != e.result)
      report.closure_violations.push_back(label + ": conflicting entries");
  }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (c.morphism(f).cod == c.morphism(g).dom && !seen.count({g, f}))
        report.closure_violations.push_back(name(g) + " o " + name(f) + ": composite missing");
  for (std::size_t f = 0; f < m; ++f) {
    const Morphism& mor = c.morphism(f);
    auto left = c.compose(c.identity(mor.cod), f);
    auto right = c.compose(f, c.identity(mor.dom));
    if (left && *left != f) report.identity_violations.push_back("id o " + name(f) + " != " + name(f));
    if (right && *right != f) report.identity_violations.push_back(name(f) + " o id != " + name(f));
  }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (c.morphism(f).cod != c.morphism(g).dom) continue;
      auto gf = c.compose(g, f);
      if (!gf) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (c.morphism(g).cod != c.morphism(h).dom) continue;
        auto hg = c.compose(h, g);
        if (!hg) continue;
        auto lhs = c.compose(*hg, f);
        auto rhs = c.compose(h, *gf);
        if (lhs && rhs && *lhs != *rhs)
          report.associativity_violations.push_back("(" + name(h) + "," + name(g) + "," + name(f) + ")");
      }
    }
  return report;
}

std::vector<std::string> check_functor(const Functor& f) {
  std::vector<std::string> out;
  const FiniteCategory& s = f.source;
  const FiniteCategory& t = f.target;
  if (f.on_objects.size() != s.object_count() || f.on_morphisms.size() != s.morphism_count()) {
    out.push_back("functor tables have wrong size");
    return out;
  }
  for (std::size_t m = 0; m < s.morphism_count(); ++m) {
    const Morphism& mor = s.morphism(m);
    const Morphism& img = t.morphism(f.on_morphisms[m]);
    if (img.dom != f.on_objects[mor.dom] || img.cod != f.on_objects[mor.cod])
      out.push_back("image of " + mor.name + " has wrong endpoints");
  }
  for (std::size_t o = 0; o < s.object_count(); ++o)
    if (f.on_morphisms[s.identity(o)] != t.identity(f.on_objects[o]))
      out.push_back("identity of " + s.object_name(o) + " not preserved");
  for (const CompositionEntry& e : s.table()) {
    auto img = t.compose(f.on_morphisms[e.second], f.on_morphisms[e.first]);
    if (!img || *img != f.on_morphisms[e.result])
      out.push_back("composite " + s.morphism(e.second).name + " o " + s.morphism(e.first).name + " not preserved");
  }
  return out;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f{c, c, {}, {}};
  f.on_objects.resize(c.object_count());
  f.on_morphisms.resize(c.morphism_count());
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

Functor poset_inclusion(const FinitePoset& whole, const std::vector<std::size_t>& elements) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (whole.less(elements[i], elements[j])) pairs.emplace_back(i, j);
  FinitePoset sub(elements.size(), pairs);
  Functor f{FiniteCategory::from_poset(sub), FiniteCategory::from_poset(whole), elements, {}};
  for (std::size_t m = 0; m < f.source.morphism_count(); ++m) {
    const Morphism& mor = f.source.morphism(m);
    const auto& hom = f.target.hom(elements[mor.dom], elements[mor.cod]);
    f.on_morphisms.push_back(hom.front());
  }
  return f;
}

OverCategory over_category(const Functor& p, std::size_t i) {
  const FiniteCategory& s = p.source;
  const FiniteCategory& t = p.target;
  OverCategory out;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> object_index;
  for (std::size_t j = 0; j < s.object_count(); ++j)
    for (std::size_t u : t.hom(p.on_objects[j], i)) {
      object_index[{j, u}] = out.objects.size();
      out.objects.emplace_back(j, u);
    }
  std::vector<std::string> names;
  for (auto [j, u] : out.objects) names.push_back(s.object_name(j) + "/" + t.morphism(u).name);
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> underlying;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> morphism_index;
  for (std::size_t a = 0; a < out.objects.size(); ++a)
    for (std::size_t b = 0; b < out.objects.size(); ++b) {
      auto [j, u] = out.objects[a];
      auto [j2, u2] = out.objects[b];
      for (std::size_t m : s.hom(j, j2)) {
        auto composite = t.compose(u2, p.on_morphisms[m]);
        if (composite && *composite == u) {
          morphism_index[{a, b, m}] = morphisms.size();
          morphisms.push_back({s.morphism(m).name, a, b});
          underlying.push_back(m);
        }
      }
    }
  std::vector<std::size_t> identities;
  for (std::size_t a = 0; a < out.objects.size(); ++a)
    identities.push_back(morphism_index.at({a, a, s.identity(out.objects[a].first)}));
  std::vector<CompositionEntry> table;
  for (std::size_t x = 0; x < morphisms.size(); ++x)
    for (std::size_t y = 0; y < morphisms.size(); ++y) {
      if (morphisms[x].cod != morphisms[y].dom) continue;
      std::size_t composite = s.compose_or_throw(underlying[y], underlying[x]);
      table.push_back({y, x, morphism_index.at({morphisms[x].dom, morphisms[y].cod, composite})});
    }
  out.category = FiniteCategory(std::move(names), std::move(morphisms), std::move(identities), std::move(table));
  return out;
}

bool is_connected(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < c.morphism_count(); ++m) parent[find(c.morphism(m).dom)] = find(c.morphism(m).cod);
  for (std::size_t o = 1; o < n; ++o)
    if (find(o) != find(0)) return false;
  return true;
}

bool is_cofinal(const Functor& p) {
  for (std::size_t i = 0; i < p.target.object_count(); ++i)
    if (!is_connected(over_category(p, i).category)) return false;
  return true;
}

}  // namespace procat::fincat
