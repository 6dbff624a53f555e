#include "procat/procli/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace procat::procli {

using fincat::FinSetMap;
using graded::ElementId;
using probar::OneMorphism;
using probar::ProBarObject;
using probar::ProBarObjectHandle;

namespace {

// Runs a reader, turning schema mismatches inside nlohmann into ParseError.
template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParseError, std::string(what) + ": " + e.what());
  }
}

std::size_t natural(const json& j, const char* what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), ErrorKind::kParseError,
          std::string(what) + ": expected a natural number");
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  require(j.is_object(), ErrorKind::kParseError, std::string("expected an object with field ") + key);
  auto it = j.find(key);
  require(it != j.end(), ErrorKind::kParseError, std::string("missing field ") + key);
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  require(a.is_array(), ErrorKind::kParseError, std::string("field ") + key + " must be an array");
  return a;
}

const graded::FinitePosetIndex& finite_index_of(const graded::GradedPoset& p) {
  const auto* f = dynamic_cast<const graded::FinitePosetIndex*>(&p);
  require(f != nullptr, ErrorKind::kInvalidArgument, "expected a finite poset index");
  return *f;
}

// Arrows for every strict pair of a finite poset from arrows on covering pairs, composed along
// any chain of covers; `given` entries on non-covering pairs must agree with the composite.
using PairArrows = std::map<std::pair<std::size_t, std::size_t>, FinSetMap>;

ProBarObjectHandle object_over(const std::shared_ptr<const graded::FinitePosetIndex>& index,
                               const std::vector<std::size_t>& values, const PairArrows& given) {
  const auto& p = index->poset();
  const std::size_t n = p.size();
  require(values.size() == n, ErrorKind::kParseError, "one value per poset element expected");
  std::vector<std::vector<std::size_t>> covered(n);  // covered[u]: elements covered by u
  for (auto [lower, upper] : p.covering_pairs()) covered[upper].push_back(lower);
  PairArrows all;
  for (std::size_t u : p.degree_order()) {
    for (std::size_t c : covered[u]) {
      auto it = given.find({u, c});
      require(it != given.end(), ErrorKind::kParseError,
              "missing arrow " + std::to_string(u) + " -> " + std::to_string(c));
      all.emplace(std::make_pair(u, c), it->second);
    }
    for (std::size_t v : p.strictly_below(u)) {
      if (all.count({u, v})) continue;
      for (std::size_t c : covered[u]) {
        if (!p.leq(v, c)) continue;
        all.emplace(std::make_pair(u, v), fincat::compose(all.at({c, v}), all.at({u, c})));
        break;
      }
    }
  }
  for (const auto& [pair, map] : given) {
    require(p.less(pair.second, pair.first), ErrorKind::kParseError,
            "arrow " + std::to_string(pair.first) + " -> " + std::to_string(pair.second) + " is not a strict relation");
    require(values[pair.first] == map.dom() && values[pair.second] == map.cod(), ErrorKind::kPreconditionViolated,
            "arrow endpoints disagree with the values");
    require(all.at(pair) == map, ErrorKind::kPreconditionViolated, "diagram is not functorial");
  }
  std::vector<std::size_t> by_id(n);
  std::map<std::pair<ElementId, ElementId>, FinSetMap> arrows;
  for (std::size_t e = 0; e < n; ++e) by_id[index->id_of(e)] = values[e];
  for (const auto& [pair, map] : all) {
    require(values[pair.first] == map.dom() && values[pair.second] == map.cod(), ErrorKind::kPreconditionViolated,
            "arrow endpoints disagree with the values");
    arrows.emplace(std::make_pair(index->id_of(pair.first), index->id_of(pair.second)), map);
  }
  auto x = ProBarObject::tabulated(index, std::move(by_id), std::move(arrows));
  const auto failures = probar::check_functorial(*x, index->last_level().value_or(0));
  require(failures.empty(), ErrorKind::kPreconditionViolated, failures.empty() ? "" : failures.front());
  return x;
}

struct ObjectData {
  std::vector<std::size_t> values;
  PairArrows arrows;
};

ObjectData object_data_from_json(const json& j) {
  ObjectData d;
  for (const auto& v : array_field(j, "values")) d.values.push_back(natural(v, "value"));
  for (const auto& a : array_field(j, "arrows")) {
    const std::size_t u = natural(field(a, "upper"), "upper");
    const std::size_t v = natural(field(a, "lower"), "lower");
    require(!d.arrows.count({u, v}), ErrorKind::kParseError, "duplicate arrow");
    d.arrows.emplace(std::make_pair(u, v), finset_map_from_json(field(a, "map")));
  }
  return d;
}

json object_data_json(const graded::FinitePosetIndex& index, const ProBarObject& x) {
  const auto& p = index.poset();
  json values = json::array(), arrows = json::array();
  for (std::size_t e = 0; e < p.size(); ++e) values.push_back(x.value(index.id_of(e)));
  for (auto [lower, upper] : p.covering_pairs())
    arrows.push_back({{"upper", upper}, {"lower", lower}, {"map", to_json(x.arrow(index.id_of(upper), index.id_of(lower)))}});
  return {{"values", values}, {"arrows", arrows}};
}

std::vector<FinSetMap> components_by_id(const graded::FinitePosetIndex& index, const json& list) {
  const std::size_t n = index.poset().size();
  require(list.is_array() && list.size() == n, ErrorKind::kParseError, "one component per poset element expected");
  std::vector<FinSetMap> out(n);
  for (std::size_t e = 0; e < n; ++e) out[index.id_of(e)] = finset_map_from_json(list[e]);
  return out;
}

OneMorphism checked_natural(ProBarObjectHandle x, ProBarObjectHandle y, std::vector<FinSetMap> components,
                            std::size_t depth) {
  for (std::size_t e = 0; e < components.size(); ++e)
    require(components[e].dom() == x->value(e) && components[e].cod() == y->value(e), ErrorKind::kPreconditionViolated,
            "component endpoints disagree with the values");
  OneMorphism f = factor::natural_from_table(std::move(x), std::move(y), std::move(components));
  const auto failures = probar::check_natural(f, depth);
  require(failures.empty(), ErrorKind::kPreconditionViolated, failures.empty() ? "" : failures.front());
  return f;
}

}  // namespace

json to_json(const FinSetMap& f) { return {{"dom", f.dom()}, {"cod", f.cod()}, {"images", f.images()}}; }

FinSetMap finset_map_from_json(const json& j) {
  return guarded("map", [&] {
    const std::size_t dom = natural(field(j, "dom"), "dom");
    const std::size_t cod = natural(field(j, "cod"), "cod");
    std::vector<std::size_t> images;
    for (const auto& v : array_field(j, "images")) {
      images.push_back(natural(v, "image"));
      require(images.back() < cod, ErrorKind::kParseError, "map image out of codomain range");
    }
    require(images.size() == dom, ErrorKind::kParseError, "map image count differs from domain size");
    return FinSetMap(dom, cod, std::move(images));
  });
}

json to_json(const fincat::FiniteCategory& c) {
  json objects = json::array(), morphisms = json::array(), compose = json::array();
  for (std::size_t o = 0; o < c.object_count(); ++o) objects.push_back(c.object_name(o));
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mm = c.morphism(m);
    morphisms.push_back({{"id", mm.name}, {"dom", c.object_name(mm.dom)}, {"cod", c.object_name(mm.cod)}});
  }
  for (const auto& e : c.table()) {
    if (c.is_identity(e.second) || c.is_identity(e.first)) continue;
    compose.push_back({c.morphism(e.second).name, c.morphism(e.first).name, c.morphism(e.result).name});
  }
  return {{"objects", objects}, {"morphisms", morphisms}, {"compose", compose}};
}

fincat::FiniteCategory category_from_json(const json& j) {
  return guarded("category", [&] {
    fincat::CategoryBuilder b;
    std::map<std::string, std::size_t> objects, morphisms;
    for (const auto& o : array_field(j, "objects")) {
      require(o.is_string(), ErrorKind::kParseError, "object names must be strings");
      const auto name = o.get<std::string>();
      require(!objects.count(name), ErrorKind::kParseError, "duplicate object " + name);
      const std::size_t id = b.add_object(name);
      objects.emplace(name, id);
      morphisms.emplace("id_" + name, b.identity(id));
    }
    auto object = [&](const json& n) {
      require(n.is_string() && objects.count(n.get<std::string>()), ErrorKind::kParseError, "unknown object");
      return objects.at(n.get<std::string>());
    };
    for (const auto& m : array_field(j, "morphisms")) {
      const json& id = field(m, "id");
      require(id.is_string(), ErrorKind::kParseError, "morphism ids must be strings");
      const auto name = id.get<std::string>();
      require(!morphisms.count(name), ErrorKind::kParseError, "duplicate morphism " + name);
      morphisms.emplace(name, b.add_morphism(name, object(field(m, "dom")), object(field(m, "cod"))));
    }
    auto morphism = [&](const json& n) {
      require(n.is_string() && morphisms.count(n.get<std::string>()), ErrorKind::kParseError, "unknown morphism");
      return morphisms.at(n.get<std::string>());
    };
    if (j.contains("compose"))
      for (const auto& e : array_field(j, "compose")) {
        require(e.is_array() && e.size() == 3, ErrorKind::kParseError, "composition entries are [g, f, gf]");
        b.set_composite(morphism(e[0]), morphism(e[1]), morphism(e[2]));
      }
    fincat::FiniteCategory c = b.build();
    const auto report = fincat::check_category(c);
    if (!report.ok()) {
      std::string first = !report.closure_violations.empty()    ? report.closure_violations.front()
                          : !report.identity_violations.empty() ? report.identity_violations.front()
                                                                : "associativity fails at " + report.associativity_violations.front();
      fail(ErrorKind::kPreconditionViolated, "not a category: " + first);
    }
    return c;
  });
}

json to_json(const fincat::Diagram& d) {
  const auto& c = d.shape();
  json values = json::object(), arrows = json::object();
  for (std::size_t o = 0; o < c.object_count(); ++o) values[c.object_name(o)] = d.value(o);
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) arrows[c.morphism(m).name] = to_json(d.arrow(m));
  return {{"shape", to_json(c)}, {"values", values}, {"arrows", arrows}};
}

fincat::Diagram diagram_from_json(const json& j) {
  return guarded("diagram", [&] {
    fincat::FiniteCategory c = category_from_json(field(j, "shape"));
    const json& values = field(j, "values");
    const json& arrows = field(j, "arrows");
    require(values.is_object() && arrows.is_object(), ErrorKind::kParseError, "values and arrows are keyed by name");
    std::vector<std::size_t> v(c.object_count());
    for (std::size_t o = 0; o < c.object_count(); ++o) v[o] = natural(field(values, c.object_name(o).c_str()), "value");
    std::vector<FinSetMap> a(c.morphism_count());
    for (std::size_t m = 0; m < c.morphism_count(); ++m) {
      const auto& mm = c.morphism(m);
      a[m] = c.is_identity(m) ? FinSetMap::identity(v[mm.dom]) : finset_map_from_json(field(arrows, mm.name.c_str()));
      require(a[m].dom() == v[mm.dom] && a[m].cod() == v[mm.cod], ErrorKind::kPreconditionViolated,
              "arrow " + mm.name + " disagrees with the values");
    }
    fincat::Diagram d(std::move(c), std::move(v), std::move(a));
    const auto failures = fincat::check_functorial(d);
    require(failures.empty(), ErrorKind::kPreconditionViolated, failures.empty() ? "" : failures.front());
    return d;
  });
}

json to_json(const fincat::FinitePoset& p) {
  json less = json::array();
  for (auto [lower, upper] : p.covering_pairs()) less.push_back({lower, upper});
  return {{"size", p.size()}, {"less", less}};
}

fincat::FinitePoset poset_from_json(const json& j) {
  return guarded("poset", [&] {
    const std::size_t n = natural(field(j, "size"), "size");
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (const auto& e : array_field(j, "less")) {
      require(e.is_array() && e.size() == 2, ErrorKind::kParseError, "relations are [u, v] with u < v");
      const std::size_t u = natural(e[0], "u"), v = natural(e[1], "v");
      require(u < n && v < n && u != v, ErrorKind::kParseError, "relation out of range");
      less.emplace_back(u, v);
    }
    try {
      return fincat::FinitePoset(n, less);
    } catch (const Error& e) {
      fail(ErrorKind::kParseError, std::string("poset: ") + e.what());
    }
  });
}

std::vector<ElementId> covers_of(const graded::GradedPoset& p, ElementId e) {
  const auto& below = p.below(e);
  std::vector<ElementId> out;
  for (ElementId s : below) {
    const bool maximal = std::none_of(below.begin(), below.end(), [&](ElementId r) { return p.less(s, r); });
    if (maximal) out.push_back(s);
  }
  return out;
}

json truncated_poset_json(const graded::GradedPoset& p, std::size_t depth) {
  json levels = json::array();
  for (std::size_t l = 0; l <= depth; ++l) {
    json level = json::array();
    for (ElementId e = p.level_begin(l); e < p.level_end(l); ++e) {
      json lower = json::array();
      for (ElementId c : covers_of(p, e)) lower.push_back(p.element(c).key);
      level.push_back({{"key", p.element(e).key}, {"lower", lower}});
    }
    levels.push_back(level);
  }
  return {{"name", p.name()}, {"depth", depth}, {"levels", levels}};
}

std::string truncated_poset_dot(const graded::GradedPoset& p, std::size_t depth) {
  std::ostringstream out;
  out << "digraph poset {\n";
  for (ElementId e = 0; e < p.count_upto(depth); ++e) {
    const auto& el = p.element(e);
    out << "  n" << e << " [label=\"" << el.level << ":" << el.index << "\"];\n";
  }
  for (ElementId e = 0; e < p.count_upto(depth); ++e)
    for (ElementId c : covers_of(p, e)) out << "  n" << e << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

json truncated_object_json(const ProBarObject& x, std::size_t depth) {
  const auto& index = *x.index();
  json elements = json::array();
  for (ElementId e = 0; e < index.count_upto(depth); ++e) {
    json arrows = json::array();
    for (ElementId c : covers_of(index, e)) arrows.push_back({{"lower", c}, {"map", to_json(x.arrow(e, c))}});
    elements.push_back({{"id", e}, {"level", index.birth(e)}, {"value", x.value(e)}, {"arrows", arrows}});
  }
  return {{"depth", depth}, {"elements", elements}};
}

json truncated_morphism_json(const OneMorphism& f, std::size_t depth) {
  json alpha = json::array(), components = json::array();
  for (ElementId b = 0; b < f.target()->index()->count_upto(depth); ++b) {
    alpha.push_back(f.alpha()(b));
    components.push_back(to_json(f.phi(b)));
  }
  return {{"depth", depth}, {"alpha", alpha}, {"components", components}};
}

json to_json(const probar::EqualityVerdict& v, std::size_t depth) {
  return {{"verdict", v.verdict == probar::Verdict::kEqual ? "equal" : "unknown"},
          {"witness", v.witness ? truncated_morphism_json(*v.witness, depth) : json(nullptr)},
          {"reason", v.reason}};
}

PosetArrowInput poset_arrow_from_json(const json& j) {
  return guarded("poset arrow", [&] {
    auto index = std::make_shared<const graded::FinitePosetIndex>(poset_from_json(field(j, "poset")));
    require(index->poset().size() > 0, ErrorKind::kParseError, "the poset must be nonempty");
    const std::size_t depth = index->last_level().value_or(0);
    const ObjectData s = object_data_from_json(field(j, "source"));
    const ObjectData t = object_data_from_json(field(j, "target"));
    auto x = object_over(index, s.values, s.arrows);
    auto y = object_over(index, t.values, t.arrows);
    OneMorphism f = checked_natural(x, y, components_by_id(*index, array_field(j, "components")), depth);
    return PosetArrowInput{index, std::move(f), depth};
  });
}

json poset_arrow_json(const OneMorphism& f) {
  const auto& index = finite_index_of(*f.target()->index());
  json components = json::array();
  for (std::size_t e = 0; e < index.poset().size(); ++e) components.push_back(to_json(f.phi(index.id_of(e))));
  return {{"poset", to_json(index.poset())},
          {"source", object_data_json(index, *f.source())},
          {"target", object_data_json(index, *f.target())},
          {"components", components}};
}

json to_json(const factor::ReedyFactorization& r) {
  const auto& index = finite_index_of(*r.input.target()->index());
  json elements = json::array();
  for (std::size_t e = 0; e < index.poset().size(); ++e) {
    const ElementId t = index.id_of(e);
    json arrows = json::array();
    for (ElementId c : covers_of(index, t))
      arrows.push_back({{"lower", index.poset_element(c)}, {"map", to_json(r.middle->arrow(t, c))}});
    elements.push_back({{"element", e},
                        {"level", index.birth(t)},
                        {"H", r.middle->value(t)},
                        {"H_arrows", arrows},
                        {"g", to_json(r.lw_part.phi(t))},
                        {"h", to_json(r.sp_part.phi(t))}});
  }
  return {{"depth", r.depth}, {"input", poset_arrow_json(r.input)}, {"elements", elements}};
}

std::vector<std::string> recheck_reedy(const json& j) {
  return guarded("factorization", [&] {
    const PosetArrowInput in = poset_arrow_from_json(field(j, "input"));
    const auto index = std::dynamic_pointer_cast<const graded::FinitePosetIndex>(in.index);
    const json& elements = array_field(j, "elements");
    const std::size_t n = index->poset().size();
    require(elements.size() == n, ErrorKind::kParseError, "one entry per poset element expected");
    ObjectData mid;
    mid.values.resize(n);
    for (const auto& el : elements) {
      const std::size_t e = natural(field(el, "element"), "element");
      require(e < n, ErrorKind::kParseError, "element out of range");
      mid.values[e] = natural(field(el, "H"), "H");
      for (const auto& a : array_field(el, "H_arrows"))
        mid.arrows.emplace(std::make_pair(e, natural(field(a, "lower"), "lower")), finset_map_from_json(field(a, "map")));
    }
    auto h_obj = object_over(index, mid.values, mid.arrows);
    json g = json::array(), h = json::array();
    for (std::size_t e = 0; e < n; ++e) {
      g.push_back(field(elements[e], "g"));
      h.push_back(field(elements[e], "h"));
    }
    const factor::ReedyFactorization r{
        in.arrow, h_obj, checked_natural(in.arrow.source(), h_obj, components_by_id(*index, g), in.depth),
        checked_natural(h_obj, in.arrow.target(), components_by_id(*index, h), in.depth), in.depth, {}};
    return factor::check_reedy(r, factor::MorphismPredicate::injective(), factor::MorphismPredicate::surjective());
  });
}

json to_json(const fincat::LiftingSquare& sq) {
  return {{"left", to_json(sq.left)}, {"right", to_json(sq.right)}, {"top", to_json(sq.top)}, {"bottom", to_json(sq.bottom)}};
}

fincat::LiftingSquare square_from_json(const json& j) {
  return guarded("square", [&] {
    return fincat::LiftingSquare{finset_map_from_json(field(j, "left")), finset_map_from_json(field(j, "right")),
                                 finset_map_from_json(field(j, "top")), finset_map_from_json(field(j, "bottom"))};
  });
}

json to_json(const factor::RetractDiagram& r) {
  return {{"retract", to_json(r.retract)},     {"of", to_json(r.of)},
          {"source_in", to_json(r.source_in)}, {"source_out", to_json(r.source_out)},
          {"target_in", to_json(r.target_in)}, {"target_out", to_json(r.target_out)}};
}

factor::RetractDiagram retract_from_json(const json& j) {
  return guarded("retract", [&] {
    return factor::RetractDiagram{
        finset_map_from_json(field(j, "retract")),   finset_map_from_json(field(j, "of")),
        finset_map_from_json(field(j, "source_in")), finset_map_from_json(field(j, "source_out")),
        finset_map_from_json(field(j, "target_in")), finset_map_from_json(field(j, "target_out"))};
  });
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::kParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace procat::procli
