#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <random>
#include <set>
#include <vector>

#include "procat/fincat.hpp"

namespace testing_support {

using procat::fincat::FinSetMap;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline FinSetMap random_map(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> images(dom);
  for (auto& v : images) v = rng.below(cod);
  return FinSetMap(dom, cod, images);
}

inline FinSetMap random_injection(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> pool(cod);
  for (std::size_t i = 0; i < cod; ++i) pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  pool.resize(dom);
  return FinSetMap(dom, cod, pool);
}

inline FinSetMap random_surjection(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> images(dom);
  for (std::size_t i = 0; i < dom; ++i) images[i] = i < cod ? i : rng.below(cod);
  std::shuffle(images.begin(), images.end(), rng.engine());
  return FinSetMap(dom, cod, images);
}

// Every map dom -> cod, in lexicographic order of image vectors.
inline std::vector<FinSetMap> all_maps(std::size_t dom, std::size_t cod) {
  std::vector<FinSetMap> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < dom; ++i) total *= cod;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> images(dom);
    std::size_t rest = code;
    for (std::size_t i = dom; i-- > 0;) {
      images[i] = rest % cod;
      rest /= cod;
    }
    out.emplace_back(dom, cod, images);
  }
  return out;
}

inline procat::fincat::FinitePoset random_poset(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(edge_probability)) pairs.emplace_back(i, j);
  return procat::fincat::FinitePoset(n, pairs);
}

// A concrete category: chosen finite sets and a composition-closed family of maps between them.
struct ConcreteCategory {
  procat::fincat::FiniteCategory category;
  std::vector<std::size_t> sizes;
  std::vector<FinSetMap> maps;  // maps[m] realizes morphism m
};

inline std::optional<ConcreteCategory> random_concrete_category(Rng& rng, std::size_t max_objects,
                                                                std::size_t max_morphisms) {
  std::size_t n = rng.between(1, max_objects);
  std::vector<std::size_t> sizes(n);
  for (auto& s : sizes) s = rng.between(1, 3);
  struct Arrow {
    std::size_t dom, cod;
    FinSetMap map;
    bool operator<(const Arrow& o) const {
      return std::tie(dom, cod, map.images()) < std::tie(o.dom, o.cod, o.map.images());
    }
  };
  std::vector<Arrow> arrows;
  std::set<Arrow> seen;
  for (std::size_t o = 0; o < n; ++o) {
    Arrow id{o, o, FinSetMap::identity(sizes[o])};
    arrows.push_back(id);
    seen.insert(id);
  }
  std::size_t generators = rng.between(0, 4);
  for (std::size_t g = 0; g < generators; ++g) {
    std::size_t d = rng.below(n), c = rng.below(n);
    Arrow a{d, c, random_map(rng, sizes[d], sizes[c])};
    if (seen.insert(a).second) arrows.push_back(a);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = arrows.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (arrows[i].cod == arrows[j].dom) {
          Arrow a{arrows[i].dom, arrows[j].cod, procat::fincat::compose(arrows[j].map, arrows[i].map)};
          if (seen.insert(a).second) {
            arrows.push_back(a);
            grew = true;
          }
        }
    if (arrows.size() > max_morphisms) return std::nullopt;
  }
  std::vector<std::string> names;
  for (std::size_t o = 0; o < n; ++o) names.push_back("o" + std::to_string(o));
  std::vector<procat::fincat::Morphism> morphisms;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    morphisms.push_back({"m" + std::to_string(k), arrows[k].dom, arrows[k].cod});
  std::vector<std::size_t> identities(n);
  for (std::size_t o = 0; o < n; ++o) identities[o] = o;
  std::map<Arrow, std::size_t> index;
  for (std::size_t k = 0; k < arrows.size(); ++k) index[arrows[k]] = k;
  std::vector<procat::fincat::CompositionEntry> table;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = 0; j < arrows.size(); ++j)
      if (arrows[i].cod == arrows[j].dom)
        table.push_back({j, i, index.at({arrows[i].dom, arrows[j].cod,
                                         procat::fincat::compose(arrows[j].map, arrows[i].map)})});
  ConcreteCategory out{procat::fincat::FiniteCategory(names, morphisms, identities, table), sizes, {}};
  for (auto& a : arrows) out.maps.push_back(a.map);
  return out;
}

}  // namespace testing_support
