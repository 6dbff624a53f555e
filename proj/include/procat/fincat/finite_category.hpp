#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "procat/fincat/finite_poset.hpp"

namespace procat::fincat {

struct Morphism {
  std::string name;
  std::size_t dom = 0;
  std::size_t cod = 0;
};

// second ∘ first = result
struct CompositionEntry {
  std::size_t second = 0;
  std::size_t first = 0;
  std::size_t result = 0;
};

// Explicit finite category. The constructor stores the data as given; check_category reports defects.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<std::size_t> identities, std::vector<CompositionEntry> table);

  static FiniteCategory empty() { return {}; }
  static FiniteCategory terminal();
  static FiniteCategory discrete(std::size_t n);
  // Objects 0..n with a unique morphism i -> j whenever i <= j.
  static FiniteCategory linear(std::size_t n);
  // Two objects a, b and two non-identity arrows f, g : a -> b.
  static FiniteCategory parallel_pair();
  // The poset as a category: one morphism u -> v exactly when u >= v.
  static FiniteCategory from_poset(const FinitePoset& p);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::string& object_name(std::size_t o) const { return objects_.at(o); }
  const Morphism& morphism(std::size_t m) const { return morphisms_.at(m); }
  std::size_t identity(std::size_t o) const { return identities_.at(o); }
  bool is_identity(std::size_t m) const;
  const std::vector<CompositionEntry>& table() const noexcept { return table_; }

  std::optional<std::size_t> compose(std::size_t second, std::size_t first) const;
  // Throws InvalidArgument when the composite is undefined.
  std::size_t compose_or_throw(std::size_t second, std::size_t first) const;
  // Morphisms from -> to in index order.
  const std::vector<std::size_t>& hom(std::size_t from, std::size_t to) const;

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_morphism(const std::string& name) const;

  // Adjoins a fresh object at index object_count() with a unique arrow into every object.
  FiniteCategory cone_extend() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<CompositionEntry> table_;
  std::vector<long> dense_;  // morphism_count^2, -1 when undefined
  std::vector<std::vector<std::size_t>> hom_;
};

// Incremental construction; composites with identities are filled in automatically.
class CategoryBuilder {
 public:
  std::size_t add_object(const std::string& name);
  std::size_t add_morphism(const std::string& name, std::size_t dom, std::size_t cod);
  void set_composite(std::size_t second, std::size_t first, std::size_t result);
  std::size_t identity(std::size_t o) const { return identities_.at(o); }
  FiniteCategory build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<CompositionEntry> table_;
};

struct CategoryReport {
  std::vector<std::string> closure_violations;
  std::vector<std::string> identity_violations;
  std::vector<std::string> associativity_violations;
  bool ok() const {
    return closure_violations.empty() && identity_violations.empty() && associativity_violations.empty();
  }
};

CategoryReport check_category(const FiniteCategory& c);

// A functor given on objects and morphisms.
struct Functor {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<std::size_t> on_objects;
  std::vector<std::size_t> on_morphisms;
};

std::vector<std::string> check_functor(const Functor& f);
Functor identity_functor(const FiniteCategory& c);
// Inclusion of a subposet given by an increasing list of elements, as a functor of poset categories.
Functor poset_inclusion(const FinitePoset& whole, const std::vector<std::size_t>& elements);

// Objects of p_{/i} are pairs (j, u : p(j) -> i); morphisms m : j -> j' with u' ∘ p(m) = u.
struct OverCategory {
  FiniteCategory category;
  std::vector<std::pair<std::size_t, std::size_t>> objects;
};

OverCategory over_category(const Functor& p, std::size_t i);
bool is_connected(const FiniteCategory& c);  // nonempty and zigzag-connected
bool is_cofinal(const Functor& p);

}  // namespace procat::fincat
