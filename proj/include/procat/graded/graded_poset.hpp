#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace procat::graded {

using ElementId = std::size_t;

struct Element {
  std::size_t level = 0;  // birth level
  std::size_t index = 0;  // position within the level
  std::string key;
  std::vector<ElementId> below;  // the whole strict down-set, sorted
  std::vector<std::size_t> payload;  // construction-specific data (projection, legs, components)
};

// What a level generator emits; `below` must be down-closed and refer to earlier levels only.
struct ElementSpec {
  std::string key;
  std::vector<ElementId> below;
  std::vector<std::size_t> payload;
};

// Lazily generated cofinite poset. Element ids follow materialization order, so every element's
// down-set consists of smaller ids.
class GradedPoset {
 public:
  virtual ~GradedPoset() = default;
  GradedPoset() = default;
  GradedPoset(const GradedPoset&) = delete;
  GradedPoset& operator=(const GradedPoset&) = delete;

  virtual std::string name() const = 0;
  virtual bool declared_infinite_height() const = 0;
  // Last nonempty level for finite posets; levels beyond are empty.
  virtual std::optional<std::size_t> last_level() const { return std::nullopt; }

  ElementId level_begin(std::size_t level) const;
  ElementId level_end(std::size_t level) const;
  std::size_t level_size(std::size_t level) const { return level_end(level) - level_begin(level); }
  std::size_t count_upto(std::size_t level) const { return level_end(level); }
  std::size_t materialized_levels() const;

  // Materializes levels as needed to reach id.
  const Element& element(ElementId id) const;
  std::size_t birth(ElementId id) const { return element(id).level; }
  const std::vector<ElementId>& below(ElementId id) const { return element(id).below; }
  bool less(ElementId a, ElementId b) const;
  bool leq(ElementId a, ElementId b) const { return a == b || less(a, b); }
  std::size_t degree(ElementId id) const;
  std::optional<ElementId> find_key(const std::string& key) const;
  // Runs the generator again without touching the memo; used to check purity.
  std::vector<ElementSpec> regenerate(std::size_t level) const;

 protected:
  virtual std::vector<ElementSpec> generate_level(std::size_t level) const = 0;
  std::recursive_mutex& mutex() const { return mutex_; }

 private:
  void ensure(std::size_t level) const;
  void materialize_through(ElementId id) const;

  mutable std::recursive_mutex mutex_;
  mutable std::deque<Element> elements_;
  mutable std::vector<ElementId> level_begin_{0};
  mutable std::deque<long> degree_;
  mutable std::unordered_map<std::string, ElementId> by_key_;
};

using GradedPosetHandle = std::shared_ptr<const GradedPoset>;

// Depth budget: `depth` bounds the birth levels a construction covers on its source side,
// `search` bounds the birth levels that existence searches may visit.
struct Truncation {
  std::size_t depth = 0;
  std::size_t search = 0;
  static Truncation of(std::size_t depth) { return {depth, depth + 4}; }
};

// Elements with birth level <= level, in id order.
std::vector<ElementId> elements_upto(const GradedPoset& p, std::size_t level);

// A^n restricted to birth levels <= max_level; n = -1 gives the empty set.
std::vector<ElementId> degree_section(const GradedPoset& p, long n, std::size_t max_level);

// Every down-closed subset of the elements born at levels <= level, each sorted, listed
// lexicographically. Throws BudgetExhausted past `limit` sections.
std::vector<std::vector<ElementId>> sections(const GradedPoset& p, std::size_t level, std::size_t limit = 1u << 20);

bool is_section(const GradedPoset& p, std::span<const ElementId> subset);

// First element in id order with birth <= max_level lying above (strictly, if asked) every x.
std::optional<ElementId> first_upper_bound(const GradedPoset& p, std::span<const ElementId> xs,
                                           std::size_t max_level, bool strict);

// Structural checks at truncation: lower elements born earlier, degree <= birth, down-sets closed.
std::vector<std::string> check_cofinite(const GradedPoset& p, std::size_t level);

// Every section of levels <= level has an upper bound born at level <= level + 1.
std::optional<std::vector<ElementId>> unbounded_truncated_section(const GradedPoset& p, std::size_t level,
                                                                  std::size_t limit = 1u << 20);

}  // namespace procat::graded
